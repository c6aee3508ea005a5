#pragma once

#include <string_view>

namespace gauge_radii {

/// Numerical tolerances shared by every module.
///
/// `geo` governs vertex dedup and collinearity merging, `lp` the solver's
/// feasibility and tight-constraint report, `cert` contact detection for
/// containment certificates, `classify` boundary membership in (x, y), and
/// `inequality` the pass threshold on signed inequality slacks.
struct Tolerances {
    double geo = 1e-9;
    double lp = 1e-9;
    double cert = 1e-6;
    double classify = 1e-6;
    double inequality = 1e-7;
};

/// Applies an override string to `base`.
///
/// Accepts either a single number, which replaces `inequality` and `classify`,
/// or a comma separated list of `key=value` pairs with keys geo, lp, cert,
/// classify, inequality. Throws gauge_radii::Error on malformed input or
/// non-positive values.
Tolerances apply_tolerance_override(Tolerances base, std::string_view spec);

}  // namespace gauge_radii
