#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gauge_radii/geometry.hpp"
#include "gauge_radii/radii.hpp"
#include "gauge_radii/tolerances.hpp"

namespace gauge_radii {

/// Inequality in diagram coordinates x = r/R, y = D/(2R). slack >= 0 means it holds.
struct DiagramInequality {
    std::string name;
    std::function<double(double x, double y)> slack;
};

enum class CurveStatus { Proved, Conjectured };

struct BoundaryCurve {
    std::string name;
    CurveStatus status = CurveStatus::Proved;
    /// t in [0,1] -> (x, y)
    std::function<Point(double t)> at;
};

struct DiagramSpec {
    GaugeKind gauge;
    std::vector<DiagramInequality> inequalities;
    std::vector<BoundaryCurve> curves;
};

/// Triangle, square, pentagon, hexagon and disk gauges. Anything else throws
/// Error(Unsupported) naming the supported kinds.
DiagramSpec boundary_spec(const GaugeKind& kind);

/// Inequalities valid for every gauge of asymmetry s, drawn against the
/// triangle-gauge boundary, which is the union of all diagrams.
DiagramSpec universal_spec(double s);

enum class Region { Inside, Boundary, Outside };

struct Classification {
    Region region = Region::Inside;
    std::vector<std::string> tight;
    std::vector<std::string> violated;
};

Classification classify(const DiagramSpec& spec, double x, double y, double tol = 1e-6);

std::string to_string(Region r);
std::string to_string(CurveStatus s);

struct InequalityResult {
    std::string name;
    double slack = 0.0;
    double tolerance = 0.0;

    bool passed() const { return slack >= -tolerance; }
};

/// Every inequality applicable to the profile: the general ones, the
/// symmetric-gauge ones when s = 1 within 1e-7, and gauge-specific ones
/// when the kind is known. Disk gauges add pi^2/(2m^2) to the tolerance.
std::vector<InequalityResult> inequality_suite(const RadiiProfile& p, const std::optional<GaugeKind>& kind,
                                               const Tolerances& tol = {});
std::vector<InequalityResult> inequality_suite(const ConvexPolygon& k, const ConvexPolygon& c,
                                               const std::optional<GaugeKind>& kind = std::nullopt,
                                               const Tolerances& tol = {});

/// Entry with the smallest slack; null for an empty list.
const InequalityResult* worst(const std::vector<InequalityResult>& results);

}  // namespace gauge_radii
