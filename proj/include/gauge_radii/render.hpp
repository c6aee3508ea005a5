#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gauge_radii/diagram.hpp"
#include "gauge_radii/sampling.hpp"

namespace gauge_radii {

struct DiagramData {
    std::string gauge;
    SampleStrategy strategy = SampleStrategy::Hull;
    std::uint64_t seed = 0;
    std::vector<SamplePoint> samples;
    /// Extremal family points, drawn highlighted and written with strategy "family".
    std::vector<SamplePoint> families;
    std::optional<DiagramSpec> spec;
};

/// Columns: gauge, strategy, seed, index, x, y, r, D, R, s, worst_inequality,
/// worst_slack. Reals are written with 17 significant digits.
void write_csv(std::ostream& os, const DiagramData& data);

/// Self-contained SVG: unit-square axes, sample cloud, proved curves solid,
/// conjectured curves dashed, family points highlighted.
void write_svg(std::ostream& os, const DiagramData& data);

}  // namespace gauge_radii
