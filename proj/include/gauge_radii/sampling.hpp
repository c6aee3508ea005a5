#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gauge_radii/geometry.hpp"
#include "gauge_radii/radii.hpp"

namespace gauge_radii {

enum class SampleStrategy { Hull, Interpolation, Mix };

/// hull, interp (or interpolation), mix.
SampleStrategy parse_strategy(std::string_view text);
std::string to_string(SampleStrategy s);

struct SamplePoint {
    std::uint64_t index = 0;
    /// How the body was produced: hull, interp, family name, ...
    std::string source;
    double x = 0.0;
    double y = 0.0;
    double r = 0.0;
    double D = 0.0;
    double R = 0.0;
    double s = 1.0;
    std::string worst_inequality;
    double worst_slack = 0.0;
};

/// Random stream for one sample, seeded from (seed, index) only, so results
/// do not depend on scheduling. Draws are computed from raw engine bits to
/// stay identical across standard library implementations.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, std::uint64_t index);

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    int integer(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

/// Hull of 3..12 uniform points in [-1,1]^2.
ConvexPolygon random_hull(SampleRng& rng);

/// Builds body number `index`; exposed so tests can rebuild a sample.
ConvexPolygon sample_body(const Gauge& gauge, const std::optional<GaugeKind>& kind, std::uint64_t seed,
                          std::uint64_t index, SampleStrategy strategy, std::string* source = nullptr);

/// n samples evaluated in parallel; result order is by index. threads = 0
/// picks the hardware concurrency. Throws for n = 0.
std::vector<SamplePoint> sample_bodies(const Gauge& gauge, const std::optional<GaugeKind>& kind,
                                       std::size_t n, std::uint64_t seed, SampleStrategy strategy,
                                       unsigned threads = 0);

/// Diagram point and worst inequality for one body.
SamplePoint evaluate_sample(const ConvexPolygon& k, const Gauge& gauge, const std::optional<GaugeKind>& kind);

/// Catalogued extremal bodies of the gauge evaluated on a parameter grid;
/// `source` holds the family name. Empty when the kind has no family.
std::vector<SamplePoint> family_points(const Gauge& gauge, const GaugeKind& kind, int grid);

/// Runs fn(i) for i in [0, n) on a small thread pool; the first exception
/// thrown by any task is rethrown.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace gauge_radii
