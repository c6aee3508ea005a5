#include "gauge_radii/sampling.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "gauge_radii/diagram.hpp"
#include "gauge_radii/error.hpp"
#include "gauge_radii/families.hpp"

namespace gauge_radii {

SampleStrategy parse_strategy(std::string_view text) {
    if (text == "hull") return SampleStrategy::Hull;
    if (text == "interp" || text == "interpolation") return SampleStrategy::Interpolation;
    if (text == "mix" || text == "family-mix") return SampleStrategy::Mix;
    throw Error(ErrorCode::Unsupported, "unknown strategy '" + std::string(text) + "'; expected hull, interp or mix");
}

std::string to_string(SampleStrategy s) {
    switch (s) {
    case SampleStrategy::Hull: return "hull";
    case SampleStrategy::Interpolation: return "interp";
    case SampleStrategy::Mix: return "mix";
    }
    return "?";
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
}

double SampleRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

int SampleRng::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

ConvexPolygon random_hull(SampleRng& rng) {
    const int count = rng.integer(3, 12);
    std::vector<Point> pts;
    pts.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double x = rng.uniform(-1, 1);
        pts.push_back({x, rng.uniform(-1, 1)});
    }
    return convex_hull(pts);
}

namespace {

std::optional<ConvexPolygon> random_family_member(const GaugeKind& kind, SampleRng& rng) {
    if (kind.tag == GaugeKind::Tag::Triangle) return triangle_family(rng.uniform(1, 2));
    if (kind.is_hexagon()) return hexagon_family(rng.uniform());
    if (kind.is_pentagon()) return pentagon_family(rng.uniform(0, 0.5));
    return std::nullopt;
}

double grid_lambda(SampleRng& rng) { return rng.integer(0, 10) / 10.0; }

}  // namespace

ConvexPolygon sample_body(const Gauge& gauge, const std::optional<GaugeKind>& kind, std::uint64_t seed,
                          std::uint64_t index, SampleStrategy strategy, std::string* source) {
    SampleRng rng(seed, index);
    auto tag = [&](const char* s) {
        if (source) *source = s;
    };
    const ConvexPolygon& c = gauge.body();
    switch (strategy) {
    case SampleStrategy::Hull:
        tag("hull");
        return random_hull(rng);
    case SampleStrategy::Interpolation: {
        tag("interp");
        const auto k0 = random_hull(rng);
        return interpolate(optimal_position(k0, gauge), c, grid_lambda(rng));
    }
    case SampleStrategy::Mix:
        break;
    }
    switch (index % 5) {
    case 0:
        tag("hull");
        return random_hull(rng);
    case 1: {
        tag("interp");
        const auto k0 = random_hull(rng);
        return interpolate(optimal_position(k0, gauge), c, grid_lambda(rng));
    }
    case 2: {
        tag("segment");
        const double x0 = rng.uniform(-1, 1), y0 = rng.uniform(-1, 1);
        const double x1 = rng.uniform(-1, 1), y1 = rng.uniform(-1, 1);
        const std::vector<Point> seg{{x0, y0}, {x1, y1}};
        return interpolate(optimal_position(convex_hull(seg), gauge), c, rng.uniform());
    }
    case 3:
        if (kind) {
            if (auto member = random_family_member(*kind, rng)) {
                tag("family");
                return interpolate(optimal_position(*member, gauge), c, grid_lambda(rng));
            }
        }
        [[fallthrough]];
    default:
        tag("reflection");
        return interpolate(optimal_position(negate(c), gauge), c, rng.uniform());
    }
}

SamplePoint evaluate_sample(const ConvexPolygon& k, const Gauge& gauge, const std::optional<GaugeKind>& kind) {
    const auto p = radii_profile(k, gauge);
    const auto results = inequality_suite(p, kind, gauge.tolerances());
    SamplePoint out;
    out.x = p.x;
    out.y = p.y;
    out.r = p.r;
    out.D = p.D;
    out.R = p.R;
    out.s = p.s;
    if (const auto* w = worst(results)) {
        out.worst_inequality = w->name;
        out.worst_slack = w->slack;
    }
    return out;
}

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
}

std::vector<SamplePoint> sample_bodies(const Gauge& gauge, const std::optional<GaugeKind>& kind,
                                       std::size_t n, std::uint64_t seed, SampleStrategy strategy,
                                       unsigned threads) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample count must be at least 1");
    std::vector<SamplePoint> out(n);
    parallel_for(n, threads, [&](std::size_t i) {
        std::string source;
        const auto body = sample_body(gauge, kind, seed, i, strategy, &source);
        out[i] = evaluate_sample(body, gauge, kind);
        out[i].index = i;
        out[i].source = std::move(source);
    });
    return out;
}

std::vector<SamplePoint> family_points(const Gauge& gauge, const GaugeKind& kind, int grid) {
    const auto members = family_members(kind, grid);
    std::vector<SamplePoint> out(members.size());
    parallel_for(members.size(), 0, [&](std::size_t i) {
        out[i] = evaluate_sample(members[i].body, gauge, kind);
        out[i].index = i;
        out[i].source = members[i].family;
    });
    return out;
}

}  // namespace gauge_radii
