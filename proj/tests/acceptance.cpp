// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
// Inequalities are written out here from (r, D, R, s) rather than taken from
// the diagram module, so a typo there cannot hide behind the same typo here.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "gauge_radii/containment.hpp"
#include "gauge_radii/error.hpp"
#include "gauge_radii/families.hpp"
#include "gauge_radii/radii.hpp"
#include "gauge_radii/render.hpp"
#include "gauge_radii/sampling.hpp"

using namespace gauge_radii;

namespace {

const double kSqrt5 = std::sqrt(5.0);
const double kSqrt3 = std::sqrt(3.0);

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Keeps the worst observation of a quantity that must stay <= limit.
struct Worst {
    double value = -INFINITY;
    std::string where;
    std::mutex m;

    void add(double v, const std::string& w) {
        std::lock_guard lock(m);
        if (v > value) {
            value = v;
            where = w;
        }
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double max_err(DiagramPoint got, Point want) { return std::max(std::abs(got.x - want.x), std::abs(got.y - want.y)); }

// Random gauge number i of the mixed pool: the catalogue plus random bodies
// and random symmetric bodies.
ConvexPolygon mixed_gauge(SampleRng& rng, std::uint64_t i) {
    switch (i % 8) {
    case 0: return make_gauge(GaugeKind::triangle());
    case 1: return make_gauge(GaugeKind::square());
    case 2: return make_gauge(GaugeKind::regular(5));
    case 3: return make_gauge(GaugeKind::regular(6));
    case 4: return make_gauge(GaugeKind::disk(64));
    case 5: return difference_body(random_hull(rng));
    default: {
        for (;;) {
            auto c = random_hull(rng);
            if (c.is_full_dimensional() && area(c) > 1e-2) return c;
        }
    }
    }
}

ConvexPolygon nondegenerate_hull(SampleRng& rng) {
    for (;;) {
        auto k = random_hull(rng);
        if (!k.is_point()) return k;
    }
}

Outcome triangle_closed_form() {
    const Gauge s(make_gauge(GaugeKind::triangle()));
    double err = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double d = 1.0 + i / 100.0;
        const auto p = radii_profile(triangle_family(d), s);
        err = std::max({err, std::abs(p.r - d * (2 - d) / 4), std::abs(p.R - 1), std::abs(p.D - d)});
    }
    return {err <= 1e-7, "max error " + fmt("%.3g", err)};
}

Outcome hexagon_family_values() {
    const Gauge h(make_gauge(GaugeKind::regular(6)));
    double err = 0.0, mirror = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double l = 0.5 + 0.5 * i / 100.0;
        const auto f = diagram_point(hexagon_family(l), h);
        err = std::max(err, max_err(f, {(l + 1) * (2 - l) / (4 + l), (1 + l) / 2}));
        const auto g = diagram_point(hexagon_family(1 - l), h);
        mirror = std::max(mirror, max_err(g, {f.x, f.y}));
    }
    const double mid = max_err(diagram_point(hexagon_family(0.5), h), {0.5, 0.75});
    const bool ok = err <= 1e-7 && mirror <= 1e-7 && mid <= 1e-7;
    return {ok, "max error on [1/2,1] " + fmt("%.3g", err) + ", mirror " + fmt("%.3g", mirror) +
                    ", at 1/2 " + fmt("%.3g", mid)};
}

Outcome pentagon_family_values() {
    const ConvexPolygon pent = make_gauge(GaugeKind::regular(5));
    const Gauge p(pent);
    double err = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double l = 0.5 * i / 100.0;
        const double q = 1 + l * (kSqrt5 - 3) / 2;
        err = std::max(err, max_err(diagram_point(pentagon_family(l), p), {l * q, q}));
    }
    const auto [t, tp] = pentagon_jung_triangles();
    const double golden = (kSqrt5 + 1) / 2;
    const auto pt = radii_profile(t, p);
    const auto ptp = radii_profile(tp, p);
    const double jung = std::max(std::abs(pt.D / pt.R - golden), std::abs(ptp.D / ptp.R - golden));
    const auto et = edge_diameters(t, pent);
    const auto etp = edge_diameters(tp, pent);
    const double spread = *std::max_element(etp.begin(), etp.end()) - *std::min_element(etp.begin(), etp.end());
    const auto diametrical = std::count_if(et.begin(), et.end(), [&](double d) { return std::abs(d - pt.D) < 1e-9; });
    const bool ok = err <= 1e-7 && jung <= 1e-9 && spread < 1e-9 && diametrical == 2;
    return {ok, "family error " + fmt("%.3g", err) + ", D/R error " + fmt("%.3g", jung) + ", T' spread " +
                    fmt("%.3g", spread) + ", T diametrical edges " + std::to_string(diametrical)};
}

Outcome asymmetry_values() {
    const double sq = asymmetry(make_gauge(GaugeKind::square()));
    const double tr = asymmetry(make_gauge(GaugeKind::triangle()));
    const double pe = asymmetry(make_gauge(GaugeKind::regular(5)));
    const double err = std::max({std::abs(sq - 1), std::abs(tr - 2), std::abs(pe - (kSqrt5 - 1))});
    return {err <= 1e-9, "s = " + fmt("%.12g", sq) + ", " + fmt("%.12g", tr) + ", " + fmt("%.12g", pe)};
}

Outcome inequality_corpus() {
    const std::size_t n = 10000;
    Worst worst;
    std::atomic<int> symmetric{0};
    parallel_for(n, 0, [&](std::size_t i) {
        SampleRng rng(2024, i);
        const auto c = mixed_gauge(rng, i);
        const auto k = nondegenerate_hull(rng);
        const auto p = radii_profile(k, Gauge(c));
        const double x = p.r / p.R, y = p.D / (2 * p.R), s = p.s;
        const std::string at = "pair " + std::to_string(i);
        worst.add(-(1 - y), at + " D <= 2R");
        worst.add(-(3 * y - 2 * x - 1), at + " 2r + R <= 3D/2");
        worst.add(-(x - y * (1 - y)), at + " D(2R-D) <= 4rR");
        worst.add(-((s + 1) * y - s * x - 1), at + " asymmetry bound");
        if (s <= 1 + 1e-9) {
            ++symmetric;
            worst.add(-(2 * y - x - 1), at + " r + R <= D");
            worst.add(1 - 4.0 / 3.0 * y, at + " R <= 2D/3");
        }
    });
    return {worst.value <= 1e-7 && symmetric > 1000,
            std::to_string(n) + " pairs (" + std::to_string(symmetric.load()) + " symmetric), worst violation " +
                fmt("%.3g", std::max(0.0, worst.value)) + " (" + worst.where + ")"};
}

Outcome parallelotope_collapse() {
    const std::size_t n = 10000;
    Worst square;
    {
        const Gauge g(make_gauge(GaugeKind::square()));
        parallel_for(n, 0, [&](std::size_t i) {
            SampleRng rng(6, i);
            const auto p = radii_profile(nondegenerate_hull(rng), g);
            square.add(std::abs(p.D - 2 * p.R), "sample " + std::to_string(i));
        });
    }
    std::string gaps;
    bool all_found = true;
    for (const auto& kind : {GaugeKind::triangle(), GaugeKind::regular(5), GaugeKind::regular(6)}) {
        const Gauge g(make_gauge(kind));
        std::atomic<int> found{0};
        parallel_for(n, 0, [&](std::size_t i) {
            SampleRng rng(6, i);
            const auto p = radii_profile(nondegenerate_hull(rng), g);
            if (p.D < 2 * p.R - 0.05) ++found;
        });
        all_found = all_found && found > 0;
        gaps += ", " + kind.name() + " " + std::to_string(found.load());
    }
    return {square.value <= 1e-7 && all_found,
            "square max |D-2R| " + fmt("%.3g", square.value) + "; bodies with D < 2R-0.05" + gaps};
}

Outcome hexagon_inradius() {
    const std::size_t n = 10000;
    const Gauge h(make_gauge(GaugeKind::regular(6)));
    Worst worst;
    std::atomic<int> eligible{0};
    parallel_for(n, 0, [&](std::size_t i) {
        SampleRng rng(7, i);
        const auto p = radii_profile(nondegenerate_hull(rng), h);
        if (p.D / (2 * p.R) > 1 - 1e-3) return;
        ++eligible;
        worst.add(0.25 - p.r / p.R, "sample " + std::to_string(i));
    });
    return {worst.value <= 1e-6 && eligible > 100,
            std::to_string(eligible.load()) + " bodies with y <= 1-1e-3, smallest r/R " + fmt("%.6g", 0.25 - worst.value)};
}

Outcome certificates_and_reduction() {
    const std::size_t n = 1000;
    const double eps = 1e-6;
    Worst worst;
    std::atomic<int> strips{0}, symmetric{0}, failures{0};
    std::mutex m;
    std::string first_failure;
    parallel_for(n, 0, [&](std::size_t i) {
        SampleRng rng(8, i);
        const Gauge c(mixed_gauge(rng, i));
        const auto k = nondegenerate_hull(rng);
        const std::string at = "pair " + std::to_string(i);
        try {
            const auto opt = certify(k, c);
            const auto check = validate_certificate(opt.certificate, opt.body, c.body(), eps);
            if (!check.valid()) throw Error(ErrorCode::Numerical, "certificate check failed");
            const auto red = reduce(k, c);
            if (red.prism.is_strip()) ++strips;
            worst.add(std::abs(red.simplex_radii.R - 1) - eps, at + " R(T,S)");
            worst.add(red.simplex_radii.r - red.body_radii.r - eps, at + " r(T,S)");
            worst.add(red.simplex_radii.D - red.body_radii.D - eps, at + " D(T,S)");
            if (c.is_symmetric()) {
                if (!red.symmetric_radii) throw Error(ErrorCode::Numerical, "missing symmetric prism");
                ++symmetric;
                worst.add(red.symmetric_radii->r - red.body_radii.r - eps, at + " r(T,S cap -S)");
                worst.add(red.symmetric_radii->D - red.body_radii.D - eps, at + " D(T,S cap -S)");
            }
        } catch (const std::exception& e) {
            ++failures;
            std::lock_guard lock(m);
            if (first_failure.empty()) first_failure = at + ": " + e.what();
        }
    });
    const bool ok = failures == 0 && worst.value <= 0;
    std::string detail = std::to_string(n) + " pairs, " + std::to_string(strips.load()) + " strips, " +
                         std::to_string(symmetric.load()) + " symmetric, worst excess " +
                         fmt("%.3g", std::max(0.0, worst.value + eps));
    if (failures) detail += ", " + std::to_string(failures.load()) + " failures (" + first_failure + ")";
    return {ok, detail};
}

Outcome star_shapedness() {
    const std::size_t n = 1000;
    Worst worst;
    parallel_for(n, 0, [&](std::size_t i) {
        SampleRng rng(9, i);
        const Gauge c(mixed_gauge(rng, i));
        const auto k = optimal_position(nondegenerate_hull(rng), c);
        const double l = rng.uniform();
        const auto f = diagram_point(k, c);
        const auto g = diagram_point(interpolate(k, c.body(), l), c);
        worst.add(max_err(g, {(1 - l) * f.x + l, (1 - l) * f.y + l}), "triple " + std::to_string(i));
    });
    return {worst.value <= 1e-6, "max deviation " + fmt("%.3g", worst.value) + " (" + worst.where + ")"};
}

Outcome euclidean_diagram() {
    const int m = 720;
    const std::size_t n = 5000;
    const double tol = 1e-7 + std::numbers::pi * std::numbers::pi / (2.0 * m * m);
    const Gauge disk(make_gauge(GaugeKind::disk(m)));
    Worst worst;
    parallel_for(n, 0, [&](std::size_t i) {
        SampleRng rng(10, i);
        const auto p = radii_profile(nondegenerate_hull(rng), disk);
        const double x = p.r / p.R, y = p.D / (2 * p.R);
        const double w = std::sqrt(std::max(0.0, 1 - y * y));
        const std::string at = "sample " + std::to_string(i);
        worst.add(-(x * (1 + w) - 2 * y * y * w), at + " santalo");
        worst.add(kSqrt3 / 2 - y, at + " jung");
        worst.add(x + 1 - 2 * y, at + " x+1 <= 2y");
    });
    return {worst.value <= tol, std::to_string(n) + " samples, worst violation " +
                                    fmt("%.3g", std::max(0.0, worst.value)) + " against budget " + fmt("%.3g", tol)};
}

Outcome diagram_coverage() {
    const Gauge s(make_gauge(GaugeKind::triangle()));
    const int family_grid = 100, lambda_grid = 50;
    std::vector<DiagramPoint> produced((family_grid + 1) * (lambda_grid + 1));
    parallel_for(family_grid + 1, 0, [&](std::size_t i) {
        const auto t = optimal_position(triangle_family(1.0 + double(i) / family_grid), s);
        for (int j = 0; j <= lambda_grid; ++j)
            produced[i * (lambda_grid + 1) + j] = diagram_point(interpolate(t, s.body(), double(j) / lambda_grid), s);
    });
    int grid_points = 0;
    double worst = 0.0;
    for (int i = 0; i <= 50; ++i)
        for (int j = 0; j <= 50; ++j) {
            const double x = 0.02 * i, y = 0.02 * j;
            const bool inside = y <= 1 + 1e-12 && 3 * y - 2 * x - 1 >= -1e-12 && x - y * (1 - y) >= -1e-12;
            if (!inside) continue;
            ++grid_points;
            double best = INFINITY;
            for (const auto& f : produced) best = std::min(best, max_err(f, {x, y}));
            worst = std::max(worst, best);
        }
    return {worst <= 0.02, std::to_string(grid_points) + " grid points, " + std::to_string(produced.size()) +
                               " produced points, farthest " + fmt("%.4g", worst)};
}

Outcome determinism() {
    auto run = [](unsigned threads) {
        const auto kind = GaugeKind::triangle();
        const Gauge g(make_gauge(kind));
        DiagramData d;
        d.gauge = kind.name();
        d.strategy = SampleStrategy::Mix;
        d.seed = 12;
        d.samples = sample_bodies(g, kind, 2000, d.seed, d.strategy, threads);
        d.families = family_points(g, kind, 50);
        std::ostringstream os;
        write_csv(os, d);
        return os.str();
    };
    const auto a = run(0), b = run(0), c = run(1);
    return {a == b && a == c, std::to_string(a.size()) + " bytes, repeated run " + (a == b ? "identical" : "differs") +
                                  ", single thread " + (a == c ? "identical" : "differs")};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"triangle family closed form", triangle_closed_form},
        {"hexagon family", hexagon_family_values},
        {"pentagon family and Jung triangles", pentagon_family_values},
        {"Minkowski asymmetry", asymmetry_values},
        {"inequality corpus", inequality_corpus},
        {"parallelotope collapse", parallelotope_collapse},
        {"hexagon inradius bound", hexagon_inradius},
        {"certificates and reduction", certificates_and_reduction},
        {"star-shapedness", star_shapedness},
        {"Euclidean diagram", euclidean_diagram},
        {"diagram coverage", diagram_coverage},
        {"determinism", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s %2zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}
