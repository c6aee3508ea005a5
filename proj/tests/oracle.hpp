#pragma once

// Independent reference computations for the tests. Nothing here calls the
// LP solver or the aggregated formulations used by the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "gauge_radii/geometry.hpp"

namespace oracle {

using gauge_radii::ConvexPolygon;
using gauge_radii::Point;

struct Row {
    std::array<double, 3> a;
    double b;
};

inline std::optional<std::array<double, 3>> solve3(const Row& r0, const Row& r1, const Row& r2) {
    const auto& a = r0.a;
    const auto& b = r1.a;
    const auto& c = r2.a;
    const double det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                       a[2] * (b[0] * c[1] - b[1] * c[0]);
    if (std::abs(det) < 1e-12) return std::nullopt;
    auto col = [&](int k) {
        std::array<std::array<double, 3>, 3> m{a, b, c};
        m[0][k] = r0.b;
        m[1][k] = r1.b;
        m[2][k] = r2.b;
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    };
    return std::array<double, 3>{col(0) / det, col(1) / det, col(2) / det};
}

/// min c.z over a 3-variable polyhedron by enumerating every basic solution.
/// Returns +inf when no feasible vertex exists.
inline double brute_force_min(const std::array<double, 3>& c, const std::vector<Row>& rows, double feas = 1e-9) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t m = rows.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                const auto z = solve3(rows[i], rows[j], rows[k]);
                if (!z) continue;
                bool ok = true;
                for (const auto& r : rows) {
                    const double lhs = r.a[0] * (*z)[0] + r.a[1] * (*z)[1] + r.a[2] * (*z)[2];
                    const double scale = std::max({1.0, std::abs(r.b), std::abs(lhs)});
                    if (lhs > r.b + feas * scale) {
                        ok = false;
                        break;
                    }
                }
                if (ok) best = std::min(best, c[0] * (*z)[0] + c[1] * (*z)[1] + c[2] * (*z)[2]);
            }
    return best;
}

/// Circumradius from the unaggregated program: one row per (vertex of K, edge of C),
/// C used with its own coordinates.
inline double circumradius(const ConvexPolygon& k, const ConvexPolygon& c) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Point n = c.edge_normal(i);
        const double h = gauge_radii::dot(n, c[i]);
        for (const auto& v : k.vertices()) rows.push_back({{-n.x, -n.y, -h}, -gauge_radii::dot(n, v)});
    }
    rows.push_back({{0, 0, -1}, 0});
    return brute_force_min({0, 0, 1}, rows);
}

/// max over all vertex pairs of the gauge of x - y in C - C, doubled.
inline double diameter_all_pairs(const ConvexPolygon& k, const ConvexPolygon& c) {
    const auto diff = gauge_radii::difference_body(c);
    double best = 0.0;
    for (const auto& a : k.vertices())
        for (const auto& b : k.vertices()) best = std::max(best, gauge_radii::gauge_value(diff, a - b));
    return 2 * best;
}

/// max over directions u of 2 h(K-K,u) / h(C-C,u), scanning the edge normals of C-C.
inline double diameter_support(const ConvexPolygon& k, const ConvexPolygon& c) {
    const auto dk = gauge_radii::difference_body(k);
    const auto dc = gauge_radii::difference_body(c);
    double best = 0.0;
    for (std::size_t i = 0; i < dc.size(); ++i) {
        const Point u = dc.edge_normal(i);
        best = std::max(best, 2 * gauge_radii::support_value(dk, u) / gauge_radii::support_value(dc, u));
    }
    return best;
}

inline std::vector<Point> random_points(std::mt19937_64& g, int n, double lo = -1, double hi = 1) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
        const double x = u(g);
        pts.push_back({x, u(g)});
    }
    return pts;
}

inline ConvexPolygon random_polygon(std::mt19937_64& g, int lo = 3, int hi = 8) {
    std::uniform_int_distribution<int> cnt(lo, hi);
    for (;;) {
        auto p = gauge_radii::convex_hull(random_points(g, cnt(g)));
        if (p.is_full_dimensional() && gauge_radii::area(p) > 1e-2) return p;
    }
}

}  // namespace oracle
