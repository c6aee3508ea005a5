#include <doctest.h>

#include <random>

#include "gauge_radii/error.hpp"
#include "gauge_radii/families.hpp"
#include "gauge_radii/radii.hpp"
#include "oracle.hpp"

using namespace gauge_radii;

namespace {

const ConvexPolygon kSquare = make_gauge(GaugeKind::square());
const ConvexPolygon kTriangle = make_gauge(GaugeKind::triangle());
const ConvexPolygon kPentagon = make_gauge(GaugeKind::regular(5));
const ConvexPolygon kHexagon = make_gauge(GaugeKind::regular(6));

ConvexPolygon segment(Point a, Point b) { return convex_hull(std::vector<Point>{a, b}); }

std::vector<ConvexPolygon> gauges() { return {kSquare, kTriangle, kPentagon, kHexagon}; }

}  // namespace

TEST_CASE("identities for K = C") {
    std::mt19937_64 g(1);
    auto cs = gauges();
    cs.push_back(oracle::random_polygon(g));
    for (const auto& c : cs) {
        CHECK(circumradius(c, c).radius == doctest::Approx(1));
        CHECK(inradius(c, c).radius == doctest::Approx(1));
        CHECK(diameter(c, c).diameter == doctest::Approx(2));
        const auto f = diagram_point(c, c);
        CHECK(f.x == doctest::Approx(1));
        CHECK(f.y == doctest::Approx(1));
    }
}

TEST_CASE("reflected triangle") {
    const auto p = radii_profile(negate(kTriangle), kTriangle);
    CHECK(p.R == doctest::Approx(2));
    CHECK(p.r == doctest::Approx(0.5));
    CHECK(p.D == doctest::Approx(2));
    CHECK(p.x == doctest::Approx(0.25));
    CHECK(p.y == doctest::Approx(0.5));
}

TEST_CASE("segment against the square fits the width exactly") {
    CHECK(circumradius(segment({-1, 0}, {1, 0}), kSquare).radius == doctest::Approx(1));
}

TEST_CASE("asymmetry") {
    CHECK(asymmetry(kSquare) == doctest::Approx(1).epsilon(1e-12));
    CHECK(asymmetry(kTriangle) == doctest::Approx(2).epsilon(1e-12));
    CHECK(asymmetry(kPentagon) == doctest::Approx(std::sqrt(5.0) - 1).epsilon(1e-12));
    CHECK(asymmetry(kHexagon) == doctest::Approx(1).epsilon(1e-12));
}

TEST_CASE("degenerate inputs") {
    CHECK_THROWS_AS(circumradius(kSquare, segment({0, 0}, {1, 0})), Error);
    CHECK(inradius(segment({0, 0}, {1, 1}), kSquare).radius == 0);
    const auto pt = convex_hull(std::vector<Point>{{0.3, 0.3}});
    CHECK(circumradius(pt, kSquare).radius == doctest::Approx(0));
    CHECK_THROWS_AS(radii_profile(pt, kSquare), Error);
}

TEST_CASE("segments map to (0,1)") {
    std::mt19937_64 g(2);
    for (int i = 0; i < 30; ++i) {
        const auto c = oracle::random_polygon(g);
        const auto pts = oracle::random_points(g, 2);
        const auto f = diagram_point(segment(pts[0], pts[1]), c);
        CHECK(f.x == 0);
        CHECK(f.y == doctest::Approx(1).epsilon(1e-9));
    }
}

TEST_CASE("circumradius matches the unaggregated program") {
    std::mt19937_64 g(3);
    for (int i = 0; i < 60; ++i) {
        const auto k = oracle::random_polygon(g, 3, 6);
        const auto c = oracle::random_polygon(g, 3, 6);
        CHECK(circumradius(k, c).radius == doctest::Approx(oracle::circumradius(k, c)).epsilon(1e-9));
        // r(K,C) R(C,K) = 1
        CHECK(inradius(k, c).radius * oracle::circumradius(c, k) == doctest::Approx(1).epsilon(1e-9));
    }
}

TEST_CASE("circumradius witnesses a containing homothet") {
    std::mt19937_64 g(4);
    for (int i = 0; i < 50; ++i) {
        const auto k = oracle::random_polygon(g);
        const auto c = oracle::random_polygon(g);
        const auto cr = circumradius(k, c);
        const auto hom = translate(scale(c, cr.radius), cr.translation);
        for (const auto& v : k.vertices()) CHECK(outside_slack(hom, v) <= 1e-9);
        const auto in = inradius(k, c);
        const auto inner = translate(scale(c, in.radius), in.translation);
        for (const auto& v : inner.vertices()) CHECK(outside_slack(k, v) <= 1e-9);
        CHECK_FALSE(cr.contacts.empty());
    }
}

TEST_CASE("diameter: all pairs, support route and attained pair") {
    std::mt19937_64 g(5);
    std::normal_distribution<double> n;
    for (int i = 0; i < 60; ++i) {
        const auto k = oracle::random_polygon(g, 3, 10);
        const auto c = oracle::random_polygon(g);
        const auto d = diameter(k, c);
        CHECK(d.diameter == doctest::Approx(oracle::diameter_all_pairs(k, c)).epsilon(1e-10));
        CHECK(d.diameter == doctest::Approx(oracle::diameter_support(k, c)).epsilon(1e-10));
        const auto dk = difference_body(k);
        const auto dc = difference_body(c);
        for (int j = 0; j < 200; ++j) {
            const Point u{n(g), n(g)};
            CHECK(d.diameter >= 2 * support_value(dk, u) / support_value(dc, u) - 1e-10);
        }
        bool first = false, second = false;
        for (const auto& v : k.vertices()) {
            first = first || v == d.first;
            second = second || v == d.second;
        }
        CHECK(first);
        CHECK(second);
        CHECK(2 * gauge_value(dc, d.first - d.second) == doctest::Approx(d.diameter));
    }
}

TEST_CASE("triangle family closed form") {
    const Gauge s(kTriangle);
    for (double d : {1.0, 1.5, 2.0}) {
        const auto t = triangle_family(d);
        CHECK(circumradius(t, s).radius == doctest::Approx(1));
        CHECK(diameter(t, s).diameter == doctest::Approx(d));
        CHECK(inradius(t, s).radius == doctest::Approx(d * (2 - d) / 4));
    }
    CHECK(inradius(triangle_family(1), s).radius == doctest::Approx(0.25));
}

TEST_CASE("translation, dilation and affine invariance") {
    std::mt19937_64 g(6);
    std::uniform_real_distribution<double> u(-2, 2);
    std::uniform_real_distribution<double> sc(0.2, 5);
    for (int i = 0; i < 40; ++i) {
        const auto k = oracle::random_polygon(g);
        const auto c = oracle::random_polygon(g);
        const auto p = radii_profile(k, c);
        const auto moved = radii_profile(translate(k, {u(g), u(g)}), translate(c, {u(g), u(g)}));
        CHECK(moved.R == doctest::Approx(p.R).epsilon(1e-9));
        CHECK(moved.r == doctest::Approx(p.r).epsilon(1e-9));
        CHECK(moved.D == doctest::Approx(p.D).epsilon(1e-9));
        const double a = sc(g), b = sc(g);
        const auto scaled = radii_profile(scale(k, a), scale(c, b));
        CHECK(scaled.R == doctest::Approx(p.R * a / b).epsilon(1e-9));
        CHECK(scaled.r == doctest::Approx(p.r * a / b).epsilon(1e-9));
        CHECK(scaled.D == doctest::Approx(p.D * a / b).epsilon(1e-9));

        Matrix2 m{u(g), u(g), u(g), u(g)};
        const double s1 = std::hypot(m.a, m.b, 0.0) + std::hypot(m.c, m.d, 0.0);
        if (std::abs(m.det()) < 1e-3 * s1 * s1) continue;  // keep the condition number moderate
        const Point off{u(g), u(g)};
        const auto f = radii_profile(affine_map(k, m, off), affine_map(c, m, {0, 0}));
        CHECK(std::abs(f.x - p.x) <= 1e-7);
        CHECK(std::abs(f.y - p.y) <= 1e-7);
    }
}

TEST_CASE("monotonicity under inclusion") {
    std::mt19937_64 g(7);
    for (int i = 0; i < 40; ++i) {
        const auto k2 = oracle::random_polygon(g, 5, 10);
        const auto c1 = oracle::random_polygon(g, 5, 10);
        // K1 = hull of a subset of K2's vertices, C2 = C1 cut by a halfplane through its centroid region
        std::vector<Point> sub(k2.vertices().begin(), k2.vertices().begin() + 3);
        const auto k1 = convex_hull(sub);
        CHECK(circumradius(k1, c1).radius <= circumradius(k2, c1).radius + 1e-12);
        const Point gc = vertex_centroid(c1);
        const auto c2 = clip_halfplane(c1, {1, 0}, gc.x + 0.1);
        REQUIRE(c2);
        if (!c2->is_full_dimensional()) continue;
        CHECK(circumradius(k2, c1).radius <= circumradius(k2, *c2).radius + 1e-12);
    }
}

TEST_CASE("proved inequalities on random pairs") {
    std::mt19937_64 g(8);
    for (int i = 0; i < 300; ++i) {
        const auto k = oracle::random_polygon(g, 2, 9);
        const auto& c = (i % 5 == 4) ? kHexagon : (i % 5 == 3 ? kSquare : oracle::random_polygon(g));
        const auto p = radii_profile(k, c);
        CHECK(p.D <= 2 * p.R + 1e-9);
        CHECK(2 * p.r + p.R <= 1.5 * p.D + 1e-9);
        CHECK(p.x >= p.y * (1 - p.y) - 1e-9);
        CHECK(p.s * p.r + p.R <= (p.s + 1) / 2 * p.D + 1e-9);
        CHECK(p.x >= 0);
        CHECK(p.x <= 1 + 1e-12);
        if (p.s <= 1 + 1e-7) {
            CHECK(p.r + p.R <= p.D + 1e-9);
            CHECK(p.R <= 2.0 / 3 * p.D + 1e-9);
        }
    }
}

TEST_CASE("interpolation toward the gauge is a straight line in the diagram") {
    std::mt19937_64 g(9);
    for (int i = 0; i < 20; ++i) {
        const auto c = oracle::random_polygon(g);
        const auto k = optimal_position(oracle::random_polygon(g), Gauge(c));
        CHECK(circumradius(k, c).radius == doctest::Approx(1));
        const auto f0 = diagram_point(k, c);
        for (int j = 1; j <= 9; ++j) {
            const double l = j / 10.0;
            const auto f = diagram_point(interpolate(k, c, l), c);
            CHECK(std::abs(f.x - ((1 - l) * f0.x + l)) <= 1e-7);
            CHECK(std::abs(f.y - ((1 - l) * f0.y + l)) <= 1e-7);
        }
    }
}
