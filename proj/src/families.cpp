#include "gauge_radii/families.hpp"

#include <cmath>
#include <numbers>

#include "gauge_radii/error.hpp"
#include "gauge_radii/radii.hpp"

namespace gauge_radii {

namespace {

const double kSqrt5 = std::sqrt(5.0);

Point lerp(Point a, Point b, double t) { return (1.0 - t) * a + t * b; }

Point mid(Point a, Point b) { return 0.5 * (a + b); }

void require_range(double v, double lo, double hi, const char* what) {
    if (!(v >= lo && v <= hi))
        throw Error(ErrorCode::InvalidArgument, std::string(what) + " outside its parameter range");
}

}  // namespace

std::array<Point, 3> triangle_vertices() {
    const double h = std::numbers::sqrt3 / 2;
    return {Point{h, -0.5}, Point{-h, -0.5}, Point{0.0, 1.0}};
}

std::array<Point, 6> hexagon_vertices() {
    std::array<Point, 6> q;
    for (int j = 0; j < 6; ++j) {
        const double a = std::numbers::pi / 2 - j * std::numbers::pi / 3;
        q[j] = {std::cos(a), std::sin(a)};
    }
    q[0] = {0.0, 1.0};
    q[3] = {0.0, -1.0};
    return q;
}

std::array<Point, 5> pentagon_vertices() {
    std::array<Point, 5> p;
    for (int j = 0; j < 5; ++j) {
        const double a = std::numbers::pi / 2 + j * 2 * std::numbers::pi / 5;
        p[j] = {std::cos(a), std::sin(a)};
    }
    p[0] = {0.0, 1.0};
    return p;
}

ConvexPolygon triangle_family(double d) {
    require_range(d, 1.0, 2.0, "triangle family diameter");
    const auto [p1, p2, p3] = triangle_vertices();
    const std::vector<Point> pts{mid(p1, p2), (d / 2) * p1 + (1 - d / 2) * p3, (d / 2) * p2 + (1 - d / 2) * p3};
    return convex_hull(pts);
}

Point triangle_family_point(double d) { return {d * (2 - d) / 4, d / 2}; }

ConvexPolygon hexagon_family(double lambda) {
    require_range(lambda, 0.0, 1.0, "hexagon family lambda");
    const auto q = hexagon_vertices();
    const std::vector<Point> pts{lerp(q[0], q[1], lambda), lerp(q[3], q[2], lambda), mid(q[4], q[5])};
    return convex_hull(pts);
}

Point hexagon_family_point(double lambda) {
    require_range(lambda, 0.0, 1.0, "hexagon family lambda");
    const double l = std::max(lambda, 1.0 - lambda);
    return {(l + 1) * (2 - l) / (4 + l), (1 + l) / 2};
}

ConvexPolygon pentagon_family(double lambda) {
    require_range(lambda, 0.0, 0.5, "pentagon family lambda");
    const auto p = pentagon_vertices();
    const std::vector<Point> pts{lerp(p[0], p[1], lambda), lerp(p[0], p[4], lambda), mid(p[2], p[3])};
    return convex_hull(pts);
}

Point pentagon_family_point(double lambda) {
    require_range(lambda, 0.0, 0.5, "pentagon family lambda");
    const double y = 1 + lambda * (kSqrt5 - 3) / 2;
    return {lambda * y, y};
}

double pentagon_lambda0() { return (3 - kSqrt5) / 4; }

std::pair<ConvexPolygon, ConvexPolygon> pentagon_jung_triangles() {
    const auto p = pentagon_vertices();
    const Point p34 = mid(p[2], p[3]);
    const std::vector<Point> t{p34, mid(p[0], p[4]), mid(p[0], p[1])};
    const double l0 = pentagon_lambda0();
    const std::vector<Point> tp{lerp(p[4], p[0], l0), lerp(p[1], p[0], l0), p34};
    return {convex_hull(t), convex_hull(tp)};
}

std::vector<double> edge_diameters(const ConvexPolygon& t, const ConvexPolygon& gauge) {
    const Gauge g(gauge);
    std::vector<double> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const std::vector<Point> edge{t.vertex(i), t.vertex(i + 1)};
        out.push_back(diameter(convex_hull(edge), g).diameter);
    }
    return out;
}

std::vector<FamilyMember> family_members(const GaugeKind& kind, int grid) {
    if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid must be positive");
    std::vector<FamilyMember> out;
    if (kind.tag == GaugeKind::Tag::Triangle) {
        for (int j = 0; j <= grid; ++j) {
            const double d = 1.0 + static_cast<double>(j) / grid;
            out.push_back({"isosceles", d, triangle_family(d), triangle_family_point(d)});
        }
    } else if (kind.is_hexagon()) {
        for (int j = 0; j <= grid; ++j) {
            const double l = static_cast<double>(j) / grid;
            out.push_back({"hexagon_triangle", l, hexagon_family(l), hexagon_family_point(l)});
        }
    } else if (kind.is_pentagon()) {
        for (int j = 0; j <= grid; ++j) {
            const double l = 0.5 * j / grid;
            out.push_back({"pentagon_triangle", l, pentagon_family(l), pentagon_family_point(l)});
        }
        auto [t, tp] = pentagon_jung_triangles();
        out.push_back({"jung_T", 0.0, std::move(t), std::nullopt});
        out.push_back({"jung_T_prime", pentagon_lambda0(), std::move(tp), std::nullopt});
    }
    return out;
}

}  // namespace gauge_radii
