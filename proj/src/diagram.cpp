#include "gauge_radii/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gauge_radii/error.hpp"
#include "gauge_radii/families.hpp"

namespace gauge_radii {

namespace {

const double kSqrt5 = std::sqrt(5.0);
constexpr double kSqrt3 = std::numbers::sqrt3;
constexpr double kSymmetryTol = 1e-7;
// Hexagon wedge: the r >= R/4 bound only applies below this y.
constexpr double kHexagonWedge = 1.0 - 1e-3;

double santalo_slack(double x, double y) {
    const double w = std::sqrt(std::max(0.0, 1.0 - y * y));
    return x * (1.0 + w) - 2.0 * y * y * w;
}

DiagramInequality make(const std::string& name, double s = 1.0) {
    if (name == "nonnegative_inradius") return {name, [](double x, double) { return x; }};
    if (name == "diameter_bound") return {name, [](double, double y) { return 1.0 - y; }};
    if (name == "simplex_bound") return {name, [](double x, double y) { return 3 * y - 2 * x - 1; }};
    if (name == "triangle_lower") return {name, [](double x, double y) { return x - y * (1 - y); }};
    if (name == "asymmetry_bound")
        return {name, [s](double x, double y) { return (s + 1) * y - s * x - 1; }};
    if (name == "symmetric_bound") return {name, [](double x, double y) { return 2 * y - x - 1; }};
    if (name == "bohnenblust") return {name, [](double, double y) { return y - 0.75; }};
    if (name == "parallelotope") return {name, [](double, double y) { return y - 1.0; }};
    if (name == "hexagon_inradius")
        return {name, [](double x, double y) { return std::max(x - 0.25, y - kHexagonWedge); }};
    if (name == "pentagon_bound")
        return {name, [](double x, double y) { return kSqrt5 * y - (kSqrt5 - 1) * x - 1; }};
    if (name == "pentagon_jung") return {name, [](double, double y) { return y - (1 + kSqrt5) / 4; }};
    if (name == "euclidean_jung") return {name, [](double, double y) { return y - kSqrt3 / 2; }};
    if (name == "santalo") return {name, santalo_slack};
    throw Error(ErrorCode::InvalidArgument, "unknown inequality " + name);
}

BoundaryCurve segment(std::string name, CurveStatus status, Point a, Point b) {
    return {std::move(name), status, [a, b](double t) { return (1 - t) * a + t * b; }};
}

BoundaryCurve top_edge() { return segment("diameter_bound", CurveStatus::Proved, {0, 1}, {1, 1}); }

void add_triangle_curves(DiagramSpec& spec) {
    spec.curves.push_back(top_edge());
    spec.curves.push_back(segment("simplex_bound", CurveStatus::Proved, {0.25, 0.5}, {1, 1}));
    spec.curves.push_back({"isosceles_family", CurveStatus::Proved,
                           [](double t) { return triangle_family_point(1.0 + t); }});
}

}  // namespace

DiagramSpec universal_spec(double s) {
    DiagramSpec spec{GaugeKind::custom(), {}, {}};
    for (const char* n : {"nonnegative_inradius", "diameter_bound", "simplex_bound", "triangle_lower"})
        spec.inequalities.push_back(make(n));
    spec.inequalities.push_back(make("asymmetry_bound", s));
    if (s <= 1.0 + kSymmetryTol) {
        spec.inequalities.push_back(make("symmetric_bound"));
        spec.inequalities.push_back(make("bohnenblust"));
    }
    add_triangle_curves(spec);
    return spec;
}

DiagramSpec boundary_spec(const GaugeKind& kind) {
    DiagramSpec spec{kind, {}, {}};
    auto add = [&](std::initializer_list<const char*> names) {
        for (const char* n : names) spec.inequalities.push_back(make(n));
    };
    switch (kind.tag) {
    case GaugeKind::Tag::Triangle:
        add({"nonnegative_inradius", "diameter_bound", "simplex_bound", "triangle_lower"});
        add_triangle_curves(spec);
        return spec;
    case GaugeKind::Tag::Square:
        add({"nonnegative_inradius", "diameter_bound", "symmetric_bound", "parallelotope"});
        spec.curves.push_back(segment("parallelotope", CurveStatus::Proved, {0, 1}, {1, 1}));
        return spec;
    case GaugeKind::Tag::DiskApprox: {
        add({"nonnegative_inradius", "diameter_bound", "symmetric_bound", "euclidean_jung", "santalo"});
        const double yj = kSqrt3 / 2;
        spec.curves.push_back(top_edge());
        spec.curves.push_back(segment("symmetric_bound", CurveStatus::Proved, {kSqrt3 - 1, yj}, {1, 1}));
        spec.curves.push_back(segment("euclidean_jung", CurveStatus::Proved, {0.5, yj}, {kSqrt3 - 1, yj}));
        spec.curves.push_back({"santalo", CurveStatus::Proved, [yj](double t) {
                                   const double y = yj + t * (1 - yj);
                                   const double w = std::sqrt(std::max(0.0, 1 - y * y));
                                   return Point{2 * y * y * w / (1 + w), y};
                               }});
        return spec;
    }
    case GaugeKind::Tag::RegularKGon:
        if (kind.is_hexagon()) {
            add({"nonnegative_inradius", "diameter_bound", "simplex_bound", "triangle_lower", "symmetric_bound",
                 "bohnenblust", "hexagon_inradius"});
            spec.curves.push_back(top_edge());
            spec.curves.push_back(segment("symmetric_bound", CurveStatus::Proved, {0.5, 0.75}, {1, 1}));
            spec.curves.push_back(segment("hexagon_inradius", CurveStatus::Proved, {0.25, 0.75}, {0.25, 1}));
            spec.curves.push_back({"hexagon_family", CurveStatus::Conjectured,
                                   [](double t) { return hexagon_family_point(0.5 + 0.5 * t); }});
            return spec;
        }
        if (kind.is_pentagon()) {
            add({"nonnegative_inradius", "diameter_bound", "simplex_bound", "triangle_lower", "pentagon_bound",
                 "pentagon_jung"});
            const double yj = (1 + kSqrt5) / 4;
            const double corner = (6 + 2 * kSqrt5) / 16;
            spec.curves.push_back(top_edge());
            spec.curves.push_back(segment("pentagon_bound", CurveStatus::Proved, {corner, yj}, {1, 1}));
            spec.curves.push_back(segment("pentagon_jung", CurveStatus::Proved, {(1 + kSqrt5) / 8, yj}, {corner, yj}));
            spec.curves.push_back({"pentagon_family", CurveStatus::Conjectured,
                                   [](double t) { return pentagon_family_point(0.5 * t); }});
            return spec;
        }
        break;
    case GaugeKind::Tag::Custom:
        break;
    }
    throw Error(ErrorCode::Unsupported, "no boundary description for gauge " + kind.name() +
                                            "; supported: triangle, square, pentagon, hexagon, disk");
}

Classification classify(const DiagramSpec& spec, double x, double y, double tol) {
    Classification c;
    for (const auto& ineq : spec.inequalities) {
        const double s = ineq.slack(x, y);
        if (s < -tol) c.violated.push_back(ineq.name);
        else if (s <= tol) c.tight.push_back(ineq.name);
    }
    c.region = !c.violated.empty() ? Region::Outside : !c.tight.empty() ? Region::Boundary : Region::Inside;
    return c;
}

std::string to_string(Region r) {
    switch (r) {
    case Region::Inside: return "inside";
    case Region::Boundary: return "boundary";
    case Region::Outside: return "outside";
    }
    return "?";
}

std::string to_string(CurveStatus s) { return s == CurveStatus::Proved ? "proved" : "conjectured"; }

std::vector<InequalityResult> inequality_suite(const RadiiProfile& p, const std::optional<GaugeKind>& kind,
                                               const Tolerances& tol) {
    std::vector<InequalityResult> out;
    auto eval = [&](const DiagramInequality& ineq, double extra = 0.0) {
        out.push_back({ineq.name, ineq.slack(p.x, p.y), tol.inequality + extra});
    };
    for (const char* n : {"diameter_bound", "simplex_bound", "triangle_lower"}) eval(make(n));
    eval(make("asymmetry_bound", p.s));
    if (p.s <= 1.0 + kSymmetryTol) {
        eval(make("symmetric_bound"));
        eval(make("bohnenblust"));
    }
    if (!kind) return out;
    if (kind->tag == GaugeKind::Tag::Square) {
        eval(make("parallelotope"));
    } else if (kind->is_hexagon()) {
        eval(make("hexagon_inradius"));
    } else if (kind->is_pentagon()) {
        eval(make("pentagon_bound"));
        eval(make("pentagon_jung"));
    } else if (kind->is_disk()) {
        const double m = kind->param;
        const double budget = std::numbers::pi * std::numbers::pi / (2 * m * m);
        eval(make("euclidean_jung"), budget);
        eval(make("santalo"), budget);
    }
    return out;
}

std::vector<InequalityResult> inequality_suite(const ConvexPolygon& k, const ConvexPolygon& c,
                                               const std::optional<GaugeKind>& kind, const Tolerances& tol) {
    return inequality_suite(radii_profile(k, c, tol), kind, tol);
}

const InequalityResult* worst(const std::vector<InequalityResult>& results) {
    const InequalityResult* w = nullptr;
    for (const auto& r : results) {
        if (!w || r.slack < w->slack) w = &r;
    }
    return w;
}

}  // namespace gauge_radii
