#include "gauge_radii/radii.hpp"

#include <algorithm>

#include "gauge_radii/error.hpp"
#include "gauge_radii/lp.hpp"

namespace gauge_radii {

namespace {

void cache_edges(const ConvexPolygon& p, std::vector<Point>& normals, std::vector<double>& heights) {
    normals.clear();
    heights.clear();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point n = p.edge_normal(i);
        normals.push_back(n);
        heights.push_back(dot(n, p[i]));
    }
}

}  // namespace

Gauge::Gauge(ConvexPolygon body, const Tolerances& tol)
    : body_(std::move(body)), centered_(body_), difference_(body_), tol_(tol) {
    if (!body_.is_full_dimensional())
        throw Error(ErrorCode::Degenerate, "gauge must be fulldimensional");
    centroid_ = vertex_centroid(body_);
    centered_ = translate(body_, -centroid_);
    cache_edges(centered_, normals_, heights_);
    const double floor = tol_.geo * max_coordinate(centered_);
    for (double h : heights_) {
        if (h <= floor) throw Error(ErrorCode::Degenerate, "gauge must be fulldimensional");
    }
    difference_ = difference_body(body_);
    cache_edges(difference_, diff_normals_, diff_heights_);
    asymmetry_ = circumradius(negate(body_), *this).radius;
}

Circumradius circumradius(const ConvexPolygon& k, const Gauge& c) {
    // Variables (center.x, center.y, lambda): K - center within lambda * centered(C).
    lp::Problem prob;
    prob.dimension = 3;
    prob.objective = {0, 0, 1, 0};
    const auto& normals = c.normals();
    const auto& heights = c.heights();
    prob.constraints.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        const Point n = normals[i];
        prob.constraints.push_back({{-n.x, -n.y, -heights[i], 0}, -support_value(k, n)});
    }
    const auto sol = lp::solve(prob, c.tolerances().lp);
    if (sol.status != lp::Status::Optimal)
        throw Error(ErrorCode::Numerical, std::string("circumradius LP ") + lp::to_string(sol.status));

    Circumradius out;
    out.radius = std::max(0.0, sol.z[2]);
    out.center = {sol.z[0], sol.z[1]};
    out.translation = out.center - out.radius * c.centroid();
    for (std::size_t i : sol.tight) {
        for (std::size_t v : support(k, normals[i], c.tolerances().geo).argmax)
            out.contacts.push_back({v, i});
    }
    return out;
}

Circumradius circumradius(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return circumradius(k, Gauge(c, tol));
}

Inradius inradius(const ConvexPolygon& k, const Gauge& c) {
    Inradius out;
    if (!k.is_full_dimensional()) {
        out.center = vertex_centroid(k);
        out.translation = out.center;
        return out;
    }
    // Variables (center.x, center.y, lambda): center + lambda * centered(C) within K.
    lp::Problem prob;
    prob.dimension = 3;
    prob.objective = {0, 0, -1, 0};
    prob.constraints.reserve(k.size() + 1);
    for (std::size_t j = 0; j < k.size(); ++j) {
        const Point w = k.edge_normal(j);
        prob.constraints.push_back({{w.x, w.y, support_value(c.centered(), w), 0}, dot(w, k[j])});
    }
    prob.constraints.push_back({{0, 0, -1, 0}, 0.0});
    const auto sol = lp::solve(prob, c.tolerances().lp);
    if (sol.status != lp::Status::Optimal)
        throw Error(ErrorCode::Numerical, std::string("inradius LP ") + lp::to_string(sol.status));
    out.radius = std::max(0.0, sol.z[2]);
    out.center = {sol.z[0], sol.z[1]};
    out.translation = out.center - out.radius * c.centroid();
    return out;
}

Inradius inradius(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return inradius(k, Gauge(c, tol));
}

Diameter diameter(const ConvexPolygon& k, const Gauge& c) {
    Diameter out;
    out.first = out.second = k[0];
    if (k.is_point()) return out;
    // Vertices of K - K are differences of vertex pairs of K; the convex gauge
    // of C - C attains its maximum over K - K at one of them.
    const ConvexPolygon neg = negate(k);
    const auto& normals = c.difference_normals();
    const auto& heights = c.difference_heights();
    double best = 0.0;
    for (const auto& v : minkowski_merge(k, neg)) {
        double g = 0.0;
        for (std::size_t i = 0; i < normals.size(); ++i) g = std::max(g, dot(normals[i], v.point) / heights[i]);
        if (g > best) {
            best = g;
            out.first = k[v.first];
            out.second = -neg[v.second];
        }
    }
    out.diameter = 2.0 * best;
    return out;
}

Diameter diameter(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return diameter(k, Gauge(c, tol));
}

double asymmetry(const ConvexPolygon& c, const Tolerances& tol) { return Gauge(c, tol).asymmetry(); }

ConvexPolygon optimal_position(const ConvexPolygon& k, const Gauge& c) {
    const auto cr = circumradius(k, c);
    if (!(cr.radius > 0.0)) throw Error(ErrorCode::Degenerate, "a single point has no optimal position");
    std::vector<Point> pts;
    pts.reserve(k.size());
    for (const auto& v : k.vertices()) pts.push_back((1.0 / cr.radius) * (v - cr.translation));
    return convex_hull(pts, c.tolerances().geo);
}

RadiiProfile radii_profile(const ConvexPolygon& k, const Gauge& c) {
    const auto cr = circumradius(k, c);
    if (!(cr.radius > 0.0))
        throw Error(ErrorCode::Degenerate, "diagram point undefined for a single point");
    const auto in = inradius(k, c);
    const auto dm = diameter(k, c);
    RadiiProfile p;
    p.R = cr.radius;
    p.r = in.radius;
    p.D = dm.diameter;
    p.s = c.asymmetry();
    p.x = p.r / p.R;
    p.y = p.D / (2.0 * p.R);
    p.circumcenter = cr.center;
    p.incenter = in.center;
    p.diameter_first = dm.first;
    p.diameter_second = dm.second;
    return p;
}

RadiiProfile radii_profile(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return radii_profile(k, Gauge(c, tol));
}

DiagramPoint diagram_point(const ConvexPolygon& k, const Gauge& c) {
    const auto p = radii_profile(k, c);
    return {p.x, p.y};
}

DiagramPoint diagram_point(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return diagram_point(k, Gauge(c, tol));
}

}  // namespace gauge_radii
