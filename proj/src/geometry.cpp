#include "gauge_radii/geometry.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <cctype>
#include <numbers>

#include "gauge_radii/error.hpp"

namespace gauge_radii {

namespace {

double coordinate_scale(std::span<const Point> pts) {
    double s = 1.0;
    for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
    return s;
}

// Cross product tolerance: sine of the turning angle below eps counts as straight.
bool turns_left(Point a, Point b, Point c, double eps) {
    const Point u = b - a;
    const Point v = c - a;
    return cross(u, v) > eps * norm(u) * norm(v);
}

std::size_t lowest_vertex(const ConvexPolygon& p) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Point& v = p[i];
        const Point& b = p[best];
        if (v.y < b.y || (v.y == b.y && v.x < b.x)) best = i;
    }
    return best;
}

struct HalfPlane {
    Point normal;
    double offset;
};

std::vector<HalfPlane> halfplanes_of(const ConvexPolygon& q) {
    std::vector<HalfPlane> out;
    if (q.is_full_dimensional()) {
        for (std::size_t i = 0; i < q.size(); ++i) {
            const Point n = q.edge_normal(i);
            out.push_back({n, dot(n, q[i])});
        }
    } else if (q.is_segment()) {
        const Point d = (1.0 / distance(q[0], q[1])) * (q[1] - q[0]);
        const Point n{d.y, -d.x};
        out.push_back({n, dot(n, q[0])});
        out.push_back({-n, -dot(n, q[0])});
        out.push_back({d, dot(d, q[1])});
        out.push_back({-d, -dot(d, q[0])});
    } else {
        const Point p = q[0];
        out.push_back({{1, 0}, p.x});
        out.push_back({{-1, 0}, -p.x});
        out.push_back({{0, 1}, p.y});
        out.push_back({{0, -1}, -p.y});
    }
    return out;
}

std::vector<Point> clip(const std::vector<Point>& poly, const HalfPlane& h, double tol) {
    std::vector<Point> out;
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point cur = poly[i];
        const Point next = poly[(i + 1) % n];
        const double sc = dot(h.normal, cur) - h.offset;
        const double sn = dot(h.normal, next) - h.offset;
        const bool cur_in = sc <= tol;
        const bool next_in = sn <= tol;
        if (cur_in) out.push_back(cur);
        if (cur_in != next_in) {
            const double t = sc / (sc - sn);
            out.push_back(cur + t * (next - cur));
        }
    }
    return out;
}

}  // namespace

ConvexPolygon convex_hull(std::span<const Point> points, double eps) {
    if (points.empty()) throw Error(ErrorCode::InvalidArgument, "empty point set");
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw Error(ErrorCode::InvalidArgument, "non-finite coordinate");
    }
    const double merge = eps * coordinate_scale(points);

    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<Point> uniq;
    for (const auto& p : pts) {
        if (uniq.empty() || distance(uniq.back(), p) > merge) uniq.push_back(p);
    }
    if (uniq.size() == 1) return ConvexPolygon({uniq.front()});

    std::vector<Point> hull(2 * uniq.size());
    std::size_t k = 0;
    for (const auto& p : uniq) {
        while (k >= 2 && !turns_left(hull[k - 2], hull[k - 1], p, eps)) --k;
        hull[k++] = p;
    }
    for (std::size_t i = uniq.size() - 1, lower = k + 1; i-- > 0;) {
        const Point p = uniq[i];
        while (k >= lower && !turns_left(hull[k - 2], hull[k - 1], p, eps)) --k;
        hull[k++] = p;
    }
    hull.resize(k - 1);

    std::vector<Point> clean;
    for (const auto& p : hull) {
        if (clean.empty() || distance(clean.back(), p) > merge) clean.push_back(p);
    }
    while (clean.size() > 1 && distance(clean.back(), clean.front()) <= merge) clean.pop_back();
    return ConvexPolygon(std::move(clean));
}

ConvexPolygon ConvexPolygon::from_ccw(std::vector<Point> vertices, double eps) {
    if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "empty point set");
    if (vertices.size() < 3) return convex_hull(vertices, eps);

    double twice_area = 0.0;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) twice_area += cross(vertices[i], vertices[(i + 1) % n]);
    if (twice_area < 0) std::reverse(vertices.begin(), vertices.end());

    const double merge = eps * coordinate_scale(vertices);
    std::vector<Point> cycle;
    for (const auto& p : vertices) {
        if (cycle.empty() || distance(cycle.back(), p) > merge) cycle.push_back(p);
    }
    while (cycle.size() > 1 && distance(cycle.back(), cycle.front()) <= merge) cycle.pop_back();

    if (cycle.size() >= 3 && std::abs(twice_area) > merge) {
        double turning = 0.0;
        const std::size_t m = cycle.size();
        for (std::size_t i = 0; i < m; ++i) {
            const Point e1 = cycle[(i + 1) % m] - cycle[i];
            const Point e2 = cycle[(i + 2) % m] - cycle[(i + 1) % m];
            const double c = cross(e1, e2);
            if (c < -eps * norm(e1) * norm(e2))
                throw Error(ErrorCode::InvalidArgument, "polygon is not convex");
            turning += std::atan2(c, dot(e1, e2));
        }
        if (std::abs(turning - 2 * std::numbers::pi) > 1e-6)
            throw Error(ErrorCode::InvalidArgument, "polygon is not convex");
    }
    return convex_hull(cycle, eps);
}

Point ConvexPolygon::edge_normal(std::size_t i) const {
    const Point e = vertex(i + 1) - vertex(i);
    const double len = norm(e);
    return {e.y / len, -e.x / len};
}

double support_value(const ConvexPolygon& p, Point u) {
    double best = dot(p[0], u);
    for (std::size_t i = 1; i < p.size(); ++i) best = std::max(best, dot(p[i], u));
    return best;
}

std::size_t support_vertex(const ConvexPolygon& p, Point u) {
    std::size_t best = 0;
    double value = dot(p[0], u);
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double v = dot(p[i], u);
        if (v > value) {
            value = v;
            best = i;
        }
    }
    return best;
}

Support support(const ConvexPolygon& p, Point u, double eps) {
    if (u.x == 0.0 && u.y == 0.0) throw Error(ErrorCode::InvalidArgument, "zero direction");
    Support s;
    s.value = support_value(p, u);
    const double tol = eps * norm(u) * coordinate_scale(p.vertices());
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (dot(p[i], u) >= s.value - tol) s.argmax.push_back(i);
    }
    return s;
}

std::vector<SumVertex> minkowski_merge(const ConvexPolygon& p, const ConvexPolygon& q) {
    std::vector<SumVertex> out;
    const std::size_t n = p.size();
    const std::size_t m = q.size();
    if (n == 1 || m == 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < m; ++j) out.push_back({p[i] + q[j], i, j});
        return out;
    }
    const std::size_t i0 = lowest_vertex(p);
    const std::size_t j0 = lowest_vertex(q);
    std::size_t i = 0;
    std::size_t j = 0;
    out.reserve(n + m);
    while (i < n || j < m) {
        const std::size_t a = (i0 + i) % n;
        const std::size_t b = (j0 + j) % m;
        out.push_back({p[a] + q[b], a, b});
        if (i == n) {
            ++j;
        } else if (j == m) {
            ++i;
        } else {
            const Point e1 = p.vertex(a + 1) - p[a];
            const Point e2 = q.vertex(b + 1) - q[b];
            const double c = cross(e1, e2);
            if (c > 0) {
                ++i;
            } else if (c < 0) {
                ++j;
            } else {
                ++i;
                ++j;
            }
        }
    }
    return out;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
    const auto merged = minkowski_merge(p, q);
    std::vector<Point> pts;
    pts.reserve(merged.size());
    for (const auto& v : merged) pts.push_back(v.point);
    return convex_hull(pts);
}

ConvexPolygon negate(const ConvexPolygon& p) {
    std::vector<Point> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.push_back(-x);
    return convex_hull(v);
}

ConvexPolygon difference_body(const ConvexPolygon& p) { return minkowski_sum(p, negate(p)); }

ConvexPolygon translate(const ConvexPolygon& p, Point t) {
    std::vector<Point> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.push_back(x + t);
    return convex_hull(v);
}

ConvexPolygon scale(const ConvexPolygon& p, double factor) {
    std::vector<Point> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.push_back(factor * x);
    return convex_hull(v);
}

double gauge_value(const ConvexPolygon& b, Point x, double eps) {
    if (!b.is_full_dimensional())
        throw Error(ErrorCode::Degenerate, "gauge body must be fulldimensional");
    const double floor = eps * coordinate_scale(b.vertices());
    double value = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Point n = b.edge_normal(i);
        const double h = dot(n, b[i]);
        if (h <= floor) throw Error(ErrorCode::InvalidArgument, "gauge body must contain origin");
        value = std::max(value, dot(n, x) / h);
    }
    return value;
}

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q,
                                       double eps) {
    const double tol = eps * std::max(coordinate_scale(p.vertices()), coordinate_scale(q.vertices()));
    std::vector<Point> poly = p.vertices();
    for (const auto& h : halfplanes_of(q)) {
        poly = clip(poly, h, tol);
        if (poly.empty()) return std::nullopt;
    }
    return convex_hull(poly, eps);
}

std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& p, Point normal, double offset,
                                            double eps) {
    const double tol = eps * std::max(coordinate_scale(p.vertices()), std::abs(offset));
    const auto poly = clip(p.vertices(), {normal, offset}, tol);
    if (poly.empty()) return std::nullopt;
    return convex_hull(poly, eps);
}

ConvexPolygon regular_kgon(int k, double phase) {
    if (k < 3) throw Error(ErrorCode::InvalidArgument, "regular k-gon needs k >= 3");
    std::vector<Point> v;
    v.reserve(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
        const double t = phase + 2 * std::numbers::pi * j / k;
        v.push_back({std::cos(t), std::sin(t)});
    }
    return convex_hull(v);
}

ConvexPolygon affine_map(const ConvexPolygon& p, const Matrix2& m, Point offset) {
    const double scale_ref = std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
    if (!(std::abs(m.det()) > 1e-12 * scale_ref * scale_ref))
        throw Error(ErrorCode::InvalidArgument, "singular affine map");
    std::vector<Point> v;
    v.reserve(p.size());
    for (const auto& x : p.vertices()) v.push_back(m(x) + offset);
    return convex_hull(v);
}

ConvexPolygon interpolate(const ConvexPolygon& k, const ConvexPolygon& c, double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0))
        throw Error(ErrorCode::InvalidArgument, "interpolation parameter outside [0,1]");
    if (lambda == 0.0) return k;
    if (lambda == 1.0) return c;
    return minkowski_sum(scale(k, 1.0 - lambda), scale(c, lambda));
}

Point vertex_centroid(const ConvexPolygon& p) {
    Point s;
    for (const auto& v : p.vertices()) s = s + v;
    return (1.0 / static_cast<double>(p.size())) * s;
}

double area(const ConvexPolygon& p) {
    double a = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p.vertex(i + 1));
    return 0.5 * a;
}

double max_coordinate(const ConvexPolygon& p) { return coordinate_scale(p.vertices()); }

double euclidean_diameter(const ConvexPolygon& p) {
    double best = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) best = std::max(best, distance(p[i], p[j]));
    return best;
}

double outside_slack(const ConvexPolygon& p, Point x) {
    if (p.is_point()) return distance(p[0], x);
    if (p.is_segment()) {
        const Point d = p[1] - p[0];
        const double t = std::clamp(dot(x - p[0], d) / dot(d, d), 0.0, 1.0);
        return distance(p[0] + t * d, x);
    }
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point n = p.edge_normal(i);
        worst = std::max(worst, dot(n, x - p[i]));
    }
    return worst;
}

bool contains(const ConvexPolygon& p, Point x, double eps) {
    return outside_slack(p, x) <= eps * coordinate_scale(p.vertices());
}

bool is_centrally_symmetric(const ConvexPolygon& p, double eps) {
    const std::size_t n = p.size();
    if (n <= 2) return true;
    if (n % 2 != 0) return false;
    const Point g = vertex_centroid(p);
    const double tol = eps * coordinate_scale(p.vertices());
    for (std::size_t i = 0; i < n / 2; ++i) {
        if (norm(p[i] + p[i + n / 2] - 2.0 * g) > tol) return false;
    }
    return true;
}

bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double eps) {
    if (p.size() != q.size()) return false;
    const std::size_t n = p.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        if (distance(p[0], q[shift]) > eps) continue;
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i) all = distance(p[i], q[(i + shift) % n]) <= eps;
        if (all) return true;
    }
    return false;
}

GaugeKind GaugeKind::regular(int k) {
    if (k < 3) throw Error(ErrorCode::InvalidArgument, "regular k-gon needs k >= 3");
    if (k == 3) return triangle();
    if (k == 4) return square();
    return {Tag::RegularKGon, k};
}

GaugeKind GaugeKind::disk(int m) {
    if (m < 16) throw Error(ErrorCode::InvalidArgument, "disk approximation needs m >= 16");
    return {Tag::DiskApprox, m};
}

std::string GaugeKind::name() const {
    switch (tag) {
    case Tag::Triangle: return "triangle";
    case Tag::Square: return "square";
    case Tag::RegularKGon:
        if (param == 5) return "pentagon";
        if (param == 6) return "hexagon";
        return "kgon:" + std::to_string(param);
    case Tag::DiskApprox: return "disk:" + std::to_string(param);
    case Tag::Custom: return "custom";
    }
    return "custom";
}

GaugeKind parse_gauge_kind(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    auto parse_int = [&](std::string_view digits) {
        int value = 0;
        const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (res.ec != std::errc() || res.ptr != digits.data() + digits.size())
            throw Error(ErrorCode::Unsupported, "malformed gauge parameter in '" + s + "'");
        return value;
    };
    if (s == "triangle") return GaugeKind::triangle();
    if (s == "square") return GaugeKind::square();
    if (s == "pentagon") return GaugeKind::regular(5);
    if (s == "hexagon") return GaugeKind::regular(6);
    if (s == "disk") return GaugeKind::disk();
    if (s.starts_with("kgon:")) return GaugeKind::regular(parse_int(std::string_view(s).substr(5)));
    if (s.starts_with("disk:")) return GaugeKind::disk(parse_int(std::string_view(s).substr(5)));
    throw Error(ErrorCode::Unsupported,
                "unsupported gauge '" + s +
                    "'; supported kinds: triangle, square, pentagon, hexagon, kgon:<k>, disk, disk:<m>");
}

ConvexPolygon make_gauge(const GaugeKind& kind) {
    using std::numbers::pi;
    switch (kind.tag) {
    case GaugeKind::Tag::Triangle: return regular_kgon(3, pi / 2);
    case GaugeKind::Tag::Square: {
        const std::vector<Point> v{{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
        return convex_hull(v);
    }
    case GaugeKind::Tag::RegularKGon: return regular_kgon(kind.param, pi / 2);
    case GaugeKind::Tag::DiskApprox: {
        const double rho = 1.0 / std::cos(pi / kind.param);
        return scale(regular_kgon(kind.param, pi / 2), rho);
    }
    case GaugeKind::Tag::Custom: break;
    }
    throw Error(ErrorCode::Unsupported, "custom gauges have no catalog polygon");
}

}  // namespace gauge_radii
