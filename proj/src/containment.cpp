#include "gauge_radii/containment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gauge_radii/error.hpp"

namespace gauge_radii {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

struct Candidate {
    Point normal;
    Point point;
    double angle = 0.0;
};

double ccw_gap(double from, double to) {
    double g = to - from;
    while (g < 0) g += kTwoPi;
    while (g >= kTwoPi) g -= kTwoPi;
    return g;
}

void merge_shared_points(ContainmentCertificate& cert, double eps) {
    for (std::size_t a = 0; a < cert.k(); ++a) {
        for (std::size_t b = a + 1; b < cert.k();) {
            if (distance(cert.points[a], cert.points[b]) > eps) {
                ++b;
                continue;
            }
            const Point w = cert.coefficients[a] * cert.normals[a] + cert.coefficients[b] * cert.normals[b];
            const double len = norm(w);
            cert.normals[a] = (1.0 / len) * w;
            cert.coefficients[a] = len;
            cert.points.erase(cert.points.begin() + static_cast<std::ptrdiff_t>(b));
            cert.normals.erase(cert.normals.begin() + static_cast<std::ptrdiff_t>(b));
            cert.coefficients.erase(cert.coefficients.begin() + static_cast<std::ptrdiff_t>(b));
        }
    }
    double total = 0.0;
    for (double m : cert.coefficients) total += m;
    for (double& m : cert.coefficients) m /= total;
}

// Picks an opposite pair, or else the best positively spanning triple, of
// contact normals. Candidates have distinct directions.
std::optional<ContainmentCertificate> combine(std::vector<Candidate> cands, double ang_tol) {
    const std::size_t m = cands.size();
    if (m < 2) return std::nullopt;
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.angle < b.angle; });

    std::optional<std::pair<std::size_t, std::size_t>> pair;
    double pair_err = ang_tol;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (dot(cands[i].normal, cands[j].normal) >= 0) continue;
            const double err = std::abs(cross(cands[i].normal, cands[j].normal));
            if (err <= pair_err) {
                pair_err = err;
                pair = {i, j};
            }
        }
    }
    if (pair) {
        ContainmentCertificate c;
        for (std::size_t idx : {pair->first, pair->second}) {
            c.points.push_back(cands[idx].point);
            c.normals.push_back(cands[idx].normal);
            c.coefficients.push_back(0.5);
        }
        return c;
    }

    std::optional<std::array<std::size_t, 3>> best;
    std::array<double, 3> best_mu{};
    double best_min = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        // b: last direction strictly less than half a turn past a.
        std::size_t b = a;
        for (std::size_t step = 1; step < m; ++step) {
            const std::size_t cand = (a + step) % m;
            if (ccw_gap(cands[a].angle, cands[cand].angle) < std::numbers::pi) b = cand;
            else break;
        }
        if (b == a) continue;
        const std::size_t c = (b + 1) % m;
        if (c == a) continue;
        const Point ua = cands[a].normal;
        const Point ub = cands[b].normal;
        const Point uc = cands[c].normal;
        std::array<double, 3> mu{cross(ub, uc), cross(uc, ua), cross(ua, ub)};
        const double total = mu[0] + mu[1] + mu[2];
        if (!(total > 0)) continue;
        for (double& v : mu) v /= total;
        const double lo = std::min({mu[0], mu[1], mu[2]});
        if (!best || lo > best_min) {
            best = std::array<std::size_t, 3>{a, b, c};
            best_mu = mu;
            best_min = lo;
        }
    }
    if (!best || best_min < -ang_tol) return std::nullopt;
    ContainmentCertificate c;
    for (int t = 0; t < 3; ++t) {
        const auto& cand = cands[(*best)[t]];
        c.points.push_back(cand.point);
        c.normals.push_back(cand.normal);
        c.coefficients.push_back(std::max(0.0, best_mu[t]));
    }
    return c;
}

std::vector<Candidate> contacts_within(const ConvexPolygon& body, const ConvexPolygon& gauge, double tau) {
    std::vector<Candidate> out;
    for (std::size_t i = 0; i < gauge.size(); ++i) {
        const Point n = gauge.edge_normal(i);
        const double h = dot(n, gauge[i]);
        const std::size_t v = support_vertex(body, n);
        if (h - dot(n, body[v]) <= tau) out.push_back({n, body[v], std::atan2(n.y, n.x)});
    }
    return out;
}

Point line_intersection(Point u1, double b1, Point u2, double b2) {
    const double det = cross(u1, u2);
    return {(b1 * u2.y - b2 * u1.y) / det, (u1.x * b2 - u2.x * b1) / det};
}

Prism strip_prism(const Strip& s, const ConvexPolygon& gauge) {
    const Point g = vertex_centroid(gauge);
    const double half = 1e3 * std::max(1.0, euclidean_diameter(gauge));
    const std::vector<Point> box{{g.x - half, g.y - half}, {g.x + half, g.y - half},
                                 {g.x + half, g.y + half}, {g.x - half, g.y + half}};
    auto poly = clip_halfplane(convex_hull(box), s.normal, s.upper);
    if (poly) poly = clip_halfplane(*poly, -s.normal, -s.lower);
    if (!poly) throw Error(ErrorCode::Numerical, "empty strip");
    return {s, *poly};
}

}  // namespace

CertificateCheck validate_certificate(const ContainmentCertificate& cert, const ConvexPolygon& body,
                                      const ConvexPolygon& gauge, double eps) {
    CertificateCheck chk;
    const std::size_t k = cert.k();
    if (k < 2 || k > 3 || cert.normals.size() != k || cert.coefficients.size() != k) {
        chk.hull_residual = std::numeric_limits<double>::infinity();
        return chk;
    }
    Point sum;
    double weight = 0.0;
    double negative = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        const Point p = cert.points[j];
        const Point u = cert.normals[j];
        chk.boundary_slack = std::max(chk.boundary_slack, std::abs(outside_slack(gauge, p)));
        chk.body_slack = std::max(chk.body_slack, outside_slack(body, p));
        const double un = norm(u);
        chk.cone_slack = std::max(chk.cone_slack, un > 0 ? (support_value(gauge, u) - dot(u, p)) / un
                                                         : std::numeric_limits<double>::infinity());
        sum = sum + cert.coefficients[j] * (un > 0 ? (1.0 / un) * u : u);
        weight += cert.coefficients[j];
        negative = std::max(negative, -cert.coefficients[j]);
    }
    chk.hull_residual = norm(sum) + std::abs(weight - 1.0) + negative;
    chk.on_boundary = chk.boundary_slack <= eps;
    chk.in_body = chk.body_slack <= eps;
    chk.normals_in_cone = chk.cone_slack <= eps;
    chk.zero_in_hull = chk.hull_residual <= eps;
    return chk;
}

OptimalContainment certify(const ConvexPolygon& k, const Gauge& c) {
    const auto& tol = c.tolerances();
    const auto cr = circumradius(k, c);
    if (!(cr.radius > 0.0)) throw Error(ErrorCode::Degenerate, "no certificate for a single point");

    OptimalContainment out{k, cr.radius, cr.translation, {}};
    std::vector<Point> pts;
    pts.reserve(k.size());
    for (const auto& v : k.vertices()) pts.push_back((1.0 / cr.radius) * (v - cr.translation));
    out.body = convex_hull(pts, tol.geo);
    const ConvexPolygon& gauge = c.body();

    // First the LP tight set, then direct contact detection with growing slack.
    std::vector<std::vector<Candidate>> attempts;
    {
        std::vector<Candidate> from_lp;
        std::vector<std::size_t> seen;
        for (const auto& ct : cr.contacts) {
            if (std::find(seen.begin(), seen.end(), ct.gauge_edge) != seen.end()) continue;
            seen.push_back(ct.gauge_edge);
            const Point n = c.normals()[ct.gauge_edge];
            const Point p = (1.0 / cr.radius) * (k[ct.body_vertex] - cr.translation);
            from_lp.push_back({n, p, std::atan2(n.y, n.x)});
        }
        attempts.push_back(std::move(from_lp));
    }
    for (double tau = tol.lp; tau <= tol.cert * (1 + 1e-12); tau *= 10)
        attempts.push_back(contacts_within(out.body, gauge, tau));

    const double merge_eps = std::max(tol.geo, 1e-3 * tol.cert);
    for (auto& cands : attempts) {
        auto cert = combine(cands, tol.cert);
        if (!cert) continue;
        merge_shared_points(*cert, merge_eps);
        if (validate_certificate(*cert, out.body, gauge, tol.cert).valid()) {
            out.certificate = std::move(*cert);
            return out;
        }
    }
    throw Error(ErrorCode::Numerical, "no certificate within tolerance");
}

OptimalContainment certify(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return certify(k, Gauge(c, tol));
}

RadiiTriple prism_radii(const ConvexPolygon& t, const Prism& s, const Tolerances& tol) {
    RadiiTriple out;
    if (s.strip) {
        const Point n = s.strip->normal;
        const double width_t = support_value(t, n) + support_value(t, -n);
        out.R = width_t / s.strip->width();
        out.D = 2.0 * out.R;
        out.r = 0.0;
        return out;
    }
    const Gauge g(s.polygon, tol);
    out.R = circumradius(t, g).radius;
    out.r = inradius(t, g).radius;
    out.D = diameter(t, g).diameter;
    return out;
}

SimplexReduction reduce(const ConvexPolygon& k, const Gauge& c) {
    const auto& tol = c.tolerances();
    auto oc = certify(k, c);
    const auto& cert = oc.certificate;

    SimplexReduction red{cert, oc.body, convex_hull(cert.points, tol.geo), {std::nullopt, c.body()}, std::nullopt, {}, {}, std::nullopt};
    const ConvexPolygon& gauge = c.body();
    const Point g = c.centroid();
    const bool symmetric = is_centrally_symmetric(gauge, std::max(tol.geo, 1e-7));

    if (cert.k() == 2) {
        const Point n = cert.normals[0];
        Strip s{n, dot(n, cert.points[1]), dot(n, cert.points[0])};
        red.prism = strip_prism(s, gauge);
        if (symmetric) {
            const double lo = std::max(s.lower, 2 * dot(n, g) - s.upper);
            const double hi = std::min(s.upper, 2 * dot(n, g) - s.lower);
            red.symmetric_prism = strip_prism({n, lo, hi}, gauge);
        }
    } else {
        std::vector<Point> corners;
        for (std::size_t j = 0; j < 3; ++j) {
            const std::size_t l = (j + 1) % 3;
            corners.push_back(line_intersection(cert.normals[j], dot(cert.normals[j], cert.points[j]),
                                                cert.normals[l], dot(cert.normals[l], cert.points[l])));
        }
        red.prism = {std::nullopt, convex_hull(corners, tol.geo)};
        if (symmetric) {
            std::vector<Point> mirrored;
            for (const auto& p : corners) mirrored.push_back(2.0 * g - p);
            auto both = intersect(red.prism.polygon, convex_hull(mirrored, tol.geo), tol.geo);
            if (!both) throw Error(ErrorCode::Numerical, "empty symmetric prism");
            red.symmetric_prism = Prism{std::nullopt, *both};
        }
    }

    red.body_radii = {inradius(oc.body, c).radius, diameter(oc.body, c).diameter, circumradius(oc.body, c).radius};
    red.simplex_radii = prism_radii(red.simplex, red.prism, tol);
    if (red.symmetric_prism) red.symmetric_radii = prism_radii(red.simplex, *red.symmetric_prism, tol);
    return red;
}

SimplexReduction reduce(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol) {
    return reduce(k, Gauge(c, tol));
}

BohnenblustCheck bohnenblust_equality_check(const ConvexPolygon& k, const ConvexPolygon& c,
                                            const Tolerances& tol) {
    if (k.size() != 3) throw Error(ErrorCode::InvalidArgument, "equality case requires a simplex");
    const Gauge gauge(c, tol);
    const double d = diameter(k, gauge).diameter;
    const ConvexPolygon kc = translate(k, -vertex_centroid(k));
    const ConvexPolygon dc = scale(gauge.centered(), d);

    const ConvexPolygon diff = difference_body(kc);
    const auto core = intersect(kc, negate(kc), tol.geo);
    if (!core) throw Error(ErrorCode::Numerical, "empty K cap -K");
    const ConvexPolygon outer = scale(*core, 3.0);

    BohnenblustCheck out;
    out.difference_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < dc.size(); ++i) {
        const Point n = dc.edge_normal(i);
        out.difference_violation = std::max(out.difference_violation, support_value(diff, n) - dot(n, dc[i]));
    }
    out.intersection_violation = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const Point n = outer.edge_normal(i);
        out.intersection_violation =
            std::max(out.intersection_violation, support_value(dc, n) - dot(n, outer[i]));
    }
    out.difference_violation /= d;
    out.intersection_violation /= d;
    out.holds = out.difference_violation <= tol.inequality && out.intersection_violation <= tol.inequality;
    return out;
}

std::string format_certificate(const ContainmentCertificate& cert) {
    std::ostringstream os;
    os.precision(10);
    os << "certificate k=" << cert.k() << " points=";
    for (std::size_t j = 0; j < cert.k(); ++j)
        os << (j ? ";" : "") << '(' << cert.points[j].x << ',' << cert.points[j].y << ')';
    os << " normals=";
    for (std::size_t j = 0; j < cert.k(); ++j)
        os << (j ? ";" : "") << '(' << cert.normals[j].x << ',' << cert.normals[j].y << ')';
    os << " coefficients=";
    for (std::size_t j = 0; j < cert.k(); ++j) os << (j ? "," : "") << cert.coefficients[j];
    return os.str();
}

}  // namespace gauge_radii
