#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gauge_radii/geometry.hpp"
#include "gauge_radii/radii.hpp"

namespace gauge_radii {

/// Touching points of an optimally contained body with the gauge boundary,
/// outer normals there, and convex weights with sum_j mu_j u_j = 0.
struct ContainmentCertificate {
    std::vector<Point> points;
    std::vector<Point> normals;
    std::vector<double> coefficients;

    std::size_t k() const { return points.size(); }
};

struct OptimalContainment {
    /// (K - translation) / circumradius, optimally contained in C.
    ConvexPolygon body;
    double circumradius = 0.0;
    Point translation;
    ContainmentCertificate certificate;
};

struct CertificateCheck {
    double boundary_slack = 0.0;  // max |distance of p^j to bd(C)|
    double body_slack = 0.0;      // max outside-distance of p^j from K
    double cone_slack = 0.0;      // max h(C, u^j) - u^j . p^j
    double hull_residual = 0.0;   // |sum mu_j u^j| plus weight defects
    bool on_boundary = false;
    bool in_body = false;
    bool normals_in_cone = false;
    bool zero_in_hull = false;

    bool valid() const { return on_boundary && in_body && normals_in_cone && zero_in_hull; }
};

/// Checks the four certificate properties without reference to how the
/// certificate was built.
CertificateCheck validate_certificate(const ContainmentCertificate& cert, const ConvexPolygon& body,
                                      const ConvexPolygon& gauge, double eps);

/// Normalizes K into optimal position inside C and extracts a certificate
/// from the circumradius contacts. Throws Error(Numerical, "no certificate
/// within tolerance") if no convex combination of contact normals vanishes.
OptimalContainment certify(const ConvexPolygon& k, const Gauge& c);
OptimalContainment certify(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

/// { x : lower <= normal . x <= upper }
struct Strip {
    Point normal;
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
};

/// Intersection of the certificate halfplanes: a triangle for k = 3, an
/// unbounded strip for k = 2. For strips `polygon` is the strip clipped to a
/// box 10^3 times the gauge diameter, kept for drawing and polygon ops only.
struct Prism {
    std::optional<Strip> strip;
    ConvexPolygon polygon;

    bool is_strip() const { return strip.has_value(); }
};

struct RadiiTriple {
    double r = 0.0;
    double D = 0.0;
    double R = 0.0;
};

/// r, D, R of T against a prism; strips are handled analytically
/// (r = 0, R = width ratio, D = 2R).
RadiiTriple prism_radii(const ConvexPolygon& t, const Prism& s, const Tolerances& tol = {});

struct SimplexReduction {
    ContainmentCertificate certificate;
    /// K normalized to optimal position in C.
    ConvexPolygon body;
    ConvexPolygon simplex;
    Prism prism;
    /// S intersected with its reflection through the gauge center; only for
    /// centrally symmetric gauges.
    std::optional<Prism> symmetric_prism;

    RadiiTriple body_radii;     // of (K', C)
    RadiiTriple simplex_radii;  // of (T, S)
    std::optional<RadiiTriple> symmetric_radii;  // of (T, S cap -S)
};

SimplexReduction reduce(const ConvexPolygon& k, const Gauge& c);
SimplexReduction reduce(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

struct BohnenblustCheck {
    bool holds = false;
    /// max_u h(K-K,u) - h(D C,u), relative to D; <= 0 when K - K is inside D C.
    double difference_violation = 0.0;
    /// max_u h(D C,u) - h(3 (K cap -K),u), relative to D.
    double intersection_violation = 0.0;
};

/// Tests K - K in D(K,C) C in 3 (K cap -K) after centering K at its centroid
/// and C at its vertex centroid. K must be a triangle.
BohnenblustCheck bohnenblust_equality_check(const ConvexPolygon& k, const ConvexPolygon& c,
                                            const Tolerances& tol = {});

/// One-line text form: k, points, normals, coefficients.
std::string format_certificate(const ContainmentCertificate& cert);

}  // namespace gauge_radii
