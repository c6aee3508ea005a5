#pragma once

#include <cstddef>
#include <vector>

#include "gauge_radii/geometry.hpp"
#include "gauge_radii/tolerances.hpp"

namespace gauge_radii {

/// A fulldimensional body prepared for use as the denominator of the radii:
/// re-centered at its vertex centroid, with edge normals, support heights and
/// the difference body cached.
class Gauge {
public:
    explicit Gauge(ConvexPolygon body, const Tolerances& tol = {});

    const ConvexPolygon& body() const { return body_; }
    const ConvexPolygon& centered() const { return centered_; }
    Point centroid() const { return centroid_; }
    const std::vector<Point>& normals() const { return normals_; }
    /// h(centered(), normals()[i]), all strictly positive.
    const std::vector<double>& heights() const { return heights_; }

    const ConvexPolygon& difference() const { return difference_; }
    const std::vector<Point>& difference_normals() const { return diff_normals_; }
    const std::vector<double>& difference_heights() const { return diff_heights_; }

    /// Minkowski asymmetry s(C) = R(-C, C).
    double asymmetry() const { return asymmetry_; }
    bool is_symmetric(double eps = 1e-7) const { return asymmetry_ <= 1.0 + eps; }

    const Tolerances& tolerances() const { return tol_; }

private:
    ConvexPolygon body_;
    ConvexPolygon centered_;
    Point centroid_;
    std::vector<Point> normals_;
    std::vector<double> heights_;
    ConvexPolygon difference_;
    std::vector<Point> diff_normals_;
    std::vector<double> diff_heights_;
    double asymmetry_ = 1.0;
    Tolerances tol_;
};

/// A vertex of K lying on an edge of the enclosing homothet.
struct Contact {
    std::size_t body_vertex = 0;
    std::size_t gauge_edge = 0;
};

struct Circumradius {
    double radius = 0.0;
    /// Center of the optimal homothet: image of the gauge centroid.
    Point center;
    /// K is contained in translation + radius * C.
    Point translation;
    std::vector<Contact> contacts;
};

struct Inradius {
    double radius = 0.0;
    Point center;
    /// translation + radius * C is contained in K.
    Point translation;
};

struct Diameter {
    double diameter = 0.0;
    Point first;
    Point second;
};

struct RadiiProfile {
    double r = 0.0;
    double D = 0.0;
    double R = 0.0;
    double s = 1.0;
    double x = 0.0;
    double y = 0.0;
    Point incenter;
    Point circumcenter;
    Point diameter_first;
    Point diameter_second;
};

struct DiagramPoint {
    double x = 0.0;
    double y = 0.0;
};

Circumradius circumradius(const ConvexPolygon& k, const Gauge& c);
Circumradius circumradius(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

/// Lower-dimensional K has inradius 0.
Inradius inradius(const ConvexPolygon& k, const Gauge& c);
Inradius inradius(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

/// Twice the largest gauge value, in C - C, of a vertex difference of K.
Diameter diameter(const ConvexPolygon& k, const Gauge& c);
Diameter diameter(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

double asymmetry(const ConvexPolygon& c, const Tolerances& tol = {});

/// (K - translation) / R(K,C): the homothet of K optimally contained in C.
/// Minkowski interpolation toward C moves the diagram point along a straight
/// line to (1,1) only for K in this position.
ConvexPolygon optimal_position(const ConvexPolygon& k, const Gauge& c);

RadiiProfile radii_profile(const ConvexPolygon& k, const Gauge& c);
RadiiProfile radii_profile(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

DiagramPoint diagram_point(const ConvexPolygon& k, const Gauge& c);
DiagramPoint diagram_point(const ConvexPolygon& k, const ConvexPolygon& c, const Tolerances& tol = {});

}  // namespace gauge_radii
