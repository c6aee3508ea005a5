#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gauge_radii/geometry.hpp"

namespace gauge_radii {

// Vertex labels are fixed because the family formulas depend on them.
// Triangle: p1=(sqrt3/2,-1/2), p2=(-sqrt3/2,-1/2), p3=(0,1).
// Hexagon: q1..q6 clockwise, q1=(0,1).
// Pentagon: p1..p5 counterclockwise, p1=(0,1).
std::array<Point, 3> triangle_vertices();
std::array<Point, 6> hexagon_vertices();
std::array<Point, 5> pentagon_vertices();

/// Isosceles triangle with R(T,S)=1 and D(T,S)=D against S = make_gauge(triangle).
/// D in [1,2]; D=2 gives the segment [p1,p2].
ConvexPolygon triangle_family(double d);
/// Expected diagram point (D(2-D)/4, D/2).
Point triangle_family_point(double d);

/// T_lambda = conv{(1-l)q1+l q2, (1-l)q4+l q3, (q5+q6)/2}, lambda in [0,1].
ConvexPolygon hexagon_family(double lambda);
/// ((l+1)(2-l)/(4+l), (1+l)/2) for l in [1/2,1]. The family is mirror
/// symmetric, so l < 1/2 is evaluated at 1-l.
Point hexagon_family_point(double lambda);

/// T_lambda = conv{(1-l)p1+l p2, (1-l)p1+l p5, p34}, lambda in [0,1/2].
ConvexPolygon pentagon_family(double lambda);
/// (l(1+l(sqrt5-3)/2), 1+l(sqrt5-3)/2).
Point pentagon_family_point(double lambda);

/// lambda0 = (3-sqrt5)/4.
double pentagon_lambda0();

/// T = conv{p34,p15,p12} and T' = conv{(1-l0)p5+l0 p1, (1-l0)p2+l0 p1, p34}.
std::pair<ConvexPolygon, ConvexPolygon> pentagon_jung_triangles();

/// Diameter contribution of each edge of a triangle, in edge order.
std::vector<double> edge_diameters(const ConvexPolygon& t, const ConvexPolygon& gauge);

struct FamilyMember {
    std::string family;
    double parameter = 0.0;
    ConvexPolygon body;
    /// Closed-form diagram point, when one is known.
    std::optional<Point> expected;
};

/// Extremal bodies known for the gauge, sampled on `grid` parameter values.
/// Empty for gauges without a catalogued family.
std::vector<FamilyMember> family_members(const GaugeKind& kind, int grid);

}  // namespace gauge_radii
