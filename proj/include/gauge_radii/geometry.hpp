#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gauge_radii {

inline constexpr double kGeoEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
    friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
    friend Point operator-(Point a) { return {-a.x, -a.y}; }
    friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
    friend Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }
    friend bool operator==(Point a, Point b) = default;
};

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(a - b); }

/// Counterclockwise vertex cycle of a planar convex body.
///
/// Vertices carry no duplicates and no collinear triples. One vertex is a
/// point, two a segment; three or more describe a fulldimensional polygon.
/// Instances are only produced by convex_hull() or from_ccw(), so every
/// ConvexPolygon in circulation satisfies these invariants.
class ConvexPolygon {
public:
    /// Accepts a vertex cycle in either orientation, reverses clockwise input,
    /// merges collinear runs and rejects non-convex cycles.
    static ConvexPolygon from_ccw(std::vector<Point> vertices, double eps = kGeoEps);

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    const Point& operator[](std::size_t i) const { return vertices_[i]; }
    Point vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }

    bool is_point() const { return vertices_.size() == 1; }
    bool is_segment() const { return vertices_.size() == 2; }
    bool is_full_dimensional() const { return vertices_.size() >= 3; }

    /// Outward unit normal of the edge from vertex i to vertex i+1.
    Point edge_normal(std::size_t i) const;

private:
    friend ConvexPolygon convex_hull(std::span<const Point>, double);
    explicit ConvexPolygon(std::vector<Point> v) : vertices_(std::move(v)) {}

    std::vector<Point> vertices_;
};

ConvexPolygon convex_hull(std::span<const Point> points, double eps = kGeoEps);

struct Support {
    double value = 0.0;
    std::vector<std::size_t> argmax;
};

/// h(P, u) together with every vertex attaining it within tolerance.
Support support(const ConvexPolygon& p, Point u, double eps = kGeoEps);
/// h(P, u) only; no allocation.
double support_value(const ConvexPolygon& p, Point u);
/// Index of the first vertex attaining h(P, u).
std::size_t support_vertex(const ConvexPolygon& p, Point u);

/// Vertex of P + Q in the merged edge order, with the index of the vertex of
/// each summand that produced it.
struct SumVertex {
    Point point;
    std::size_t first = 0;
    std::size_t second = 0;
};

std::vector<SumVertex> minkowski_merge(const ConvexPolygon& p, const ConvexPolygon& q);
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);
ConvexPolygon difference_body(const ConvexPolygon& p);

ConvexPolygon negate(const ConvexPolygon& p);
ConvexPolygon translate(const ConvexPolygon& p, Point t);
ConvexPolygon scale(const ConvexPolygon& p, double factor);

/// Smallest lambda >= 0 with x in lambda * B. B must contain 0 in its interior.
double gauge_value(const ConvexPolygon& b, Point x, double eps = kGeoEps);

/// P cut by { x : normal . x <= offset }; empty when nothing remains.
std::optional<ConvexPolygon> clip_halfplane(const ConvexPolygon& p, Point normal, double offset,
                                            double eps = kGeoEps);

std::optional<ConvexPolygon> intersect(const ConvexPolygon& p, const ConvexPolygon& q,
                                       double eps = kGeoEps);

/// Vertices (cos(phase + 2 pi j / k), sin(phase + 2 pi j / k)), j = 0..k-1.
ConvexPolygon regular_kgon(int k, double phase);

struct Matrix2 {
    double a = 1.0, b = 0.0;
    double c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    Point operator()(Point p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

ConvexPolygon affine_map(const ConvexPolygon& p, const Matrix2& m, Point offset);

/// (1 - lambda) K + lambda C, lambda in [0, 1].
ConvexPolygon interpolate(const ConvexPolygon& k, const ConvexPolygon& c, double lambda);

Point vertex_centroid(const ConvexPolygon& p);
double area(const ConvexPolygon& p);
double max_coordinate(const ConvexPolygon& p);
/// Largest Euclidean distance between two vertices.
double euclidean_diameter(const ConvexPolygon& p);

/// Signed distance-like slack: max over edges of n_i . x - h_i (<= 0 inside).
double outside_slack(const ConvexPolygon& p, Point x);
bool contains(const ConvexPolygon& p, Point x, double eps = kGeoEps);

/// True when the vertex set is closed under reflection through its centroid.
bool is_centrally_symmetric(const ConvexPolygon& p, double eps = kGeoEps);

/// Same cycle up to rotation, vertex-wise within eps.
bool approx_equal(const ConvexPolygon& p, const ConvexPolygon& q, double eps = kGeoEps);

/// Catalog of gauges the diagram machinery knows boundary curves for.
struct GaugeKind {
    enum class Tag { Triangle, Square, RegularKGon, DiskApprox, Custom };

    Tag tag = Tag::Custom;
    int param = 0;

    static GaugeKind triangle() { return {Tag::Triangle, 3}; }
    static GaugeKind square() { return {Tag::Square, 4}; }
    static GaugeKind regular(int k);
    static GaugeKind disk(int m = 720);
    static GaugeKind custom() { return {Tag::Custom, 0}; }

    bool is_pentagon() const { return tag == Tag::RegularKGon && param == 5; }
    bool is_hexagon() const { return tag == Tag::RegularKGon && param == 6; }
    bool is_disk() const { return tag == Tag::DiskApprox; }

    std::string name() const;
    friend bool operator==(const GaugeKind&, const GaugeKind&) = default;
};

/// Parses triangle, square, pentagon, hexagon, kgon:<k>, disk, disk:<m>.
GaugeKind parse_gauge_kind(std::string_view text);

/// Triangle: regular_kgon(3, pi/2). Square: [-1,1]^2. RegularKGon(k):
/// regular_kgon(k, pi/2). DiskApprox(m): regular m-gon circumscribed about
/// the Euclidean unit disk.
ConvexPolygon make_gauge(const GaugeKind& kind);

}  // namespace gauge_radii
