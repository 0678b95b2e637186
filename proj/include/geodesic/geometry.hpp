#pragma once

#include <cmath>
#include <optional>
#include <vector>

namespace geodesic {

// Geometric tolerance against normalized (unit-box) coordinates.
inline constexpr double kGeomEps = 1e-9;
// Tolerance for 1D root finding on segments/arcs.
inline constexpr double kRootTol = 1e-12;
// Maximum bisection iterations for equidistant-point root finds.
inline constexpr int kMaxBisectIters = 128;

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point() = default;
    Point(double px, double py) : x(px), y(py) {}

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }
inline double dist(const Point& a, const Point& b) { return norm(a - b); }
inline Point perp(const Point& a) { return {-a.y, a.x}; }
inline Point lerp(const Point& a, const Point& b, double t) {
    return {a.x + (b.x - a.x) * t, a.y + (b.y - a.y) * t};
}
inline Point normalized(const Point& a) {
    double n = norm(a);
    return n > 0 ? Point{a.x / n, a.y / n} : Point{0, 0};
}

/// Twice the signed area of triangle (a,b,c); > 0 for counterclockwise.
inline double orient(const Point& a, const Point& b, const Point& c) {
    return cross(b - a, c - a);
}

/// True if q lies on the closed segment [a,b] within tolerance.
bool on_segment(const Point& a, const Point& b, const Point& q, double tol = kRootTol);

/// True if the open interiors of segments [a,b] and [c,d] intersect.
bool segments_properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// Intersection parameter pair (t, u) with a + t(b-a) = c + u(d-c), if the
/// supporting lines are not parallel.
std::optional<std::pair<double, double>> line_intersection_params(const Point& a, const Point& b,
                                                                  const Point& c, const Point& d);

/// Intersection point of closed segments [a,b] and [c,d], if any (not for
/// collinear overlaps).
std::optional<Point> segment_intersection(const Point& a, const Point& b, const Point& c,
                                          const Point& d);

enum class Region { Outside, Boundary, Inside };

/// Locates q relative to the closed polygonal chain (crossing-number walk).
Region locate_in_ring(const std::vector<Point>& ring, const Point& q, double tol = kGeomEps);

/// Signed area of a closed ring (positive for counterclockwise).
double ring_area(const std::vector<Point>& ring);

}  // namespace geodesic
