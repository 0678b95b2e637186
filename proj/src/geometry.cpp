#include "geodesic/geometry.hpp"

#include <algorithm>

namespace geodesic {

bool on_segment(const Point& a, const Point& b, const Point& q, double tol) {
    double len = dist(a, b);
    if (len < tol) return dist(a, q) <= tol;
    // Perpendicular distance and parameter range.
    Point d = b - a;
    double t = dot(q - a, d) / (len * len);
    if (t < -tol / len || t > 1.0 + tol / len) return false;
    Point proj = lerp(a, b, std::clamp(t, 0.0, 1.0));
    return dist(proj, q) <= tol;
}

bool segments_properly_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    double o1 = orient(a, b, c);
    double o2 = orient(a, b, d);
    double o3 = orient(c, d, a);
    double o4 = orient(c, d, b);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
           ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

std::optional<std::pair<double, double>> line_intersection_params(const Point& a, const Point& b,
                                                                  const Point& c, const Point& d) {
    Point r = b - a;
    Point s = d - c;
    double den = cross(r, s);
    if (den == 0.0) return std::nullopt;
    Point ca = c - a;
    double t = cross(ca, s) / den;
    double u = cross(ca, r) / den;
    return std::make_pair(t, u);
}

std::optional<Point> segment_intersection(const Point& a, const Point& b, const Point& c,
                                          const Point& d) {
    auto params = line_intersection_params(a, b, c, d);
    if (!params) return std::nullopt;
    auto [t, u] = *params;
    const double tol = 1e-12;
    if (t < -tol || t > 1 + tol || u < -tol || u > 1 + tol) return std::nullopt;
    return lerp(a, b, std::clamp(t, 0.0, 1.0));
}

Region locate_in_ring(const std::vector<Point>& ring, const Point& q, double tol) {
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        if (on_segment(ring[i], ring[(i + 1) % n], q, tol)) return Region::Boundary;
    }
    // Crossing number with the upward ray from q.
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        if ((a.y > q.y) != (b.y > q.y)) {
            double xint = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (q.x < xint) inside = !inside;
        }
    }
    return inside ? Region::Inside : Region::Outside;
}

double ring_area(const std::vector<Point>& ring) {
    double s = 0.0;
    size_t n = ring.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        s += cross(a, b);
    }
    return 0.5 * s;
}

}  // namespace geodesic
