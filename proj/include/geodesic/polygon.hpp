#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "geodesic/geometry.hpp"

namespace geodesic {

struct Site {
    int id = -1;
    Point point;
};

struct LoadInfo {
    bool reversed = false;      // input was clockwise and got reversed
    Point offset{0.0, 0.0};     // input-frame bbox minimum
    double scale = 1.0;         // uniform factor mapping input to unit box
};

/// A simple polygon, counterclockwise, validated on construction.
///
/// Vertices with straight (angle pi) interior angles are accepted; spikes,
/// duplicate vertices and self-intersections are rejected.
class Polygon {
public:
    /// Validates and takes ownership of the vertex ring. Reverses clockwise
    /// input, reporting the fix through `reversed` when non-null.
    static Polygon from_points(std::vector<Point> vertices, bool* reversed = nullptr);

    /// Parses the polygon file format (line 1: m, then m lines "x y") and
    /// normalizes coordinates so the bounding box fits the unit box.
    static Polygon load(std::istream& in, LoadInfo* info = nullptr);
    static Polygon load_file(const std::string& path, LoadInfo* info = nullptr);

    int size() const { return static_cast<int>(vertices_.size()); }
    const Point& vertex(int i) const { return vertices_[static_cast<size_t>(i)]; }
    const std::vector<Point>& vertices() const { return vertices_; }

    int prev_index(int i) const { return (i + size() - 1) % size(); }
    int next_index(int i) const { return (i + 1) % size(); }

    bool contains(const Point& q, double tol = kGeomEps) const;
    bool strictly_contains(const Point& q, double tol = kGeomEps) const;
    double area() const;

    /// True if vertex i has interior angle > pi.
    bool is_reflex(int i) const;

    /// Maps a point given in the pre-normalization (file) frame into the
    /// polygon's frame.
    Point to_internal(const Point& p) const { return (p - load_offset_) * load_scale_; }
    double load_scale() const { return load_scale_; }

private:
    Polygon() = default;

    std::vector<Point> vertices_;
    Point load_offset_{0.0, 0.0};
    double load_scale_ = 1.0;
};

/// Parses a sites file (lines "id x y"), mapping coordinates through the
/// polygon's normalization. Rejects duplicate ids and sites not strictly
/// inside the polygon.
std::vector<Site> load_sites(std::istream& in, const Polygon& polygon);
std::vector<Site> load_sites_file(const std::string& path, const Polygon& polygon);

}  // namespace geodesic
