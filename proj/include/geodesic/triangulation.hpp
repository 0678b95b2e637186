#pragma once

#include <array>
#include <vector>

#include "geodesic/polygon.hpp"

namespace geodesic {

struct Triangle {
    std::array<int, 3> v;  // polygon vertex indices, counterclockwise
};

/// Ear-clipping triangulation plus the dual tree over shared diagonals.
class Triangulation {
public:
    explicit Triangulation(const Polygon& polygon);

    const Polygon& polygon() const { return *polygon_; }
    const std::vector<Triangle>& triangles() const { return triangles_; }

    /// Triangles adjacent to triangle t, paired with the shared diagonal
    /// (vertex index pair).
    struct Adjacency {
        int neighbor;
        int a, b;  // shared edge endpoints (polygon vertex indices)
    };
    const std::vector<Adjacency>& neighbors(int t) const {
        return adjacency_[static_cast<size_t>(t)];
    }

    /// All triangles whose closed region contains q.
    std::vector<int> locate(const Point& q, double tol = kRootTol) const;

    /// Unique dual-tree path from triangle `from` to triangle `to`.
    std::vector<int> dual_path(int from, int to) const;

    bool triangle_contains(int t, const Point& q, double tol = kRootTol) const;
    Point centroid(int t) const;

private:
    const Polygon* polygon_;
    std::vector<Triangle> triangles_;
    std::vector<std::vector<Adjacency>> adjacency_;
};

}  // namespace geodesic
