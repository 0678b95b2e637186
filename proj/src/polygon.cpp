#include "geodesic/polygon.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "geodesic/errors.hpp"

namespace geodesic {

namespace {

void validate_ring(const std::vector<Point>& v) {
    int m = static_cast<int>(v.size());
    if (m < 3) fail(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");

    for (int i = 0; i < m; ++i) {
        const Point& a = v[static_cast<size_t>(i)];
        const Point& b = v[static_cast<size_t>((i + 1) % m)];
        const Point& c = v[static_cast<size_t>((i + 2) % m)];
        if (dist(a, b) <= kRootTol)
            fail(ErrorCode::Collinear, "duplicate consecutive vertices");
        double turn = orient(a, b, c);
        if (std::abs(turn) <= kRootTol && dot(a - b, c - b) > 0)
            fail(ErrorCode::Collinear, "spike (zero-angle) vertex");
    }

    // Pairwise edge intersection scan; adjacent edges share exactly a vertex.
    for (int i = 0; i < m; ++i) {
        const Point& a = v[static_cast<size_t>(i)];
        const Point& b = v[static_cast<size_t>((i + 1) % m)];
        for (int j = i + 1; j < m; ++j) {
            const Point& c = v[static_cast<size_t>(j)];
            const Point& d = v[static_cast<size_t>((j + 1) % m)];
            bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
            if (adjacent) continue;
            if (segments_properly_intersect(a, b, c, d))
                fail(ErrorCode::NotSimple, "boundary edges cross");
            // Touching configurations (vertex on a non-adjacent edge).
            if (on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
                on_segment(c, d, b))
                fail(ErrorCode::NotSimple, "boundary touches itself");
        }
    }
}

}  // namespace

Polygon Polygon::from_points(std::vector<Point> vertices, bool* reversed) {
    if (vertices.size() < 3) fail(ErrorCode::TooFewVertices, "polygon needs at least 3 vertices");
    double a = ring_area(vertices);
    bool flip = a < 0;
    if (flip) std::reverse(vertices.begin(), vertices.end());
    if (reversed) *reversed = flip;
    validate_ring(vertices);
    Polygon p;
    p.vertices_ = std::move(vertices);
    return p;
}

Polygon Polygon::load(std::istream& in, LoadInfo* info) {
    int m = 0;
    if (!(in >> m)) fail(ErrorCode::TooFewVertices, "missing vertex count");
    if (m < 3) fail(ErrorCode::TooFewVertices, "vertex count < 3");
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        double x, y;
        if (!(in >> x >> y)) fail(ErrorCode::TooFewVertices, "truncated polygon file");
        pts.push_back({x, y});
    }

    Point lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max()};
    Point hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Point& p : pts) {
        lo.x = std::min(lo.x, p.x);
        lo.y = std::min(lo.y, p.y);
        hi.x = std::max(hi.x, p.x);
        hi.y = std::max(hi.y, p.y);
    }
    double extent = std::max(hi.x - lo.x, hi.y - lo.y);
    if (extent <= 0) fail(ErrorCode::Collinear, "degenerate bounding box");
    double scale = 1.0 / extent;
    for (Point& p : pts) p = (p - lo) * scale;

    bool reversed = false;
    Polygon poly = from_points(std::move(pts), &reversed);
    poly.load_offset_ = lo;
    poly.load_scale_ = scale;
    if (info) {
        info->reversed = reversed;
        info->offset = lo;
        info->scale = scale;
    }
    return poly;
}

Polygon Polygon::load_file(const std::string& path, LoadInfo* info) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::TooFewVertices, "cannot open polygon file: " + path);
    return load(in, info);
}

bool Polygon::contains(const Point& q, double tol) const {
    return locate_in_ring(vertices_, q, tol) != Region::Outside;
}

bool Polygon::strictly_contains(const Point& q, double tol) const {
    return locate_in_ring(vertices_, q, tol) == Region::Inside;
}

double Polygon::area() const { return ring_area(vertices_); }

bool Polygon::is_reflex(int i) const {
    const Point& a = vertex(prev_index(i));
    const Point& b = vertex(i);
    const Point& c = vertex(next_index(i));
    return orient(a, b, c) < -kRootTol;
}

std::vector<Site> load_sites(std::istream& in, const Polygon& polygon) {
    std::vector<Site> sites;
    std::set<int> seen;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int id;
        double x, y;
        if (!(ls >> id >> x >> y)) {
            if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
            fail(ErrorCode::ScheduleInconsistent, "malformed site line: " + line);
        }
        if (!seen.insert(id).second) fail(ErrorCode::ScheduleInconsistent, "duplicate site id");
        Point p = polygon.to_internal({x, y});
        if (!polygon.strictly_contains(p))
            fail(ErrorCode::PointOutsidePolygon, "site not strictly inside polygon");
        sites.push_back({id, p});
    }
    return sites;
}

std::vector<Site> load_sites_file(const std::string& path, const Polygon& polygon) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ScheduleInconsistent, "cannot open sites file: " + path);
    return load_sites(in, polygon);
}

}  // namespace geodesic
