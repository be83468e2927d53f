#pragma once

// Planar geometry model.  All coordinates are easting/northing in metres
// of one caller-supplied projected CRS; nothing here reprojects.  Rings
// are stored closed (first vertex repeated at the end).

#include <cmath>
#include <cstddef>
#include <vector>

namespace gridshed::geom {

struct Point {
    double x = 0;
    double y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

using Ring = std::vector<Point>;  // closed; >= 4 vertices incl. the repeat

struct Polygon {
    Ring exterior;
    std::vector<Ring> holes;
};

struct MultiPolygon {
    std::vector<Polygon> parts;

    bool empty() const noexcept { return parts.empty(); }
};

struct Box {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;

    bool contains(const Point& p) const noexcept {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }
    bool intersects(const Box& o) const noexcept {
        return !(min_x > o.max_x || o.min_x > max_x || min_y > o.max_y ||
                 o.min_y > max_y);
    }
    void expand(const Box& o) noexcept {
        min_x = std::min(min_x, o.min_x);
        min_y = std::min(min_y, o.min_y);
        max_x = std::max(max_x, o.max_x);
        max_y = std::max(max_y, o.max_y);
    }
};

enum class GeometryErrorKind {
    too_few_points,
    ring_self_intersection,
    self_intersection,
    unclosed_ring,
    non_finite_coordinate,
};

const char* geometry_error_kind_name(GeometryErrorKind kind);

struct GeometryError {
    GeometryErrorKind kind;
    int part = 0;       // index into MultiPolygon::parts
    int ring = 0;       // 0 = exterior, 1.. = holes[ring - 1]
    Point location{};   // representative point of the defect, when known
    bool has_location = false;
};

// Geometric tolerance: coordinates are metres, so anything below a
// nanometre is noise.  This is both the boundary-test epsilon and the
// snap grid pitch of the overlay engine.
inline constexpr double kEpsilon = 1e-9;

inline bool point_finite(const Point& p) noexcept {
    return std::isfinite(p.x) && std::isfinite(p.y);
}

Box ring_box(const Ring& r);
Box shape_box(const MultiPolygon& m);

// Convenience builders used widely in tests and fixtures.
Ring make_ring(std::initializer_list<Point> pts);  // closes if needed
Polygon make_box_polygon(double min_x, double min_y, double max_x, double max_y);
MultiPolygon make_box_shape(double min_x, double min_y, double max_x, double max_y);

}  // namespace gridshed::geom
