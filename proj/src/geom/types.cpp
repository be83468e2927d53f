#include "gridshed/geom/types.hpp"

#include "gridshed/kernels.hpp"

namespace gridshed::geom {

const char* geometry_error_kind_name(GeometryErrorKind kind) {
    switch (kind) {
        case GeometryErrorKind::too_few_points: return "TooFewPoints";
        case GeometryErrorKind::ring_self_intersection: return "RingSelfIntersection";
        case GeometryErrorKind::self_intersection: return "SelfIntersection";
        case GeometryErrorKind::unclosed_ring: return "UnclosedRing";
        case GeometryErrorKind::non_finite_coordinate: return "NonFiniteCoordinate";
    }
    return "Unknown";
}

Box ring_box(const Ring& r) {
    if (r.empty()) return {};
    std::vector<double> xs(r.size()), ys(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        xs[i] = r[i].x;
        ys[i] = r[i].y;
    }
    const auto e = kernels::extent(xs.data(), ys.data(), r.size());
    return {e.min_x, e.min_y, e.max_x, e.max_y};
}

Box shape_box(const MultiPolygon& m) {
    Box box{};
    bool first = true;
    for (const auto& part : m.parts) {
        if (part.exterior.empty()) continue;
        const Box b = ring_box(part.exterior);
        if (first) {
            box = b;
            first = false;
        } else {
            box.expand(b);
        }
    }
    return box;
}

Ring make_ring(std::initializer_list<Point> pts) {
    Ring r(pts);
    if (!r.empty() && !(r.front() == r.back())) r.push_back(r.front());
    return r;
}

Polygon make_box_polygon(double min_x, double min_y, double max_x, double max_y) {
    Polygon p;
    p.exterior = make_ring({{min_x, min_y}, {max_x, min_y}, {max_x, max_y}, {min_x, max_y}});
    return p;
}

MultiPolygon make_box_shape(double min_x, double min_y, double max_x, double max_y) {
    MultiPolygon m;
    m.parts.push_back(make_box_polygon(min_x, min_y, max_x, max_y));
    return m;
}

}  // namespace gridshed::geom
