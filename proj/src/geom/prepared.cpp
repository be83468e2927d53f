#include "gridshed/geom/prepared.hpp"

#include "gridshed/kernels.hpp"

namespace gridshed::geom {

void PreparedRing::assign(const Ring& r) {
    x0.clear();
    y0.clear();
    x1.clear();
    y1.clear();
    if (r.size() < 2) return;
    const std::size_t edges = r.size() - 1;
    x0.reserve(edges);
    y0.reserve(edges);
    x1.reserve(edges);
    y1.reserve(edges);
    for (std::size_t i = 0; i < edges; ++i) {
        x0.push_back(r[i].x);
        y0.push_back(r[i].y);
        x1.push_back(r[i + 1].x);
        y1.push_back(r[i + 1].y);
    }
    const Box b = ring_box(r);
    box = {b.min_x - kEpsilon, b.min_y - kEpsilon, b.max_x + kEpsilon, b.max_y + kEpsilon};
}

namespace {

kernels::PipResult ring_pip(const PreparedRing& r, const Point& p) {
    return kernels::point_vs_edges(r.x0.data(), r.y0.data(), r.x1.data(),
                                   r.y1.data(), r.edge_count(), p.x, p.y, kEpsilon);
}

}  // namespace

PreparedShape::PreparedShape(const MultiPolygon& shape) {
    parts_.reserve(shape.parts.size());
    bool first = true;
    for (const auto& part : shape.parts) {
        PreparedPart pp;
        pp.exterior.assign(part.exterior);
        pp.holes.reserve(part.holes.size());
        for (const auto& h : part.holes) {
            PreparedRing hr;
            hr.assign(h);
            pp.holes.push_back(std::move(hr));
        }
        if (first) {
            box_ = pp.exterior.box;
            first = false;
        } else {
            box_.expand(pp.exterior.box);
        }
        parts_.push_back(std::move(pp));
    }
}

bool PreparedShape::contains(const Point& p) const {
    if (parts_.empty() || !box_.contains(p)) return false;
    for (const auto& part : parts_) {
        if (!part.exterior.box.contains(p)) continue;
        const auto ext = ring_pip(part.exterior, p);
        if (ext.on_edge) return true;
        if ((ext.crossings & 1U) == 0) continue;
        bool in_hole = false;
        for (const auto& hole : part.holes) {
            if (!hole.box.contains(p)) continue;
            const auto hr = ring_pip(hole, p);
            if (hr.on_edge) return true;  // hole boundary is shape boundary
            if (hr.crossings & 1U) {
                in_hole = true;
                break;
            }
        }
        if (!in_hole) return true;
    }
    return false;
}

bool contains(const MultiPolygon& shape, const Point& p) {
    return PreparedShape(shape).contains(p);
}

}  // namespace gridshed::geom
