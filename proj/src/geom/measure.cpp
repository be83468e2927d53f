#include "gridshed/geom/measure.hpp"

#include <cmath>
#include <vector>

#include "gridshed/errors.hpp"
#include "gridshed/kernels.hpp"

namespace gridshed::geom {

namespace {

struct RingMoments {
    double area = 0;  // unsigned
    double cx = 0;    // area-weighted centroid
    double cy = 0;
};

RingMoments ring_moments(const Ring& r) {
    RingMoments m;
    if (r.size() < 4) return m;
    std::vector<double> xs(r.size()), ys(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        xs[i] = r[i].x;
        ys[i] = r[i].y;
    }
    const auto c = kernels::area_centroid(xs.data(), ys.data(), r.size());
    m.area = std::abs(c.area2) * 0.5;
    if (c.area2 != 0.0) {
        m.cx = r.front().x + c.sx / (3.0 * c.area2);
        m.cy = r.front().y + c.sy / (3.0 * c.area2);
    }
    return m;
}

}  // namespace

double area_m2(const MultiPolygon& shape) {
    double total = 0;
    for (const auto& part : shape.parts) {
        total += ring_moments(part.exterior).area;
        for (const auto& h : part.holes) total -= ring_moments(h).area;
    }
    return total < 0 ? 0.0 : total;
}

Point centroid(const MultiPolygon& shape) {
    double area = 0, mx = 0, my = 0;
    for (const auto& part : shape.parts) {
        const auto e = ring_moments(part.exterior);
        area += e.area;
        mx += e.area * e.cx;
        my += e.area * e.cy;
        for (const auto& h : part.holes) {
            const auto hm = ring_moments(h);
            area -= hm.area;
            mx -= hm.area * hm.cx;
            my -= hm.area * hm.cy;
        }
    }
    if (!(area > 0))
        throw Error(ErrorCode::zero_area_shape, "centroid of zero-area shape");
    return {mx / area, my / area};
}

}  // namespace gridshed::geom
