#include "gridshed/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace gridshed::kernels::scalar_impl {

PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps) {
    PipResult r;
    const double eps2 = eps * eps;
    for (std::size_t i = 0; i < n; ++i) {
        const double ax = x0[i], ay = y0[i], bx = x1[i], by = y1[i];
        const double dx = bx - ax, dy = by - ay;
        const double cross = dx * (py - ay) - dy * (px - ax);

        // Half-open crossing rule: the edge spans py with exactly one
        // endpoint strictly above, and the intersection lies right of px.
        const bool above_a = ay > py;
        const bool above_b = by > py;
        if (above_a != above_b) {
            if (above_b ? (cross > 0.0) : (cross < 0.0)) ++r.crossings;
        }

        // Boundary proximity: squared distance to the segment within eps2.
        const double lo_x = std::min(ax, bx) - eps, hi_x = std::max(ax, bx) + eps;
        const double lo_y = std::min(ay, by) - eps, hi_y = std::max(ay, by) + eps;
        if (px >= lo_x && px <= hi_x && py >= lo_y && py <= hi_y) {
            if (cross * cross <= eps2 * (dx * dx + dy * dy)) r.on_edge = true;
        }
    }
    return r;
}

double signed_area2(const double* xs, const double* ys, std::size_t n) {
    if (n < 3) return 0.0;
    const double ox = xs[0], oy = ys[0];
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xi = xs[i] - ox, yi = ys[i] - oy;
        const double xj = xs[i + 1] - ox, yj = ys[i + 1] - oy;
        acc += xi * yj - xj * yi;
    }
    return acc;
}

Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n) {
    Centroid3 c;
    if (n < 3) return c;
    const double ox = xs[0], oy = ys[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double xi = xs[i] - ox, yi = ys[i] - oy;
        const double xj = xs[i + 1] - ox, yj = ys[i + 1] - oy;
        const double cr = xi * yj - xj * yi;
        c.area2 += cr;
        c.sx += (xi + xj) * cr;
        c.sy += (yi + yj) * cr;
    }
    return c;
}

Extent extent(const double* xs, const double* ys, std::size_t n) {
    Extent e;
    if (n == 0) return e;
    e.min_x = e.max_x = xs[0];
    e.min_y = e.max_y = ys[0];
    for (std::size_t i = 1; i < n; ++i) {
        e.min_x = std::min(e.min_x, xs[i]);
        e.max_x = std::max(e.max_x, xs[i]);
        e.min_y = std::min(e.min_y, ys[i]);
        e.max_y = std::max(e.max_y, ys[i]);
    }
    return e;
}

}  // namespace gridshed::kernels::scalar_impl
