#include "gridshed/kernels.hpp"

#ifdef GRIDSHED_HAVE_AVX2_BUILD

#include <immintrin.h>

#include <bit>

// This translation unit is compiled with -mavx2; nothing here may be
// called unless the CPU reports AVX2 support (see kernels.cpp).

namespace gridshed::kernels::avx2_impl {

namespace {

inline double reduce_add(__m256d v) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, v);
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps) {
    PipResult r;
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d veps = _mm256_set1_pd(eps);
    const __m256d veps2 = _mm256_set1_pd(eps * eps);
    const __m256d vzero = _mm256_setzero_pd();

    std::size_t i = 0;
    int on_mask = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ax = _mm256_loadu_pd(x0 + i);
        const __m256d ay = _mm256_loadu_pd(y0 + i);
        const __m256d bx = _mm256_loadu_pd(x1 + i);
        const __m256d by = _mm256_loadu_pd(y1 + i);

        const __m256d dx = _mm256_sub_pd(bx, ax);
        const __m256d dy = _mm256_sub_pd(by, ay);
        const __m256d cross = _mm256_sub_pd(
            _mm256_mul_pd(dx, _mm256_sub_pd(vpy, ay)),
            _mm256_mul_pd(dy, _mm256_sub_pd(vpx, ax)));

        const __m256d above_a = _mm256_cmp_pd(ay, vpy, _CMP_GT_OQ);
        const __m256d above_b = _mm256_cmp_pd(by, vpy, _CMP_GT_OQ);
        const __m256d span = _mm256_xor_pd(above_a, above_b);
        const __m256d pos = _mm256_cmp_pd(cross, vzero, _CMP_GT_OQ);
        const __m256d neg = _mm256_cmp_pd(cross, vzero, _CMP_LT_OQ);
        const __m256d dir_hit = _mm256_or_pd(_mm256_and_pd(above_b, pos),
                                             _mm256_andnot_pd(above_b, neg));
        const __m256d hit = _mm256_and_pd(span, dir_hit);
        r.crossings += static_cast<std::uint64_t>(
            std::popcount(static_cast<unsigned>(_mm256_movemask_pd(hit))));

        const __m256d lo_x = _mm256_sub_pd(_mm256_min_pd(ax, bx), veps);
        const __m256d hi_x = _mm256_add_pd(_mm256_max_pd(ax, bx), veps);
        const __m256d lo_y = _mm256_sub_pd(_mm256_min_pd(ay, by), veps);
        const __m256d hi_y = _mm256_add_pd(_mm256_max_pd(ay, by), veps);
        __m256d inbox = _mm256_and_pd(_mm256_cmp_pd(vpx, lo_x, _CMP_GE_OQ),
                                      _mm256_cmp_pd(vpx, hi_x, _CMP_LE_OQ));
        inbox = _mm256_and_pd(inbox, _mm256_cmp_pd(vpy, lo_y, _CMP_GE_OQ));
        inbox = _mm256_and_pd(inbox, _mm256_cmp_pd(vpy, hi_y, _CMP_LE_OQ));

        const __m256d edge2 = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
        const __m256d near = _mm256_cmp_pd(_mm256_mul_pd(cross, cross),
                                           _mm256_mul_pd(veps2, edge2), _CMP_LE_OQ);
        on_mask |= _mm256_movemask_pd(_mm256_and_pd(inbox, near));
    }
    r.on_edge = on_mask != 0;

    if (i < n) {
        const PipResult tail = scalar_impl::point_vs_edges(x0 + i, y0 + i, x1 + i,
                                                           y1 + i, n - i, px, py, eps);
        r.crossings += tail.crossings;
        r.on_edge = r.on_edge || tail.on_edge;
    }
    return r;
}

double signed_area2(const double* xs, const double* ys, std::size_t n) {
    if (n < 3) return 0.0;
    const double ox = xs[0], oy = ys[0];
    const __m256d vox = _mm256_set1_pd(ox);
    const __m256d voy = _mm256_set1_pd(oy);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t edges = n - 1;
    for (; i + 4 <= edges; i += 4) {
        const __m256d xi = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vox);
        const __m256d yi = _mm256_sub_pd(_mm256_loadu_pd(ys + i), voy);
        const __m256d xj = _mm256_sub_pd(_mm256_loadu_pd(xs + i + 1), vox);
        const __m256d yj = _mm256_sub_pd(_mm256_loadu_pd(ys + i + 1), voy);
        acc = _mm256_add_pd(acc, _mm256_sub_pd(_mm256_mul_pd(xi, yj),
                                               _mm256_mul_pd(xj, yi)));
    }
    double total = reduce_add(acc);
    for (; i < edges; ++i) {
        const double xi = xs[i] - ox, yi = ys[i] - oy;
        const double xj = xs[i + 1] - ox, yj = ys[i + 1] - oy;
        total += xi * yj - xj * yi;
    }
    return total;
}

Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n) {
    Centroid3 c;
    if (n < 3) return c;
    const double ox = xs[0], oy = ys[0];
    const __m256d vox = _mm256_set1_pd(ox);
    const __m256d voy = _mm256_set1_pd(oy);
    __m256d acc_a = _mm256_setzero_pd();
    __m256d acc_x = _mm256_setzero_pd();
    __m256d acc_y = _mm256_setzero_pd();
    std::size_t i = 0;
    const std::size_t edges = n - 1;
    for (; i + 4 <= edges; i += 4) {
        const __m256d xi = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vox);
        const __m256d yi = _mm256_sub_pd(_mm256_loadu_pd(ys + i), voy);
        const __m256d xj = _mm256_sub_pd(_mm256_loadu_pd(xs + i + 1), vox);
        const __m256d yj = _mm256_sub_pd(_mm256_loadu_pd(ys + i + 1), voy);
        const __m256d cr = _mm256_sub_pd(_mm256_mul_pd(xi, yj), _mm256_mul_pd(xj, yi));
        acc_a = _mm256_add_pd(acc_a, cr);
        acc_x = _mm256_add_pd(acc_x, _mm256_mul_pd(_mm256_add_pd(xi, xj), cr));
        acc_y = _mm256_add_pd(acc_y, _mm256_mul_pd(_mm256_add_pd(yi, yj), cr));
    }
    c.area2 = reduce_add(acc_a);
    c.sx = reduce_add(acc_x);
    c.sy = reduce_add(acc_y);
    for (; i < edges; ++i) {
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
    if (n < 8) return scalar_impl::extent(xs, ys, n);
    __m256d min_x = _mm256_loadu_pd(xs);
    __m256d max_x = min_x;
    __m256d min_y = _mm256_loadu_pd(ys);
    __m256d max_y = min_y;
    std::size_t i = 4;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(xs + i);
        const __m256d vy = _mm256_loadu_pd(ys + i);
        min_x = _mm256_min_pd(min_x, vx);
        max_x = _mm256_max_pd(max_x, vx);
        min_y = _mm256_min_pd(min_y, vy);
        max_y = _mm256_max_pd(max_y, vy);
    }
    if (i < n) {
        // Overlapping final block keeps the loads in range.
        const __m256d vx = _mm256_loadu_pd(xs + n - 4);
        const __m256d vy = _mm256_loadu_pd(ys + n - 4);
        min_x = _mm256_min_pd(min_x, vx);
        max_x = _mm256_max_pd(max_x, vx);
        min_y = _mm256_min_pd(min_y, vy);
        max_y = _mm256_max_pd(max_y, vy);
    }
    alignas(32) double lane[4];
    auto hreduce = [&lane](__m256d v, bool want_min) {
        _mm256_store_pd(lane, v);
        double r = lane[0];
        for (int k = 1; k < 4; ++k) r = want_min ? (lane[k] < r ? lane[k] : r)
                                                 : (lane[k] > r ? lane[k] : r);
        return r;
    };
    e.min_x = hreduce(min_x, true);
    e.max_x = hreduce(max_x, false);
    e.min_y = hreduce(min_y, true);
    e.max_y = hreduce(max_y, false);
    return e;
}

}  // namespace gridshed::kernels::avx2_impl

#endif  // GRIDSHED_HAVE_AVX2_BUILD
