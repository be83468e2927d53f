#include "gridshed/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace gridshed::kernels {

namespace {

Backend pick_backend() {
    const char* force = std::getenv("GRIDSHED_KERNELS");
    if (force && std::strcmp(force, "scalar") == 0) return Backend::scalar;
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    if (__builtin_cpu_supports("avx2")) {
        if (!force || std::strcmp(force, "avx2") == 0) return Backend::avx2;
    }
#endif
    return Backend::scalar;
}

const Backend g_backend = pick_backend();

}  // namespace

Backend backend() { return g_backend; }

const char* backend_name() {
    return g_backend == Backend::avx2 ? "avx2" : "scalar";
}

PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps) {
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2)
        return avx2_impl::point_vs_edges(x0, y0, x1, y1, n, px, py, eps);
#endif
    return scalar_impl::point_vs_edges(x0, y0, x1, y1, n, px, py, eps);
}

double signed_area2(const double* xs, const double* ys, std::size_t n) {
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2_impl::signed_area2(xs, ys, n);
#endif
    return scalar_impl::signed_area2(xs, ys, n);
}

Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n) {
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2_impl::area_centroid(xs, ys, n);
#endif
    return scalar_impl::area_centroid(xs, ys, n);
}

Extent extent(const double* xs, const double* ys, std::size_t n) {
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    if (g_backend == Backend::avx2) return avx2_impl::extent(xs, ys, n);
#endif
    return scalar_impl::extent(xs, ys, n);
}

}  // namespace gridshed::kernels
