#pragma once

// Data-parallel inner loops shared by the geometry layer: point-vs-edge
// crossing tests, shoelace accumulation and coordinate extents.  Every
// kernel exists as a scalar reference implementation and (on x86-64) an
// AVX2 variant; the active backend is chosen once at startup and can be
// forced with GRIDSHED_KERNELS=scalar|avx2.
//
// Edge arrays are SoA: x0/y0 hold the edge start, x1/y1 the edge end, all
// four arrays of length n.  Vertex arrays xs/ys describe a closed ring
// (first vertex repeated at the end); n is the vertex count including the
// closing repeat.

#include <cstddef>
#include <cstdint>

namespace gridshed::kernels {

struct PipResult {
    std::uint64_t crossings = 0;  // ray-crossing count, half-open rule
    bool on_edge = false;         // within eps of some edge segment
};

struct Centroid3 {
    double area2 = 0;  // twice the signed area
    double sx = 0;     // sum (xi + xj) * cross_ij, shifted frame
    double sy = 0;
};

struct Extent {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
};

enum class Backend { scalar, avx2 };

Backend backend();
const char* backend_name();

// Crossing parity plus boundary proximity of point (px,py) against a set
// of edges.  A point is on an edge when its squared distance to the
// segment is within eps^2.
PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps);

// Twice the signed area of a closed ring, accumulated in a frame shifted
// to the first vertex to limit cancellation.
double signed_area2(const double* xs, const double* ys, std::size_t n);

// Shoelace area and centroid accumulators in the shifted frame.  The
// caller recovers the centroid as first_vertex + (sx, sy) / (3 * area2).
Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n);

Extent extent(const double* xs, const double* ys, std::size_t n);

// Per-backend entry points, used by the equivalence tests.
namespace scalar_impl {
PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps);
double signed_area2(const double* xs, const double* ys, std::size_t n);
Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n);
Extent extent(const double* xs, const double* ys, std::size_t n);
}  // namespace scalar_impl

#if defined(__x86_64__) || defined(_M_X64)
#define GRIDSHED_HAVE_AVX2_BUILD 1
namespace avx2_impl {
PipResult point_vs_edges(const double* x0, const double* y0,
                         const double* x1, const double* y1, std::size_t n,
                         double px, double py, double eps);
double signed_area2(const double* xs, const double* ys, std::size_t n);
Centroid3 area_centroid(const double* xs, const double* ys, std::size_t n);
Extent extent(const double* xs, const double* ys, std::size_t n);
}  // namespace avx2_impl
#endif

}  // namespace gridshed::kernels
