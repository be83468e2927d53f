#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "gridshed/kernels.hpp"
#include "oracles.hpp"

using namespace gridshed;

namespace {

struct RandomRing {
    std::vector<double> xs, ys;          // closed vertex arrays
    std::vector<double> x0, y0, x1, y1;  // edge SoA
};

// Star-shaped ring around a centre: always closed, arbitrary vertex count.
RandomRing make_ring(std::mt19937_64& rng, std::size_t n, double cx, double cy) {
    std::uniform_real_distribution<double> radius(0.5, 10.0);
    RandomRing r;
    for (std::size_t i = 0; i < n; ++i) {
        const double ang = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n);
        const double rad = radius(rng);
        r.xs.push_back(cx + rad * std::cos(ang));
        r.ys.push_back(cy + rad * std::sin(ang));
    }
    r.xs.push_back(r.xs.front());
    r.ys.push_back(r.ys.front());
    for (std::size_t i = 0; i + 1 < r.xs.size(); ++i) {
        r.x0.push_back(r.xs[i]);
        r.y0.push_back(r.ys[i]);
        r.x1.push_back(r.xs[i + 1]);
        r.y1.push_back(r.ys[i + 1]);
    }
    return r;
}

bool have_avx2() {
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

}  // namespace

TEST_CASE("scalar point-vs-edges agrees with a naive reference") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> coord(-12.0, 12.0);
    for (int t = 0; t < 50; ++t) {
        const auto ring = make_ring(rng, 3 + t % 37, 0.0, 0.0);
        gridshed::geom::Ring gr;
        for (std::size_t i = 0; i < ring.xs.size(); ++i)
            gr.push_back({ring.xs[i], ring.ys[i]});
        for (int q = 0; q < 40; ++q) {
            const geom::Point p{coord(rng), coord(rng)};
            const auto res = kernels::scalar_impl::point_vs_edges(
                ring.x0.data(), ring.y0.data(), ring.x1.data(), ring.y1.data(),
                ring.x0.size(), p.x, p.y, 1e-9);
            bool on_edge = false;
            const bool inside = oracle::ring_contains(gr, p, 1e-9, &on_edge);
            if (on_edge || res.on_edge) continue;  // boundary grazing: both fuzzy
            CHECK(((res.crossings & 1) == 1) == inside);
        }
    }
}

TEST_CASE("avx2 kernels match scalar kernels") {
    if (!have_avx2()) return;
#ifdef GRIDSHED_HAVE_AVX2_BUILD
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-15.0, 15.0);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 3 + static_cast<std::size_t>(t) % 61;
        const auto ring = make_ring(rng, n, coord(rng), coord(rng));

        // Point tests: bit-identical lane arithmetic, so exact equality.
        for (int q = 0; q < 20; ++q) {
            const double px = coord(rng), py = coord(rng);
            const auto s = kernels::scalar_impl::point_vs_edges(
                ring.x0.data(), ring.y0.data(), ring.x1.data(), ring.y1.data(),
                ring.x0.size(), px, py, 1e-9);
            const auto v = kernels::avx2_impl::point_vs_edges(
                ring.x0.data(), ring.y0.data(), ring.x1.data(), ring.y1.data(),
                ring.x0.size(), px, py, 1e-9);
            CHECK(s.crossings == v.crossings);
            CHECK(s.on_edge == v.on_edge);
        }

        // Accumulations: lane order differs, so compare to tolerance.
        const double sa = kernels::scalar_impl::signed_area2(ring.xs.data(), ring.ys.data(),
                                                             ring.xs.size());
        const double va = kernels::avx2_impl::signed_area2(ring.xs.data(), ring.ys.data(),
                                                           ring.xs.size());
        CHECK(va == doctest::Approx(sa).epsilon(1e-12));

        const auto sc = kernels::scalar_impl::area_centroid(ring.xs.data(), ring.ys.data(),
                                                            ring.xs.size());
        const auto vc = kernels::avx2_impl::area_centroid(ring.xs.data(), ring.ys.data(),
                                                          ring.xs.size());
        CHECK(vc.area2 == doctest::Approx(sc.area2).epsilon(1e-12));
        CHECK(vc.sx == doctest::Approx(sc.sx).epsilon(1e-9));
        CHECK(vc.sy == doctest::Approx(sc.sy).epsilon(1e-9));

        const auto se = kernels::scalar_impl::extent(ring.xs.data(), ring.ys.data(),
                                                     ring.xs.size());
        const auto ve = kernels::avx2_impl::extent(ring.xs.data(), ring.ys.data(),
                                                   ring.xs.size());
        CHECK(se.min_x == ve.min_x);
        CHECK(se.max_x == ve.max_x);
        CHECK(se.min_y == ve.min_y);
        CHECK(se.max_y == ve.max_y);
    }
#endif
}

TEST_CASE("signed area of canonical rings") {
    // CCW unit square: area2 = +2.
    const std::vector<double> xs{0, 1, 1, 0, 0};
    const std::vector<double> ys{0, 0, 1, 1, 0};
    CHECK(kernels::signed_area2(xs.data(), ys.data(), 5) == doctest::Approx(2.0));
    // Clockwise: negative.
    const std::vector<double> xs_cw{0, 0, 1, 1, 0};
    const std::vector<double> ys_cw{0, 1, 1, 0, 0};
    CHECK(kernels::signed_area2(xs_cw.data(), ys_cw.data(), 5) == doctest::Approx(-2.0));
}

TEST_CASE("point-vs-edges boundary rule") {
    const std::vector<double> x0{0, 1, 1, 0};
    const std::vector<double> y0{0, 0, 1, 1};
    const std::vector<double> x1{1, 1, 0, 0};
    const std::vector<double> y1{0, 1, 1, 0};
    auto run = [&](double px, double py) {
        return kernels::point_vs_edges(x0.data(), y0.data(), x1.data(), y1.data(), 4,
                                       px, py, 1e-9);
    };
    CHECK((run(0.5, 0.5).crossings & 1) == 1);
    CHECK((run(2.0, 2.0).crossings & 1) == 0);
    CHECK(run(1.0, 0.5).on_edge);   // on the right edge
    CHECK(run(0.0, 0.0).on_edge);   // at a vertex
    CHECK(!run(1.1, 0.5).on_edge);
}
