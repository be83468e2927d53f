#include <doctest.h>

#include <random>

#include "gridshed/geom/measure.hpp"
#include "gridshed/geom/overlay.hpp"
#include "gridshed/geom/prepared.hpp"
#include "gridshed/geom/validate.hpp"
#include "oracles.hpp"

using namespace gridshed::geom;

namespace {

MultiPolygon box(double x0, double y0, double x1, double y1) {
    return make_box_shape(x0, y0, x1, y1);
}

}  // namespace

TEST_CASE("union dissolves a shared edge") {
    const auto u = overlay(box(0, 0, 1, 1), box(1, 0, 2, 1), BoolOp::union_op);
    CHECK(u.parts.size() == 1);
    CHECK(area_m2(u) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(u.parts[0].holes.empty());
    CHECK(validate(u).empty());
}

TEST_CASE("boolean ops on overlapping squares") {
    const auto a = box(0, 0, 2, 2);
    const auto b = box(1, 1, 3, 3);

    const auto inter = overlay(a, b, BoolOp::intersection);
    CHECK(area_m2(inter) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(validate(inter).empty());

    const auto uni = overlay(a, b, BoolOp::union_op);
    CHECK(area_m2(uni) == doctest::Approx(7.0).epsilon(1e-12));
    CHECK(uni.parts.size() == 1);
    CHECK(validate(uni).empty());

    const auto diff = overlay(a, b, BoolOp::difference);
    CHECK(area_m2(diff) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(validate(diff).empty());

    const auto sym = overlay(a, b, BoolOp::xor_op);
    CHECK(area_m2(sym) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("union at a single shared corner keeps two simple parts") {
    const auto u = overlay(box(0, 0, 1, 1), box(1, 1, 2, 2), BoolOp::union_op);
    CHECK(u.parts.size() == 2);
    CHECK(area_m2(u) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(validate(u).empty());
}

TEST_CASE("difference carves a hole") {
    const auto d = overlay(box(0, 0, 4, 4), box(1, 1, 2, 2), BoolOp::difference);
    REQUIRE(d.parts.size() == 1);
    CHECK(d.parts[0].holes.size() == 1);
    CHECK(area_m2(d) == doctest::Approx(15.0).epsilon(1e-12));
    CHECK(validate(d).empty());

    // An island inside the hole survives as its own part.
    MultiPolygon with_island = d;
    const auto island = box(1.25, 1.25, 1.75, 1.75);
    const auto u = overlay(with_island, island, BoolOp::union_op);
    CHECK(u.parts.size() == 2);
    CHECK(area_m2(u) == doctest::Approx(15.25).epsilon(1e-12));
    CHECK(validate(u).empty());
}

TEST_CASE("union_all over a 3x3 tile grid") {
    std::vector<MultiPolygon> tiles;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) tiles.push_back(box(i, j, i + 1, j + 1));
    const auto u = union_all(tiles);
    CHECK(u.parts.size() == 1);
    CHECK(u.parts[0].holes.empty());
    CHECK(area_m2(u) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(validate(u).empty());
}

TEST_CASE("even-odd decomposition of a bow-tie") {
    MultiPolygon bow;
    Polygon p;
    p.exterior = make_ring({{0, 0}, {2, 2}, {2, 0}, {0, 2}});
    bow.parts.push_back(p);

    const auto fixed = even_odd_decompose(bow);
    CHECK(fixed.parts.size() == 2);
    CHECK(area_m2(fixed) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(validate(fixed).empty());

    // Point-wise agreement with the even-odd parity oracle away from edges.
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> c(-0.5, 2.5);
    const auto rings = oracle::all_rings(bow);
    const PreparedShape prepared(fixed);
    int checked = 0;
    while (checked < 500) {
        const Point pt{c(rng), c(rng)};
        // keep clear of input and output edges
        const double d1 = std::abs(pt.x - pt.y), d2 = std::abs(pt.x + pt.y - 2.0);
        if (d1 < 1e-3 || d2 < 1e-3) continue;
        if (std::abs(pt.x) < 1e-3 || std::abs(pt.x - 2) < 1e-3) continue;
        if (std::abs(pt.y) < 1e-3 || std::abs(pt.y - 2) < 1e-3) continue;
        CHECK(oracle::even_odd_parity(rings, pt) == prepared.contains(pt));
        ++checked;
    }
}

TEST_CASE("duplicate ring cancels under even-odd") {
    MultiPolygon doubled;
    doubled.parts.push_back(make_box_polygon(0, 0, 1, 1));
    doubled.parts.push_back(make_box_polygon(0, 0, 1, 1));
    const auto fixed = even_odd_decompose(doubled);
    CHECK(fixed.empty());
}

TEST_CASE("partial collinear overlap is noded correctly") {
    // Second square shares half of the first one's right edge.
    const auto u = overlay(box(0, 0, 1, 1), box(1, 0.25, 2, 0.75), BoolOp::union_op);
    CHECK(u.parts.size() == 1);
    CHECK(area_m2(u) == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(validate(u).empty());
}

TEST_CASE("coverage extraction via operand sets") {
    OverlaySet set;
    const int cov = set.add(box(0, 0, 10, 10));
    set.add(box(0, 0, 6, 10));
    set.add(box(6, 0, 10, 4));
    set.build();
    // Region covered by the coverage operand alone: the top-right notch.
    const auto holes = set.extract([cov](std::span<const int> ops) {
        return ops.size() == 1 && ops[0] == cov;
    });
    CHECK(area_m2(holes) == doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("random rectangle soup: union area matches inclusion-exclusion sampling") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> c(0.0, 20.0);
    std::uniform_real_distribution<double> w(0.5, 6.0);
    std::vector<MultiPolygon> rects;
    for (int i = 0; i < 12; ++i) {
        const double x = c(rng), y = c(rng), dw = w(rng), dh = w(rng);
        rects.push_back(box(x, y, x + dw, y + dh));
    }
    const auto u = union_all(rects);
    CHECK(validate(u).empty());

    // Monte-Carlo union area.
    std::uniform_real_distribution<double> s(0.0, 26.0);
    std::size_t inside = 0;
    const std::size_t samples = 200000;
    for (std::size_t k = 0; k < samples; ++k) {
        const Point p{s(rng), s(rng)};
        bool any = false;
        for (const auto& r : rects)
            if (oracle::shape_contains(r, p, 0.0)) {
                any = true;
                break;
            }
        if (any) ++inside;
    }
    const double mc = 26.0 * 26.0 * static_cast<double>(inside) /
                      static_cast<double>(samples);
    CHECK(area_m2(u) == doctest::Approx(mc).epsilon(0.02));
}
