#include <doctest.h>

#include <algorithm>
#include <random>

#include "gridshed/errors.hpp"
#include "gridshed/geom/measure.hpp"
#include "gridshed/geom/prepared.hpp"
#include "gridshed/geom/spatial_index.hpp"
#include "gridshed/geom/validate.hpp"
#include "gridshed/geom/voronoi.hpp"
#include "oracles.hpp"

using namespace gridshed;
using namespace gridshed::geom;

namespace {

bool has_kind(const std::vector<GeometryError>& errs, GeometryErrorKind k) {
    return std::any_of(errs.begin(), errs.end(),
                       [k](const GeometryError& e) { return e.kind == k; });
}

}  // namespace

TEST_CASE("validate: canonical cases") {
    CHECK(validate(make_box_shape(0, 0, 1, 1)).empty());

    MultiPolygon degenerate;
    degenerate.parts.push_back({Ring{{0, 0}, {1, 0}, {0, 0}}, {}});
    const auto errs = validate(degenerate);
    CHECK(errs.size() == 1);
    CHECK(has_kind(errs, GeometryErrorKind::too_few_points));

    MultiPolygon bow;
    bow.parts.push_back({make_ring({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), {}});
    CHECK(oracle::ring_self_intersects(bow.parts[0].exterior));
    const auto bow_errs = validate(bow);
    REQUIRE(!bow_errs.empty());
    CHECK((bow_errs[0].kind == GeometryErrorKind::ring_self_intersection ||
           bow_errs[0].kind == GeometryErrorKind::self_intersection));

    MultiPolygon open_ring;
    open_ring.parts.push_back({Ring{{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {}});
    CHECK(has_kind(validate(open_ring), GeometryErrorKind::unclosed_ring));

    MultiPolygon nan_ring;
    nan_ring.parts.push_back(
        {make_ring({{0, 0}, {1, 0}, {std::nan(""), 1}, {0, 1}}), {}});
    CHECK(has_kind(validate(nan_ring), GeometryErrorKind::non_finite_coordinate));

    MultiPolygon dup;
    dup.parts.push_back(
        {make_ring({{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}}), {}});
    CHECK(has_kind(validate(dup), GeometryErrorKind::ring_self_intersection));

    // Hole escaping its exterior.
    MultiPolygon bad_hole = make_box_shape(0, 0, 2, 2);
    bad_hole.parts[0].holes.push_back(
        make_ring({{1.5, 1.5}, {3.0, 1.5}, {3.0, 3.0}, {1.5, 3.0}}));
    CHECK(has_kind(validate(bad_hole), GeometryErrorKind::self_intersection));

    // Overlapping parts.
    MultiPolygon overlap;
    overlap.parts.push_back(make_box_polygon(0, 0, 2, 2));
    overlap.parts.push_back(make_box_polygon(1, 1, 3, 3));
    CHECK(has_kind(validate(overlap), GeometryErrorKind::self_intersection));

    // Touching parts are fine.
    MultiPolygon touching;
    touching.parts.push_back(make_box_polygon(0, 0, 1, 1));
    touching.parts.push_back(make_box_polygon(1, 0, 2, 1));
    CHECK(validate(touching).empty());
}

TEST_CASE("repair: identity, bow-tie, duplicates, idempotence") {
    const auto square = make_box_shape(0, 0, 1, 1);
    const auto same = repair(square);
    REQUIRE(same.parts.size() == 1);
    CHECK(same.parts[0].exterior == square.parts[0].exterior);

    MultiPolygon bow;
    bow.parts.push_back({make_ring({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), {}});
    const auto fixed = repair(bow);
    CHECK(fixed.parts.size() == 2);
    CHECK(validate(fixed).empty());
    CHECK(area_m2(fixed) == doctest::Approx(2.0).epsilon(1e-12));

    const auto fixed2 = repair(fixed);
    CHECK(fixed2.parts.size() == fixed.parts.size());
    CHECK(area_m2(fixed2) == doctest::Approx(area_m2(fixed)).epsilon(1e-12));

    MultiPolygon dup;
    dup.parts.push_back(
        {make_ring({{0, 0}, {1, 0}, {1, 0}, {1, 1}, {0, 1}}), {}});
    const auto cleaned = repair(dup);
    CHECK(validate(cleaned).empty());
    CHECK(area_m2(cleaned) == doctest::Approx(1.0).epsilon(1e-12));

    MultiPolygon hopeless;
    hopeless.parts.push_back({Ring{{0, 0}, {1, 0}, {0, 0}}, {}});
    CHECK_THROWS_AS((void)repair(hopeless), Error);
}

TEST_CASE("contains: interior, exterior, boundary-inclusive") {
    const auto square = make_box_shape(0, 0, 1, 1);
    CHECK(contains(square, {0.5, 0.5}));
    CHECK(!contains(square, {2.0, 2.0}));
    CHECK(contains(square, {1.0, 0.5}));  // boundary counts as inside
    CHECK(contains(square, {0.0, 0.0}));

    // Hole behaviour: inside the hole is outside, hole rim is inside.
    MultiPolygon holed = make_box_shape(0, 0, 4, 4);
    holed.parts[0].holes.push_back(make_ring({{1, 1}, {3, 1}, {3, 3}, {1, 3}}));
    CHECK(!contains(holed, {2.0, 2.0}));
    CHECK(contains(holed, {1.0, 2.0}));
    CHECK(contains(holed, {0.5, 0.5}));
}

TEST_CASE("area_km2: squares, holes, additivity") {
    CHECK(area_km2(make_box_shape(0, 0, 1000, 1000)) == doctest::Approx(1.0));

    MultiPolygon holed = make_box_shape(0, 0, 1000, 1000);
    holed.parts[0].holes.push_back(
        make_ring({{250, 250}, {750, 250}, {750, 750}, {250, 750}}));
    CHECK(area_km2(holed) == doctest::Approx(0.75));

    MultiPolygon ell;
    ell.parts.push_back(make_box_polygon(0, 0, 1000, 1000));
    ell.parts.push_back(make_box_polygon(1000, 0, 2000, 1000));
    CHECK(area_km2(ell) == doctest::Approx(2.0));
}

TEST_CASE("centroid: symmetry, weighting, Monte-Carlo oracle") {
    const auto sq = make_box_shape(0, 0, 1, 1);
    const auto c = centroid(sq);
    CHECK(c.x == doctest::Approx(0.5));
    CHECK(c.y == doctest::Approx(0.5));

    MultiPolygon two;
    two.parts.push_back(make_box_polygon(0, 0, 1, 1));
    two.parts.push_back(make_box_polygon(10, 0, 11, 1));
    CHECK(centroid(two).x == doctest::Approx(5.5));

    MultiPolygon blob;
    blob.parts.push_back({make_ring({{0, 0}, {4, 0}, {4, 1}, {1, 1}, {1, 3}, {0, 3}}), {}});
    const auto mc = oracle::monte_carlo_centroid(blob, 1000000, 2024);
    const auto exact_c = centroid(blob);
    CHECK(exact_c.x == doctest::Approx(mc.x).epsilon(0).scale(0).epsilon(1e-2));
    CHECK(std::abs(exact_c.x - mc.x) < 1e-3 * 4.0);
    CHECK(std::abs(exact_c.y - mc.y) < 1e-3 * 4.0);

    CHECK_THROWS_AS((void)centroid(MultiPolygon{}), Error);
}

TEST_CASE("voronoi: two seeds split at the bisector") {
    const std::vector<Point> seeds{{0, 0}, {2, 0}};
    const auto clip = make_box_shape(-1, -1, 3, 1);
    const auto cells = voronoi_cells(seeds, clip);
    REQUIRE(cells.size() == 2);
    CHECK(area_m2(cells[0]) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(area_m2(cells[1]) == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(contains(cells[0], {0, 0}));
    CHECK(contains(cells[1], {2, 0}));
    CHECK(contains(cells[0], {0.9, 0.0}));
    CHECK(!contains(cells[0], {1.1, 0.0}));
}

TEST_CASE("voronoi: single seed owns the whole clip") {
    MultiPolygon clip;
    clip.parts.push_back({make_ring({{0, 0}, {8, 0}, {8, 5}, {3, 7}, {0, 5}}), {}});
    const auto cells = voronoi_cells(std::vector<Point>{{2, 2}}, clip);
    REQUIRE(cells.size() == 1);
    CHECK(area_m2(cells[0]) == doctest::Approx(area_m2(clip)).epsilon(1e-9));
}

TEST_CASE("voronoi: errors") {
    const auto clip = make_box_shape(0, 0, 1, 1);
    CHECK_THROWS_AS((void)voronoi_cells(std::vector<Point>{}, clip), Error);
    CHECK_THROWS_AS(
        (void)voronoi_cells(std::vector<Point>{{0.5, 0.5}, {0.5, 0.5}}, clip), Error);
    CHECK_THROWS_AS(
        (void)voronoi_cells(std::vector<Point>{{0.5, 0.5}, {4.0, 4.0}}, clip), Error);
}

TEST_CASE("voronoi: random seeds agree with the nearest-seed oracle") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> c(0.05, 0.95);
    std::vector<Point> seeds;
    for (int i = 0; i < 5; ++i) seeds.push_back({c(rng), c(rng)});
    const auto clip = make_box_shape(0, 0, 1, 1);
    const auto cells = voronoi_cells(seeds, clip);

    double total = 0;
    for (const auto& cell : cells) total += area_m2(cell);
    CHECK(total == doctest::Approx(area_m2(clip)).epsilon(1e-9));

    std::vector<PreparedShape> prepared;
    prepared.reserve(cells.size());
    for (const auto& cell : cells) prepared.emplace_back(cell);

    const int grid = 120;
    for (int gi = 0; gi < grid; ++gi) {
        for (int gj = 0; gj < grid; ++gj) {
            const Point p{(gi + 0.5) / grid, (gj + 0.5) / grid};
            const auto [d1, d2] = oracle::nearest_two_dist(seeds, p);
            if (d2 - d1 < 2.0 / grid) continue;  // too close to a bisector
            const std::size_t want = oracle::nearest_seed(seeds, p);
            for (std::size_t s = 0; s < cells.size(); ++s)
                CHECK(prepared[s].contains(p) == (s == want));
        }
    }
}

TEST_CASE("dissolve: merge, multipart, conservation") {
    std::vector<MultiPolygon> cells{make_box_shape(0, 0, 1, 1),
                                    make_box_shape(1, 0, 2, 1),
                                    make_box_shape(5, 0, 6, 1)};
    std::vector<std::string> parents{"P1", "P1", "P1"};
    auto merged = dissolve(cells, parents);
    REQUIRE(merged.count("P1") == 1);
    CHECK(merged["P1"].parts.size() == 2);
    CHECK(area_m2(merged["P1"]) == doctest::Approx(3.0).epsilon(1e-12));

    std::vector<std::string> missing{"P1", "", "P2"};
    CHECK_THROWS_AS((void)dissolve(cells, missing), Error);

    // Checkerboard parents over a 3x3 voronoi grid conserve total area.
    std::vector<Point> seeds;
    std::vector<std::string> parity;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            seeds.push_back({i + 0.5, j + 0.5});
            parity.push_back((i + j) % 2 == 0 ? "even" : "odd");
        }
    const auto clip = make_box_shape(0, 0, 3, 3);
    const auto vcells = voronoi_cells(seeds, clip);
    auto grouped = dissolve(vcells, parity);
    const double total = area_m2(grouped["even"]) + area_m2(grouped["odd"]);
    CHECK(total == doctest::Approx(area_m2(clip)).epsilon(1e-9));
    CHECK(area_m2(grouped["even"]) == doctest::Approx(5.0).epsilon(1e-9));
    CHECK(validate(grouped["even"]).empty());
    CHECK(validate(grouped["odd"]).empty());
}

TEST_CASE("spatial index: query equals linear scan") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> c(0.0, 30.0);
    std::vector<std::pair<std::string, MultiPolygon>> entries;
    for (int i = 0; i < 25; ++i) {
        const double x = c(rng), y = c(rng);
        entries.push_back({"K" + std::to_string(i),
                           make_box_shape(x, y, x + 1 + (i % 3), y + 1 + (i % 2))});
    }
    const SpatialIndex index(entries);

    std::uniform_real_distribution<double> q(-2.0, 34.0);
    for (int t = 0; t < 10000; ++t) {
        const Point p{q(rng), q(rng)};
        std::vector<std::string> scan;
        for (const auto& [key, shape] : entries)
            if (oracle::shape_contains(shape, p)) scan.push_back(key);
        std::sort(scan.begin(), scan.end());
        const auto got = index.query(p);
        CHECK(got == scan);

        // Candidates are a superset of the exact result.
        const auto cand = index.candidates(p);
        CHECK(std::includes(cand.begin(), cand.end(), got.begin(), got.end()));
    }
}

TEST_CASE("spatial index: point in overlap returns both keys") {
    std::vector<std::pair<std::string, MultiPolygon>> entries{
        {"A", make_box_shape(0, 0, 2, 2)},
        {"B", make_box_shape(1, 1, 3, 3)},
        {"C", make_box_shape(10, 10, 11, 11)}};
    const SpatialIndex index(entries);
    CHECK(index.query({1.5, 1.5}) == std::vector<std::string>{"A", "B"});
    CHECK(index.query({10.5, 10.5}) == std::vector<std::string>{"C"});
    CHECK(index.query({-5, -5}).empty());
}
