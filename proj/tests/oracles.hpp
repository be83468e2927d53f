#pragma once

// Independent reference implementations used only by tests.  These follow
// the most literal formulation available (naive loops, textbook formulas)
// and deliberately share no code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace oracle {

using gridshed::geom::MultiPolygon;
using gridshed::geom::Point;
using gridshed::geom::Ring;

// Textbook ray casting with explicit division; boundary treated as inside
// via a distance test.
inline bool point_on_segment(const Point& p, const Point& a, const Point& b,
                             double eps) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = 0;
    if (len2 > 0) t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double cx = a.x + t * dx - p.x;
    const double cy = a.y + t * dy - p.y;
    return cx * cx + cy * cy <= eps * eps;
}

inline bool ring_contains(const Ring& r, const Point& p, double eps, bool* on_edge) {
    bool inside = false;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const Point& a = r[i];
        const Point& b = r[i + 1];
        if (point_on_segment(p, a, b, eps)) {
            if (on_edge) *on_edge = true;
            return false;
        }
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x_int) inside = !inside;
        }
    }
    return inside;
}

// Boundary-inclusive containment in a multipolygon.
inline bool shape_contains(const MultiPolygon& m, const Point& p,
                           double eps = 1e-9) {
    for (const auto& part : m.parts) {
        bool on_edge = false;
        const bool in_ext = ring_contains(part.exterior, p, eps, &on_edge);
        if (on_edge) return true;
        if (!in_ext) continue;
        bool in_hole = false;
        for (const auto& h : part.holes) {
            bool on_hole = false;
            if (ring_contains(h, p, eps, &on_hole)) {
                in_hole = true;
                break;
            }
            if (on_hole) return true;
        }
        if (!in_hole) return true;
    }
    return false;
}

// Even-odd parity of a point against a soup of rings (no boundary logic;
// callers avoid sampling near edges).
inline bool even_odd_parity(const std::vector<Ring>& rings, const Point& p) {
    bool inside = false;
    for (const Ring& r : rings) {
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            const Point& a = r[i];
            const Point& b = r[i + 1];
            if ((a.y > p.y) != (b.y > p.y)) {
                const double x_int = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
                if (p.x < x_int) inside = !inside;
            }
        }
    }
    return inside;
}

inline std::vector<Ring> all_rings(const MultiPolygon& m) {
    std::vector<Ring> rings;
    for (const auto& part : m.parts) {
        rings.push_back(part.exterior);
        for (const auto& h : part.holes) rings.push_back(h);
    }
    return rings;
}

inline std::size_t nearest_seed(const std::vector<Point>& seeds, const Point& p) {
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        const double dx = seeds[i].x - p.x, dy = seeds[i].y - p.y;
        const double d = dx * dx + dy * dy;
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

// Distances of the nearest and second-nearest seeds.
inline std::pair<double, double> nearest_two_dist(const std::vector<Point>& seeds,
                                                  const Point& p) {
    double d1 = std::numeric_limits<double>::infinity();
    double d2 = d1;
    for (const Point& s : seeds) {
        const double dx = s.x - p.x, dy = s.y - p.y;
        const double d = std::sqrt(dx * dx + dy * dy);
        if (d < d1) {
            d2 = d1;
            d1 = d;
        } else if (d < d2) {
            d2 = d;
        }
    }
    return {d1, d2};
}

// Brute segment-pair scan for ring self-intersection (non-adjacent edges).
inline bool ring_self_intersects(const Ring& r) {
    auto seg_int = [](Point p1, Point p2, Point p3, Point p4) {
        auto d = [](Point a, Point b, Point c) {
            return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
        };
        const double d1 = d(p3, p4, p1), d2 = d(p3, p4, p2);
        const double d3 = d(p1, p2, p3), d4 = d(p1, p2, p4);
        return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
    };
    const std::size_t n = r.size() - 1;  // edges
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;  // wrap-adjacent
            if (seg_int(r[i], r[i + 1], r[j], r[j + 1])) return true;
        }
    }
    return false;
}

// Rejection-sampled centroid of a shape.
inline Point monte_carlo_centroid(const MultiPolygon& m, std::size_t samples,
                                  std::uint64_t rng_seed) {
    const auto box = gridshed::geom::shape_box(m);
    std::mt19937_64 rng(rng_seed);
    std::uniform_real_distribution<double> ux(box.min_x, box.max_x);
    std::uniform_real_distribution<double> uy(box.min_y, box.max_y);
    double sx = 0, sy = 0;
    std::size_t hits = 0;
    while (hits < samples) {
        const Point p{ux(rng), uy(rng)};
        if (shape_contains(m, p, 0.0)) {
            sx += p.x;
            sy += p.y;
            ++hits;
        }
    }
    return {sx / static_cast<double>(hits), sy / static_cast<double>(hits)};
}

// Linear-interpolation quantile between closest ranks on sorted data.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
    if (sorted.empty()) return 0;
    if (sorted.size() == 1) return sorted[0];
    const double h = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace oracle
