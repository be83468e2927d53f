#pragma once

// Exact predicates over grid-snapped coordinates.  Doubles are snapped to
// a 1e-9 m lattice (kEpsilon); on that lattice orientation and incidence
// tests are computed in 128-bit integers, so they are never wrong.
// British-grid-scale inputs (|coord| < ~1e7 m) stay well inside the safe
// range of ~9e15 grid units.

#include <cmath>
#include <cstdint>
#include <span>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom::exact {

using I64 = std::int64_t;
using I128 = __int128;

struct IPt {
    I64 x = 0;
    I64 y = 0;
    friend bool operator==(const IPt&, const IPt&) = default;
    friend auto operator<=>(const IPt&, const IPt&) = default;
};

inline constexpr double kGridScale = 1.0 / geom::kEpsilon;  // 1e9 per metre

inline IPt snap(const Point& p) {
    return {static_cast<I64>(std::llround(p.x * kGridScale)),
            static_cast<I64>(std::llround(p.y * kGridScale))};
}

inline Point unsnap(const IPt& q) {
    return {static_cast<double>(q.x) * geom::kEpsilon,
            static_cast<double>(q.y) * geom::kEpsilon};
}

inline int sign(I128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// (a - o) x (b - o)
inline I128 cross(const IPt& o, const IPt& a, const IPt& b) {
    return static_cast<I128>(a.x - o.x) * (b.y - o.y) -
           static_cast<I128>(a.y - o.y) * (b.x - o.x);
}

inline int orient(const IPt& o, const IPt& a, const IPt& b) {
    return sign(cross(o, a, b));
}

// p lies on the closed segment [a, b].
inline bool on_segment(const IPt& p, const IPt& a, const IPt& b) {
    if (orient(a, b, p) != 0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

enum class SegRel {
    none,      // disjoint
    touch,     // intersection is a single shared endpoint
    point,     // single interior-involving point (proper cross or T-joint)
    overlap,   // collinear segments sharing more than a point
};

struct SegHit {
    SegRel rel = SegRel::none;
    IPt at{};  // for touch / point: the intersection, snapped to grid
};

SegHit segment_relation(const IPt& a, const IPt& b, const IPt& c, const IPt& d);

// Even-odd containment against a closed ring walk (the walk need not be
// simple).  Returns 0 outside, 1 on the walk, 2 inside.
int point_in_walk(const IPt& p, std::span<const IPt> closed_walk);

}  // namespace gridshed::geom::exact
