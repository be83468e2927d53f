#include "gridshed/geom/exact.hpp"

#include <algorithm>

namespace gridshed::geom::exact {

namespace {

// Intersection point of the supporting lines of properly crossing
// segments, rounded to the grid.  Grid coordinates convert to long double
// exactly (64-bit mantissa), so the only rounding is in the division.
IPt cross_point(const IPt& a, const IPt& b, const IPt& c, const IPt& d) {
    const long double denom =
        static_cast<long double>(static_cast<I128>(b.x - a.x) * (d.y - c.y) -
                                 static_cast<I128>(b.y - a.y) * (d.x - c.x));
    const long double t =
        static_cast<long double>(static_cast<I128>(c.x - a.x) * (d.y - c.y) -
                                 static_cast<I128>(c.y - a.y) * (d.x - c.x)) /
        denom;
    const long double x = static_cast<long double>(a.x) + t * (b.x - a.x);
    const long double y = static_cast<long double>(a.y) + t * (b.y - a.y);
    return {static_cast<I64>(llroundl(x)), static_cast<I64>(llroundl(y))};
}

}  // namespace

SegHit segment_relation(const IPt& a, const IPt& b, const IPt& c, const IPt& d) {
    const int d1 = orient(c, d, a);
    const int d2 = orient(c, d, b);
    const int d3 = orient(a, b, c);
    const int d4 = orient(a, b, d);

    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return {SegRel::point, cross_point(a, b, c, d)};
    }

    if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
        // Collinear: order along the dominant axis.
        const bool use_x = std::max(std::abs(b.x - a.x), std::abs(d.x - c.x)) >=
                           std::max(std::abs(b.y - a.y), std::abs(d.y - c.y));
        auto key = [use_x](const IPt& p) { return use_x ? p.x : p.y; };
        IPt lo1 = a, hi1 = b, lo2 = c, hi2 = d;
        if (key(lo1) > key(hi1)) std::swap(lo1, hi1);
        if (key(lo2) > key(hi2)) std::swap(lo2, hi2);
        const IPt lo = key(lo1) >= key(lo2) ? lo1 : lo2;
        const IPt hi = key(hi1) <= key(hi2) ? hi1 : hi2;
        if (key(lo) > key(hi)) return {SegRel::none, {}};
        if (lo == hi) {
            const bool shared_end = (lo == a || lo == b) && (lo == c || lo == d);
            return {shared_end ? SegRel::touch : SegRel::point, lo};
        }
        return {SegRel::overlap, lo};
    }

    // Non-proper contact: some endpoint on the other segment.
    for (const IPt& p : {a, b}) {
        if (on_segment(p, c, d)) {
            const bool shared_end = (p == c || p == d);
            return {shared_end ? SegRel::touch : SegRel::point, p};
        }
    }
    for (const IPt& p : {c, d}) {
        if (on_segment(p, a, b)) return {SegRel::point, p};
    }
    return {SegRel::none, {}};
}

int point_in_walk(const IPt& p, std::span<const IPt> closed_walk) {
    bool inside = false;
    for (std::size_t i = 0; i + 1 < closed_walk.size(); ++i) {
        const IPt& a = closed_walk[i];
        const IPt& b = closed_walk[i + 1];
        if (on_segment(p, a, b)) return 1;
        if ((a.y > p.y) != (b.y > p.y)) {
            const I128 cr = cross(a, b, p);
            if (b.y > a.y ? cr > 0 : cr < 0) inside = !inside;
        }
    }
    return inside ? 2 : 0;
}

}  // namespace gridshed::geom::exact
