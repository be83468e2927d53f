#include "gridshed/geom/validate.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "gridshed/geom/exact.hpp"

namespace gridshed::geom {

namespace {

using exact::I64;
using exact::IPt;
using exact::SegRel;

struct SnappedRing {
    int part = 0;
    int ring = 0;            // 0 = exterior, 1.. = holes
    std::vector<IPt> pts;    // closed, consecutive duplicates removed
    bool usable = false;     // structurally sound enough for pair checks
};

struct SweepEdge {
    int ring_idx = 0;
    int edge_idx = 0;
    I64 min_x = 0, max_x = 0, min_y = 0, max_y = 0;
};

class Reporter {
public:
    explicit Reporter(std::vector<GeometryError>& out) : out_(out) {}

    void add(GeometryErrorKind kind, int part, int ring, Point loc, bool has_loc) {
        if (!seen_.insert({static_cast<int>(kind), part, ring}).second) return;
        GeometryError e;
        e.kind = kind;
        e.part = part;
        e.ring = ring;
        e.location = loc;
        e.has_location = has_loc;
        out_.push_back(e);
    }

private:
    std::vector<GeometryError>& out_;
    std::set<std::tuple<int, int, int>> seen_;
};

// True when the two edges are consecutive in the same (closed) ring.
bool adjacent_in_ring(const SnappedRing& r, int e1, int e2) {
    const int n = static_cast<int>(r.pts.size()) - 1;  // edge count
    const int d = std::abs(e1 - e2);
    return d == 1 || d == n - 1;
}

// Even-odd state of a point against the part's full ring set:
// 2 = strictly inside, 1 = on boundary, 0 = outside.
int point_vs_part(const IPt& p, const std::vector<const SnappedRing*>& rings) {
    bool inside = false;
    for (const auto* r : rings) {
        const int c = exact::point_in_walk(p, r->pts);
        if (c == 1) return 1;
        if (c == 2) inside = !inside;
    }
    return inside ? 2 : 0;
}

}  // namespace

std::vector<GeometryError> validate(const MultiPolygon& shape) {
    std::vector<GeometryError> errors;
    Reporter report(errors);

    std::vector<SnappedRing> rings;
    for (int pi = 0; pi < static_cast<int>(shape.parts.size()); ++pi) {
        const Polygon& part = shape.parts[pi];
        const int ring_count = 1 + static_cast<int>(part.holes.size());
        for (int ri = 0; ri < ring_count; ++ri) {
            const Ring& src = ri == 0 ? part.exterior : part.holes[ri - 1];
            SnappedRing sr;
            sr.part = pi;
            sr.ring = ri;

            bool finite = true;
            for (const Point& p : src) {
                if (!point_finite(p)) {
                    report.add(GeometryErrorKind::non_finite_coordinate, pi, ri, p, false);
                    finite = false;
                    break;
                }
            }
            if (!finite) {
                rings.push_back(std::move(sr));
                continue;
            }
            if (src.size() < 4) {
                report.add(GeometryErrorKind::too_few_points, pi, ri,
                           src.empty() ? Point{} : src.front(), !src.empty());
                rings.push_back(std::move(sr));
                continue;
            }
            if (!(src.front() == src.back())) {
                report.add(GeometryErrorKind::unclosed_ring, pi, ri, src.back(), true);
                rings.push_back(std::move(sr));
                continue;
            }

            sr.pts.reserve(src.size());
            bool dup = false;
            Point dup_at{};
            for (const Point& p : src) {
                const IPt q = exact::snap(p);
                if (!sr.pts.empty() && sr.pts.back() == q) {
                    dup = true;
                    dup_at = p;
                    continue;
                }
                sr.pts.push_back(q);
            }
            // The closing repeat falls to deduplication; restore it.
            if (!sr.pts.empty() && !(sr.pts.front() == sr.pts.back()))
                sr.pts.push_back(sr.pts.front());
            if (dup)
                report.add(GeometryErrorKind::ring_self_intersection, pi, ri, dup_at, true);
            if (sr.pts.size() < 4) {
                report.add(GeometryErrorKind::too_few_points, pi, ri, src.front(), true);
                rings.push_back(std::move(sr));
                continue;
            }
            sr.usable = true;
            rings.push_back(std::move(sr));
        }
    }

    // Pairwise edge scan over all usable rings, lazily swept on min-x.
    std::vector<SweepEdge> edges;
    for (int ri = 0; ri < static_cast<int>(rings.size()); ++ri) {
        const auto& r = rings[ri];
        if (!r.usable) continue;
        for (int ei = 0; ei + 1 < static_cast<int>(r.pts.size()); ++ei) {
            const IPt& a = r.pts[ei];
            const IPt& b = r.pts[ei + 1];
            edges.push_back({ri, ei, std::min(a.x, b.x), std::max(a.x, b.x),
                             std::min(a.y, b.y), std::max(a.y, b.y)});
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const SweepEdge& l, const SweepEdge& r) { return l.min_x < r.min_x; });

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e1 = edges[i];
        const auto& r1 = rings[e1.ring_idx];
        const IPt a = r1.pts[e1.edge_idx];
        const IPt b = r1.pts[e1.edge_idx + 1];
        for (std::size_t j = i + 1; j < edges.size() && edges[j].min_x <= e1.max_x; ++j) {
            const auto& e2 = edges[j];
            if (e2.min_y > e1.max_y || e1.min_y > e2.max_y) continue;
            const auto& r2 = rings[e2.ring_idx];
            const IPt c = r2.pts[e2.edge_idx];
            const IPt d = r2.pts[e2.edge_idx + 1];
            const auto hit = exact::segment_relation(a, b, c, d);
            if (hit.rel == SegRel::none) continue;

            if (e1.ring_idx == e2.ring_idx) {
                if (hit.rel == SegRel::touch && adjacent_in_ring(r1, e1.edge_idx, e2.edge_idx))
                    continue;  // consecutive edges legitimately share a vertex
                report.add(GeometryErrorKind::ring_self_intersection, r1.part, r1.ring,
                           exact::unsnap(hit.at), true);
            } else {
                // Rings of one part may meet at isolated vertex touches but
                // not cross or share a stretch of edge.  Rings of distinct
                // parts may also share boundary stretches: only interior
                // disjointness is required across parts.
                if (hit.rel == SegRel::overlap) {
                    if (r1.part != r2.part) continue;
                    report.add(GeometryErrorKind::self_intersection,
                               std::min(r1.part, r2.part),
                               r1.part <= r2.part ? r1.ring : r2.ring,
                               exact::unsnap(hit.at), true);
                } else if (hit.rel == SegRel::point) {
                    const bool end1 = hit.at == a || hit.at == b;
                    const bool end2 = hit.at == c || hit.at == d;
                    if (!end1 && !end2)
                        report.add(GeometryErrorKind::self_intersection,
                                   std::min(r1.part, r2.part),
                                   r1.part <= r2.part ? r1.ring : r2.ring,
                                   exact::unsnap(hit.at), true);
                }
            }
        }
    }

    // Containment checks: holes inside the exterior, holes pairwise
    // disjoint, part interiors pairwise disjoint.  Crossings were caught
    // above, so vertex sampling is decisive here.
    std::vector<std::vector<const SnappedRing*>> parts(shape.parts.size());
    for (const auto& r : rings)
        if (r.usable) parts[r.part].push_back(&r);

    for (const auto& r : rings) {
        if (!r.usable || r.ring == 0) continue;
        const SnappedRing* ext = nullptr;
        for (const auto* q : parts[r.part])
            if (q->ring == 0) ext = q;
        if (ext) {
            for (std::size_t k = 0; k + 1 < r.pts.size(); ++k) {
                if (exact::point_in_walk(r.pts[k], ext->pts) == 0) {
                    report.add(GeometryErrorKind::self_intersection, r.part, r.ring,
                               exact::unsnap(r.pts[k]), true);
                    break;
                }
            }
        }
        for (const auto* other : parts[r.part]) {
            if (other->ring == 0 || other->ring >= r.ring) continue;
            bool strictly_inside = false;
            bool outside = false;
            for (std::size_t k = 0; k + 1 < r.pts.size(); ++k) {
                const int cls = exact::point_in_walk(r.pts[k], other->pts);
                if (cls == 0) { outside = true; break; }
                if (cls == 2) strictly_inside = true;
            }
            if (strictly_inside && !outside)
                report.add(GeometryErrorKind::self_intersection, r.part, r.ring,
                           exact::unsnap(r.pts.front()), true);
        }
    }

    for (std::size_t pa = 0; pa < parts.size(); ++pa) {
        for (std::size_t pb = pa + 1; pb < parts.size(); ++pb) {
            if (parts[pa].empty() || parts[pb].empty()) continue;
            auto check = [&](const std::vector<const SnappedRing*>& outer,
                             const std::vector<const SnappedRing*>& probe) {
                for (const auto* r : probe) {
                    if (r->ring != 0) continue;
                    for (std::size_t k = 0; k + 1 < r->pts.size(); ++k) {
                        if (point_vs_part(r->pts[k], outer) == 2) {
                            report.add(GeometryErrorKind::self_intersection,
                                       static_cast<int>(pa), 0,
                                       exact::unsnap(r->pts[k]), true);
                            return;
                        }
                    }
                }
            };
            check(parts[pa], parts[pb]);
            check(parts[pb], parts[pa]);
        }
    }

    return errors;
}

}  // namespace gridshed::geom
