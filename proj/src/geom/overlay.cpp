#include "gridshed/geom/overlay.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <unordered_map>
#include <vector>

#include "gridshed/errors.hpp"
#include "gridshed/geom/exact.hpp"

namespace gridshed::geom {

namespace {

using exact::I128;
using exact::I64;
using exact::IPt;

using SmallSet = std::vector<int>;  // sorted, unique operand ids

SmallSet set_xor(const SmallSet& a, const SmallSet& b) {
    SmallSet out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

struct RawEdge {
    IPt a, b;
    int op = 0;
};

struct IBox {
    I64 min_x, min_y, max_x, max_y;
};

IBox edge_box(const RawEdge& e) {
    return {std::min(e.a.x, e.b.x), std::min(e.a.y, e.b.y),
            std::max(e.a.x, e.b.x), std::max(e.a.y, e.b.y)};
}

// Position of p along segment a->b, monotone in walk order.
I128 along(const IPt& a, const IPt& b, const IPt& p) {
    return static_cast<I128>(p.x - a.x) * (b.x - a.x) +
           static_cast<I128>(p.y - a.y) * (b.y - a.y);
}

// Pseudo-angle comparator for direction vectors, counter-clockwise from
// the positive x axis.  Exact: half-plane split plus a cross product.
struct AngleLess {
    static int half(I64 dx, I64 dy) {
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    }
    bool operator()(std::pair<I64, I64> u, std::pair<I64, I64> v) const {
        const int hu = half(u.first, u.second), hv = half(v.first, v.second);
        if (hu != hv) return hu < hv;
        const I128 cr = static_cast<I128>(u.first) * v.second -
                        static_cast<I128>(u.second) * v.first;
        return cr > 0;
    }
};

}  // namespace

struct OverlaySet::Impl {
    int operand_count = 0;
    std::vector<RawEdge> edges;  // input; replaced by noded edges in build()
    bool built = false;

    // Built state -------------------------------------------------------
    std::vector<IPt> verts;                      // id -> point
    std::vector<std::pair<int, int>> uedges;     // undirected: (u, v) vertex ids
    std::vector<SmallSet> uedge_ops;             // operands with odd multiplicity
    std::vector<std::vector<int>> out;           // per vertex: CCW-sorted half-edges
    std::vector<int> pos_in_out;                 // half-edge -> index in out[from]

    struct Cycle {
        std::vector<int> halfedges;
        I128 area2 = 0;
        int comp = 0;
        IBox box{0, 0, 0, 0};
        SmallSet label;
    };
    std::vector<Cycle> cycles;
    std::vector<int> cycle_of;  // half-edge -> cycle index

    int he_from(int h) const {
        const auto& ue = uedges[h >> 1];
        return (h & 1) ? ue.second : ue.first;
    }
    int he_to(int h) const {
        const auto& ue = uedges[h >> 1];
        return (h & 1) ? ue.first : ue.second;
    }

    void node_edges();
    void build_graph();
    void trace_cycles();
    void label_faces();
};

OverlaySet::OverlaySet() : impl_(std::make_unique<Impl>()) {}
OverlaySet::~OverlaySet() = default;
OverlaySet::OverlaySet(OverlaySet&&) noexcept = default;
OverlaySet& OverlaySet::operator=(OverlaySet&&) noexcept = default;

int OverlaySet::add(const MultiPolygon& shape) {
    const int id = impl_->operand_count++;
    auto add_ring = [this, id](const Ring& r) {
        if (r.size() < 3) return;
        std::vector<IPt> pts;
        pts.reserve(r.size());
        for (const Point& p : r) {
            const IPt q = exact::snap(p);
            if (pts.empty() || !(pts.back() == q)) pts.push_back(q);
        }
        if (pts.size() >= 2 && pts.front() == pts.back()) pts.pop_back();
        if (pts.size() < 3) return;  // collapsed to nothing under snapping
        pts.push_back(pts.front());
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            impl_->edges.push_back({pts[i], pts[i + 1], id});
    };
    for (const Polygon& part : shape.parts) {
        add_ring(part.exterior);
        for (const Ring& h : part.holes) add_ring(h);
    }
    return id;
}

// --- Noding -----------------------------------------------------------

void OverlaySet::Impl::node_edges() {
    for (int pass = 0; pass < 8; ++pass) {
        const std::size_t n = edges.size();
        if (n == 0) return;

        // Uniform grid over edge bounding boxes.
        IBox world = edge_box(edges[0]);
        long double avg_extent = 0;
        std::vector<IBox> boxes(n);
        for (std::size_t i = 0; i < n; ++i) {
            boxes[i] = edge_box(edges[i]);
            world.min_x = std::min(world.min_x, boxes[i].min_x);
            world.min_y = std::min(world.min_y, boxes[i].min_y);
            world.max_x = std::max(world.max_x, boxes[i].max_x);
            world.max_y = std::max(world.max_y, boxes[i].max_y);
            avg_extent += static_cast<long double>(boxes[i].max_x - boxes[i].min_x) +
                          static_cast<long double>(boxes[i].max_y - boxes[i].min_y);
        }
        avg_extent /= static_cast<long double>(2 * n);
        I64 cell = static_cast<I64>(avg_extent) + 1;
        const I64 span = std::max(world.max_x - world.min_x, world.max_y - world.min_y);
        cell = std::max<I64>(cell, span / 2048 + 1);

        auto cell_of = [&](I64 x, I64 y) {
            return std::pair<I64, I64>{(x - world.min_x) / cell, (y - world.min_y) / cell};
        };

        std::unordered_map<std::uint64_t, std::vector<int>> buckets;
        auto bucket_key = [](I64 cx, I64 cy) {
            return (static_cast<std::uint64_t>(cx) << 32) ^
                   static_cast<std::uint64_t>(static_cast<std::uint32_t>(cy));
        };
        for (std::size_t i = 0; i < n; ++i) {
            const auto [cx0, cy0] = cell_of(boxes[i].min_x, boxes[i].min_y);
            const auto [cx1, cy1] = cell_of(boxes[i].max_x, boxes[i].max_y);
            for (I64 cx = cx0; cx <= cx1; ++cx)
                for (I64 cy = cy0; cy <= cy1; ++cy)
                    buckets[bucket_key(cx, cy)].push_back(static_cast<int>(i));
        }

        std::vector<std::vector<IPt>> cuts(n);
        auto add_cut = [&](int i, const IPt& p) {
            if (p == edges[i].a || p == edges[i].b) return;
            cuts[i].push_back(p);
        };

        bool any_cut = false;
        for (auto& [key, list] : buckets) {
            (void)key;
            for (std::size_t ii = 0; ii < list.size(); ++ii) {
                const int i = list[ii];
                for (std::size_t jj = ii + 1; jj < list.size(); ++jj) {
                    const int j = list[jj];
                    const IBox& bi = boxes[i];
                    const IBox& bj = boxes[j];
                    if (bi.min_x > bj.max_x || bj.min_x > bi.max_x ||
                        bi.min_y > bj.max_y || bj.min_y > bi.max_y)
                        continue;
                    // Process each pair in one canonical cell only.
                    const auto [mcx, mcy] = cell_of(std::max(bi.min_x, bj.min_x),
                                                    std::max(bi.min_y, bj.min_y));
                    const I64 cur_cx = static_cast<I64>(key >> 32);
                    const I64 cur_cy = static_cast<I64>(key & 0xffffffffULL);
                    if (cur_cx != mcx || cur_cy != mcy) continue;

                    const RawEdge& e1 = edges[i];
                    const RawEdge& e2 = edges[j];
                    const auto hit = exact::segment_relation(e1.a, e1.b, e2.a, e2.b);
                    switch (hit.rel) {
                        case exact::SegRel::none:
                        case exact::SegRel::touch:
                            break;
                        case exact::SegRel::point:
                            add_cut(i, hit.at);
                            add_cut(j, hit.at);
                            if (!cuts[i].empty() || !cuts[j].empty()) any_cut = true;
                            break;
                        case exact::SegRel::overlap:
                            for (const IPt& p : {e2.a, e2.b})
                                if (exact::on_segment(p, e1.a, e1.b)) add_cut(i, p);
                            for (const IPt& p : {e1.a, e1.b})
                                if (exact::on_segment(p, e2.a, e2.b)) add_cut(j, p);
                            any_cut = true;
                            break;
                    }
                }
            }
        }

        bool split_any = false;
        if (any_cut) {
            std::vector<RawEdge> next;
            next.reserve(n + 16);
            for (std::size_t i = 0; i < n; ++i) {
                if (cuts[i].empty()) {
                    next.push_back(edges[i]);
                    continue;
                }
                auto& cs = cuts[i];
                cs.push_back(edges[i].a);
                cs.push_back(edges[i].b);
                const IPt a = edges[i].a, b = edges[i].b;
                std::sort(cs.begin(), cs.end(), [&](const IPt& p, const IPt& q) {
                    return along(a, b, p) < along(a, b, q);
                });
                cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
                for (std::size_t k = 0; k + 1 < cs.size(); ++k) {
                    if (cs[k] == cs[k + 1]) continue;
                    next.push_back({cs[k], cs[k + 1], edges[i].op});
                    if (cs.size() > 2) split_any = true;
                }
            }
            edges.swap(next);
        }
        if (!split_any) return;
    }
}

// --- Graph construction ------------------------------------------------

void OverlaySet::Impl::build_graph() {
    // Undirected edges keyed by (min, max) endpoint with per-operand
    // multiplicity parity; even multiplicities cancel.
    struct Keyed {
        IPt lo, hi;
        int op;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(edges.size());
    for (const RawEdge& e : edges) {
        if (e.a == e.b) continue;
        Keyed k{e.a, e.b, e.op};
        if (k.hi < k.lo) std::swap(k.lo, k.hi);
        keyed.push_back(k);
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        if (!(x.lo == y.lo)) return x.lo < y.lo;
        if (!(x.hi == y.hi)) return x.hi < y.hi;
        return x.op < y.op;
    });

    verts.clear();
    uedges.clear();
    uedge_ops.clear();
    for (std::size_t i = 0; i < keyed.size();) {
        std::size_t j = i;
        SmallSet ops;
        while (j < keyed.size() && keyed[j].lo == keyed[i].lo && keyed[j].hi == keyed[i].hi) {
            int op = keyed[j].op;
            int count = 0;
            while (j < keyed.size() && keyed[j].lo == keyed[i].lo &&
                   keyed[j].hi == keyed[i].hi && keyed[j].op == op) {
                ++count;
                ++j;
            }
            if (count & 1) ops.push_back(op);
        }
        if (!ops.empty()) {
            verts.push_back(keyed[i].lo);
            verts.push_back(keyed[i].hi);
            uedges.emplace_back(0, 0);  // vertex ids resolved below
            uedge_ops.push_back(std::move(ops));
            // Stash endpoints alongside; resolved after vertex dedup.
        }
        i = j;
    }

    // Vertex ids: sort/unique all endpoints.
    std::vector<IPt> all = verts;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    auto vid = [&](const IPt& p) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), p) - all.begin());
    };
    for (std::size_t e = 0; e < uedges.size(); ++e) {
        uedges[e] = {vid(verts[2 * e]), vid(verts[2 * e + 1])};
    }
    verts = std::move(all);

    // Outgoing half-edge lists, CCW order.
    out.assign(verts.size(), {});
    for (std::size_t e = 0; e < uedges.size(); ++e) {
        out[uedges[e].first].push_back(static_cast<int>(2 * e));       // lo -> hi
        out[uedges[e].second].push_back(static_cast<int>(2 * e + 1));  // hi -> lo
    }
    AngleLess less;
    for (std::size_t v = 0; v < verts.size(); ++v) {
        std::sort(out[v].begin(), out[v].end(), [&](int h1, int h2) {
            const IPt d1 = verts[he_to(h1)];
            const IPt d2 = verts[he_to(h2)];
            const IPt o = verts[v];
            return less({d1.x - o.x, d1.y - o.y}, {d2.x - o.x, d2.y - o.y});
        });
    }
    pos_in_out.assign(2 * uedges.size(), 0);
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (std::size_t k = 0; k < out[v].size(); ++k) pos_in_out[out[v][k]] = static_cast<int>(k);
}

// --- Face tracing -------------------------------------------------------

void OverlaySet::Impl::trace_cycles() {
    const int nh = static_cast<int>(2 * uedges.size());
    cycle_of.assign(nh, -1);
    cycles.clear();

    for (int h0 = 0; h0 < nh; ++h0) {
        if (cycle_of[h0] != -1) continue;
        Cycle cyc;
        int h = h0;
        const int id = static_cast<int>(cycles.size());
        do {
            cycle_of[h] = id;
            cyc.halfedges.push_back(h);
            const int v = he_to(h);
            const auto& lst = out[v];
            const int k = pos_in_out[h ^ 1];
            h = lst[(k - 1 + static_cast<int>(lst.size())) % lst.size()];
        } while (h != h0);

        // Exact shifted shoelace over the walk.
        const IPt o = verts[he_from(cyc.halfedges.front())];
        I128 area2 = 0;
        IBox box{o.x, o.y, o.x, o.y};
        for (int he : cyc.halfedges) {
            const IPt p = verts[he_from(he)];
            const IPt q = verts[he_to(he)];
            area2 += static_cast<I128>(p.x - o.x) * (q.y - o.y) -
                     static_cast<I128>(q.x - o.x) * (p.y - o.y);
            box.min_x = std::min(box.min_x, p.x);
            box.min_y = std::min(box.min_y, p.y);
            box.max_x = std::max(box.max_x, p.x);
            box.max_y = std::max(box.max_y, p.y);
        }
        cyc.area2 = area2;
        cyc.box = box;
        cycles.push_back(std::move(cyc));
    }
}

// --- Face labelling ------------------------------------------------------

void OverlaySet::Impl::label_faces() {
    // Connected components via union-find on vertices.
    std::vector<int> parent(verts.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [u, v] : uedges) parent[find(u)] = find(v);

    for (auto& c : cycles) c.comp = find(he_from(c.halfedges.front()));

    // Per component: the most negative cycle is the outer walk.
    std::map<int, std::vector<int>> comp_cycles;
    for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci)
        comp_cycles[cycles[ci].comp].push_back(ci);
    std::map<int, int> comp_outer;
    for (auto& [comp, list] : comp_cycles) {
        int best = list.front();
        for (int ci : list)
            if (cycles[ci].area2 < cycles[best].area2) best = ci;
        comp_outer[comp] = best;
    }

    // Positive cycles sorted by area, for innermost-container queries.
    std::vector<int> positive;
    for (int ci = 0; ci < static_cast<int>(cycles.size()); ++ci)
        if (cycles[ci].area2 > 0) positive.push_back(ci);
    std::sort(positive.begin(), positive.end(),
              [&](int a, int b) { return cycles[a].area2 < cycles[b].area2; });

    auto walk_points = [&](int ci) {
        std::vector<IPt> pts;
        pts.reserve(cycles[ci].halfedges.size() + 1);
        for (int he : cycles[ci].halfedges) pts.push_back(verts[he_from(he)]);
        pts.push_back(pts.front());
        return pts;
    };
    std::vector<std::vector<IPt>> pos_walks(positive.size());
    for (std::size_t k = 0; k < positive.size(); ++k) pos_walks[k] = walk_points(positive[k]);

    // Innermost positive cycle of another component containing each
    // component; -1 means the global outside.
    std::map<int, int> comp_parent_cycle;
    for (const auto& [comp, list] : comp_cycles) {
        (void)list;
        const IPt sample = verts[comp];  // root vertex belongs to the component
        int found = -1;
        for (std::size_t k = 0; k < positive.size(); ++k) {
            const int ci = positive[k];
            if (cycles[ci].comp == comp) continue;
            const IBox& b = cycles[ci].box;
            if (sample.x < b.min_x || sample.x > b.max_x || sample.y < b.min_y ||
                sample.y > b.max_y)
                continue;
            if (exact::point_in_walk(sample, pos_walks[k]) == 2) {
                found = ci;
                break;
            }
        }
        comp_parent_cycle[comp] = found;
    }

    // Process components outside-in so parent labels exist when needed.
    std::map<int, int> depth;
    std::function<int(int)> comp_depth = [&](int comp) -> int {
        auto it = depth.find(comp);
        if (it != depth.end()) return it->second;
        const int pc = comp_parent_cycle[comp];
        const int d = pc < 0 ? 0 : 1 + comp_depth(cycles[pc].comp);
        depth[comp] = d;
        return d;
    };
    std::vector<int> comp_order;
    for (const auto& [comp, list] : comp_cycles) {
        (void)list;
        comp_depth(comp);
        comp_order.push_back(comp);
    }
    std::sort(comp_order.begin(), comp_order.end(),
              [&](int a, int b) { return depth[a] < depth[b]; });

    std::vector<char> labelled(cycles.size(), 0);
    for (int comp : comp_order) {
        const int outer = comp_outer[comp];
        const int pc = comp_parent_cycle[comp];
        cycles[outer].label = pc < 0 ? SmallSet{} : cycles[pc].label;
        labelled[outer] = 1;
        std::deque<int> queue{outer};
        while (!queue.empty()) {
            const int ci = queue.front();
            queue.pop_front();
            for (int he : cycles[ci].halfedges) {
                const int cj = cycle_of[he ^ 1];
                if (labelled[cj]) continue;
                cycles[cj].label = set_xor(cycles[ci].label, uedge_ops[he >> 1]);
                labelled[cj] = 1;
                queue.push_back(cj);
            }
        }
    }
}

void OverlaySet::build() {
    if (impl_->built) throw Error(ErrorCode::bad_input, "OverlaySet already built");
    impl_->built = true;
    impl_->node_edges();
    impl_->build_graph();
    impl_->trace_cycles();
    impl_->label_faces();
}

// --- Extraction ----------------------------------------------------------

MultiPolygon OverlaySet::extract(
    const std::function<bool(std::span<const int>)>& keep) const {
    const Impl& im = *impl_;
    if (!im.built) throw Error(ErrorCode::bad_input, "OverlaySet not built");
    MultiPolygon result;
    if (im.uedges.empty()) return result;

    std::vector<char> kept(im.cycles.size(), 0);
    for (std::size_t ci = 0; ci < im.cycles.size(); ++ci)
        kept[ci] = keep(std::span<const int>(im.cycles[ci].label)) ? 1 : 0;

    const int nh = static_cast<int>(2 * im.uedges.size());
    auto boundary = [&](int h) {
        return kept[im.cycle_of[h]] && !kept[im.cycle_of[h ^ 1]];
    };

    struct OutRing {
        std::vector<IPt> pts;  // closed
        I128 area2 = 0;
        IBox box{0, 0, 0, 0};
        IPt sample2{0, 0};  // doubled coordinates of first edge midpoint
    };
    std::vector<OutRing> rings;

    std::vector<char> visited(nh, 0);
    for (int h0 = 0; h0 < nh; ++h0) {
        if (visited[h0] || !boundary(h0)) continue;
        OutRing ring;
        int h = h0;
        do {
            visited[h] = 1;
            ring.pts.push_back(im.verts[im.he_from(h)]);
            const int v = im.he_to(h);
            const auto& lst = im.out[v];
            const int deg = static_cast<int>(lst.size());
            const int k = im.pos_in_out[h ^ 1];
            int nxt = -1;
            for (int m = 1; m <= deg; ++m) {
                const int cand = lst[((k - m) % deg + deg) % deg];
                if (boundary(cand)) {
                    nxt = cand;
                    break;
                }
            }
            if (nxt < 0) throw Error(ErrorCode::bad_input, "overlay boundary walk broke");
            h = nxt;
        } while (h != h0);
        ring.pts.push_back(ring.pts.front());

        const IPt o = ring.pts.front();
        IBox box{o.x, o.y, o.x, o.y};
        I128 area2 = 0;
        for (std::size_t i = 0; i + 1 < ring.pts.size(); ++i) {
            const IPt p = ring.pts[i];
            const IPt q = ring.pts[i + 1];
            area2 += static_cast<I128>(p.x - o.x) * (q.y - o.y) -
                     static_cast<I128>(q.x - o.x) * (p.y - o.y);
            box.min_x = std::min(box.min_x, p.x);
            box.min_y = std::min(box.min_y, p.y);
            box.max_x = std::max(box.max_x, p.x);
            box.max_y = std::max(box.max_y, p.y);
        }
        if (area2 == 0) continue;  // degenerate sliver
        ring.area2 = area2;
        ring.box = box;
        ring.sample2 = {ring.pts[0].x + ring.pts[1].x, ring.pts[0].y + ring.pts[1].y};
        rings.push_back(std::move(ring));
    }

    // Exteriors are CCW (positive), holes CW.  Attach each hole to the
    // innermost kept exterior containing it, testing the doubled-midpoint
    // sample against doubled exterior walks for an exact strict result.
    std::vector<int> ext_idx, hole_idx;
    for (int i = 0; i < static_cast<int>(rings.size()); ++i)
        (rings[i].area2 > 0 ? ext_idx : hole_idx).push_back(i);
    std::sort(ext_idx.begin(), ext_idx.end(),
              [&](int a, int b) { return rings[a].area2 < rings[b].area2; });

    std::vector<std::vector<IPt>> ext2(ext_idx.size());
    for (std::size_t k = 0; k < ext_idx.size(); ++k) {
        const auto& pts = rings[ext_idx[k]].pts;
        ext2[k].reserve(pts.size());
        for (const IPt& p : pts) ext2[k].push_back({2 * p.x, 2 * p.y});
    }

    auto to_ring = [](const std::vector<IPt>& pts) {
        Ring r;
        r.reserve(pts.size());
        for (const IPt& p : pts) r.push_back(exact::unsnap(p));
        return r;
    };

    std::vector<Polygon> parts(ext_idx.size());
    for (std::size_t k = 0; k < ext_idx.size(); ++k)
        parts[k].exterior = to_ring(rings[ext_idx[k]].pts);

    for (int hi : hole_idx) {
        const IPt s2 = rings[hi].sample2;
        bool placed = false;
        for (std::size_t k = 0; k < ext_idx.size(); ++k) {
            const IBox& b = rings[ext_idx[k]].box;
            if (s2.x < 2 * b.min_x || s2.x > 2 * b.max_x || s2.y < 2 * b.min_y ||
                s2.y > 2 * b.max_y)
                continue;
            if (exact::point_in_walk(s2, ext2[k]) == 2) {
                parts[k].holes.push_back(to_ring(rings[hi].pts));
                placed = true;
                break;
            }
        }
        if (!placed)
            throw Error(ErrorCode::bad_input, "overlay produced an orphan hole");
    }

    for (auto& p : parts) result.parts.push_back(std::move(p));
    return result;
}

// --- Convenience wrappers -------------------------------------------------

MultiPolygon overlay(const MultiPolygon& a, const MultiPolygon& b, BoolOp op) {
    if (a.empty() || b.empty()) {
        switch (op) {
            case BoolOp::union_op:
                return a.empty() ? b : a;
            case BoolOp::intersection:
                return {};
            case BoolOp::difference:
                return a;
            case BoolOp::xor_op:
                return a.empty() ? b : a;
        }
    }
    OverlaySet set;
    set.add(a);
    set.add(b);
    set.build();
    return set.extract([op](std::span<const int> ops) {
        const bool in_a = std::find(ops.begin(), ops.end(), 0) != ops.end();
        const bool in_b = std::find(ops.begin(), ops.end(), 1) != ops.end();
        switch (op) {
            case BoolOp::union_op: return in_a || in_b;
            case BoolOp::intersection: return in_a && in_b;
            case BoolOp::difference: return in_a && !in_b;
            case BoolOp::xor_op: return in_a != in_b;
        }
        return false;
    });
}

MultiPolygon union_all(std::span<const MultiPolygon> shapes) {
    OverlaySet set;
    bool any = false;
    for (const auto& s : shapes) {
        set.add(s);
        if (!s.empty()) any = true;
    }
    if (!any) return {};
    set.build();
    return set.extract([](std::span<const int> ops) { return !ops.empty(); });
}

MultiPolygon even_odd_decompose(const MultiPolygon& shape) {
    if (shape.empty()) return {};
    OverlaySet set;
    set.add(shape);
    set.build();
    return set.extract([](std::span<const int> ops) { return !ops.empty(); });
}

}  // namespace gridshed::geom
