#include "gridshed/geom/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "gridshed/errors.hpp"
#include "gridshed/geom/overlay.hpp"
#include "gridshed/geom/prepared.hpp"
#include "gridshed/geom/validate.hpp"

namespace gridshed::geom {

namespace {

// Convex polygon clip against the half-plane of points nearer `seed` than
// `site` (Sutherland-Hodgman with a signed bisector function).
void clip_halfplane(std::vector<Point>& cell, const Point& seed, const Point& site) {
    const double mx = 0.5 * (seed.x + site.x);
    const double my = 0.5 * (seed.y + site.y);
    const double nx = site.x - seed.x;
    const double ny = site.y - seed.y;
    auto f = [&](const Point& p) { return (p.x - mx) * nx + (p.y - my) * ny; };

    std::vector<Point> next;
    next.reserve(cell.size() + 2);
    const std::size_t n = cell.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point& p = cell[i];
        const Point& q = cell[(i + 1) % n];
        const double fp = f(p);
        const double fq = f(q);
        if (fp <= 0) next.push_back(p);
        if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
            const double t = fp / (fp - fq);
            next.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    cell.swap(next);
}

// Bounding-box grid over the clip's edges, for the "cell entirely clear of
// the clip boundary" fast path.
class EdgeGrid {
public:
    explicit EdgeGrid(const MultiPolygon& clip) {
        auto add_ring = [this](const Ring& r) {
            for (std::size_t i = 0; i + 1 < r.size(); ++i) {
                Box b{std::min(r[i].x, r[i + 1].x), std::min(r[i].y, r[i + 1].y),
                      std::max(r[i].x, r[i + 1].x), std::max(r[i].y, r[i + 1].y)};
                boxes_.push_back(b);
            }
        };
        for (const auto& part : clip.parts) {
            add_ring(part.exterior);
            for (const auto& h : part.holes) add_ring(h);
        }
        if (boxes_.empty()) return;
        world_ = boxes_.front();
        double total = 0;
        for (const Box& b : boxes_) {
            world_.expand(b);
            total += (b.max_x - b.min_x) + (b.max_y - b.min_y);
        }
        cell_ = std::max(total / (2.0 * static_cast<double>(boxes_.size())),
                         (world_.max_x - world_.min_x + world_.max_y - world_.min_y) / 4096.0);
        if (!(cell_ > 0)) cell_ = 1.0;
        for (std::size_t i = 0; i < boxes_.size(); ++i) {
            for_cells(boxes_[i], [this, i](std::int64_t key) { grid_[key].push_back(i); });
        }
    }

    bool intersects_boundary(const Box& probe) const {
        if (boxes_.empty()) return false;
        bool hit = false;
        for_cells(probe, [&](std::int64_t key) {
            if (hit) return;
            auto it = grid_.find(key);
            if (it == grid_.end()) return;
            for (std::size_t i : it->second) {
                if (boxes_[i].intersects(probe)) {
                    hit = true;
                    return;
                }
            }
        });
        return hit;
    }

private:
    template <typename F>
    void for_cells(const Box& b, F&& fn) const {
        const auto cx0 = static_cast<std::int64_t>(std::floor((b.min_x - world_.min_x) / cell_));
        const auto cx1 = static_cast<std::int64_t>(std::floor((b.max_x - world_.min_x) / cell_));
        const auto cy0 = static_cast<std::int64_t>(std::floor((b.min_y - world_.min_y) / cell_));
        const auto cy1 = static_cast<std::int64_t>(std::floor((b.max_y - world_.min_y) / cell_));
        for (std::int64_t cx = cx0; cx <= cx1; ++cx)
            for (std::int64_t cy = cy0; cy <= cy1; ++cy)
                fn((cx << 24) ^ cy);
    }

    std::vector<Box> boxes_;
    Box world_{};
    double cell_ = 1.0;
    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid_;
};

// Sites within an expanding Chebyshev window of a seed, delivered in
// strictly increasing Euclidean distance.
class NeighbourSource {
public:
    NeighbourSource(std::span<const Point> seeds, double cell, const Box& world)
        : seeds_(seeds), cell_(cell), world_(world) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            grid_[key_of(seeds[i])].push_back(i);
    }

    // All sites other than `self` with distance <= guarantee, sorted by
    // distance; grows the window until the guarantee covers `radius`.
    std::span<const std::size_t> up_to(std::size_t self, double radius) {
        if (self != current_) reset(self);
        while (guarantee_ < radius && !exhausted_) expand();
        std::size_t count = sorted_.size();
        while (count > 0 && dist2_[count - 1] > guarantee_ * guarantee_) --count;
        return {sorted_.data(), count};
    }

    double guarantee() const { return guarantee_; }
    bool exhausted() const { return exhausted_; }
    double dist(std::size_t sorted_pos) const { return std::sqrt(dist2_[sorted_pos]); }

private:
    std::pair<std::int64_t, std::int64_t> cell_of(const Point& p) const {
        return {static_cast<std::int64_t>(std::floor((p.x - world_.min_x) / cell_)),
                static_cast<std::int64_t>(std::floor((p.y - world_.min_y) / cell_))};
    }
    std::int64_t key_of(const Point& p) const {
        const auto [cx, cy] = cell_of(p);
        return (cx << 24) ^ cy;
    }

    void reset(std::size_t self) {
        current_ = self;
        sorted_.clear();
        dist2_.clear();
        ring_ = 0;
        guarantee_ = 0;
        exhausted_ = false;
        expand();
    }

    void expand() {
        const auto [scx, scy] = cell_of(seeds_[current_]);
        const std::int64_t r = ring_ == 0 ? 1 : ring_ * 2;
        std::vector<std::size_t> found;
        for (std::int64_t cx = scx - r; cx <= scx + r; ++cx) {
            for (std::int64_t cy = scy - r; cy <= scy + r; ++cy) {
                if (ring_ != 0 && std::abs(cx - scx) <= ring_ && std::abs(cy - scy) <= ring_)
                    continue;  // already harvested
                auto it = grid_.find((cx << 24) ^ cy);
                if (it == grid_.end()) continue;
                for (std::size_t idx : it->second)
                    if (idx != current_) found.push_back(idx);
            }
        }
        for (std::size_t idx : found) {
            const double dx = seeds_[idx].x - seeds_[current_].x;
            const double dy = seeds_[idx].y - seeds_[current_].y;
            sorted_.push_back(idx);
            dist2_.push_back(dx * dx + dy * dy);
        }
        // Keep (site, distance) pairs ordered by distance.
        std::vector<std::size_t> order(sorted_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
            if (dist2_[a] != dist2_[b]) return dist2_[a] < dist2_[b];
            return sorted_[a] < sorted_[b];
        });
        std::vector<std::size_t> s2(order.size());
        std::vector<double> d2(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            s2[i] = sorted_[order[i]];
            d2[i] = dist2_[order[i]];
        }
        sorted_ = std::move(s2);
        dist2_ = std::move(d2);

        ring_ = r;
        // A site within Euclidean distance (ring - 1) * cell of the seed
        // cannot sit more than ring cells away, so the harvest so far is
        // complete up to that radius.
        guarantee_ = static_cast<double>(ring_ - 1) * cell_;
        if (sorted_.size() + 1 == seeds_.size()) {
            exhausted_ = true;
            guarantee_ = std::numeric_limits<double>::infinity();
        }
    }

    std::span<const Point> seeds_;
    double cell_;
    Box world_;
    std::unordered_map<std::int64_t, std::vector<std::size_t>> grid_;

    std::size_t current_ = static_cast<std::size_t>(-1);
    std::vector<std::size_t> sorted_;
    std::vector<double> dist2_;
    std::int64_t ring_ = 0;
    double guarantee_ = 0;
    bool exhausted_ = false;
};

}  // namespace

std::vector<MultiPolygon> voronoi_cells(std::span<const Point> seeds,
                                        const MultiPolygon& clip) {
    if (seeds.empty()) throw Error(ErrorCode::bad_input, "no seeds");
    if (!validate(clip).empty()) throw Error(ErrorCode::bad_input, "clip is not valid");

    {
        std::vector<std::pair<Point, std::size_t>> sorted(seeds.size());
        for (std::size_t i = 0; i < seeds.size(); ++i) sorted[i] = {seeds[i], i};
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (a.first.x != b.first.x) return a.first.x < b.first.x;
            return a.first.y < b.first.y;
        });
        for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
            if (sorted[i].first == sorted[i + 1].first)
                throw Error(ErrorCode::duplicate_seed,
                            "seeds " + std::to_string(sorted[i].second) + " and " +
                                std::to_string(sorted[i + 1].second) + " coincide");
        }
    }

    const PreparedShape prepared_clip(clip);
    for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (!prepared_clip.contains(seeds[i]))
            throw Error(ErrorCode::seed_outside_clip,
                        "seed " + std::to_string(i) + " lies outside the clip");
    }

    Box world = shape_box(clip);
    const double margin =
        0.1 * std::max(world.max_x - world.min_x, world.max_y - world.min_y) + 1.0;
    world.min_x -= margin;
    world.min_y -= margin;
    world.max_x += margin;
    world.max_y += margin;

    const double world_span =
        std::max(world.max_x - world.min_x, world.max_y - world.min_y);
    const double grid_cell = std::max(
        world_span / std::max(1.0, std::sqrt(static_cast<double>(seeds.size()))), 1e-6);
    NeighbourSource neighbours(seeds, grid_cell, world);
    const EdgeGrid clip_edges(clip);

    std::vector<MultiPolygon> cells(seeds.size());
    for (std::size_t si = 0; si < seeds.size(); ++si) {
        const Point seed = seeds[si];
        std::vector<Point> cell{{world.min_x, world.min_y},
                                {world.max_x, world.min_y},
                                {world.max_x, world.max_y},
                                {world.min_x, world.max_y}};

        auto max_vertex_dist = [&]() {
            double best = 0;
            for (const Point& p : cell) {
                const double dx = p.x - seed.x, dy = p.y - seed.y;
                best = std::max(best, dx * dx + dy * dy);
            }
            return std::sqrt(best);
        };

        double radius = max_vertex_dist();
        std::size_t done = 0;
        for (;;) {
            const auto sites = neighbours.up_to(si, 2.0 * radius);
            bool finished = true;
            for (; done < sites.size(); ++done) {
                if (neighbours.dist(done) > 2.0 * radius) {
                    finished = true;
                    break;
                }
                clip_halfplane(cell, seed, seeds[sites[done]]);
                radius = max_vertex_dist();
            }
            if (done >= sites.size() && !neighbours.exhausted() &&
                neighbours.guarantee() < 2.0 * radius)
                finished = false;  // window too small; widen and continue
            if (finished) break;
        }

        // Close the convex cell into a polygon.
        MultiPolygon cell_shape;
        if (cell.size() >= 3) {
            Polygon poly;
            poly.exterior = cell;
            poly.exterior.push_back(cell.front());
            cell_shape.parts.push_back(std::move(poly));
        }

        if (!cell_shape.empty()) {
            const Box cb = shape_box(cell_shape);
            if (clip_edges.intersects_boundary(cb)) {
                cells[si] = overlay(cell_shape, clip, BoolOp::intersection);
            } else {
                // No clip boundary near the cell: since the seed itself is
                // inside the clip, the whole cell is.
                cells[si] = std::move(cell_shape);
            }
        }
    }
    return cells;
}

MultiPolygon repair(const MultiPolygon& shape) {
    if (validate(shape).empty()) return shape;

    // Pre-clean rings so the arrangement sees finite, closed input.
    MultiPolygon cleaned;
    auto clean_ring = [](const Ring& r) {
        Ring out;
        out.reserve(r.size());
        for (const Point& p : r)
            if (point_finite(p)) out.push_back(p);
        if (!out.empty() && !(out.front() == out.back())) out.push_back(out.front());
        return out;
    };
    for (const Polygon& part : shape.parts) {
        Polygon p;
        p.exterior = clean_ring(part.exterior);
        for (const Ring& h : part.holes) {
            Ring hr = clean_ring(h);
            if (!hr.empty()) p.holes.push_back(std::move(hr));
        }
        cleaned.parts.push_back(std::move(p));
    }

    MultiPolygon result = even_odd_decompose(cleaned);
    if (result.empty())
        throw Error(ErrorCode::irreparable_geometry, "all parts collapse to zero area");
    return result;
}

std::map<std::string, MultiPolygon> dissolve(std::span<const MultiPolygon> cells,
                                             std::span<const std::string> parents) {
    if (cells.size() != parents.size())
        throw Error(ErrorCode::bad_input, "cells and parents differ in length");
    std::map<std::string, std::vector<MultiPolygon>> groups;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (parents[i].empty())
            throw Error(ErrorCode::missing_parent,
                        "cell " + std::to_string(i) + " has no parent");
        groups[parents[i]].push_back(cells[i]);
    }
    std::map<std::string, MultiPolygon> out;
    for (auto& [parent, members] : groups) out[parent] = union_all(members);
    return out;
}

}  // namespace gridshed::geom
