#include "gridshed/geom/spatial_index.hpp"

#include <algorithm>
#include <cmath>

namespace gridshed::geom {

namespace {
constexpr std::size_t kLeafFanout = 16;
constexpr std::size_t kNodeFanout = 16;
}  // namespace

SpatialIndex::SpatialIndex(std::vector<std::pair<std::string, MultiPolygon>> entries) {
    keys_.reserve(entries.size());
    shapes_.reserve(entries.size());
    for (auto& [key, shape] : entries) {
        keys_.push_back(std::move(key));
        shapes_.emplace_back(shape);
    }
    if (shapes_.empty()) return;

    // Sort-tile-recursive packing: order entries by x, tile into vertical
    // slices, order each slice by y, then chop into leaves.
    const std::size_t n = shapes_.size();
    std::vector<std::int32_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<std::int32_t>(i);
    auto center_x = [this](std::int32_t i) {
        const Box& b = shapes_[i].box();
        return b.min_x + b.max_x;
    };
    auto center_y = [this](std::int32_t i) {
        const Box& b = shapes_[i].box();
        return b.min_y + b.max_y;
    };
    std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
        const double ax = center_x(a), bx = center_x(b);
        if (ax != bx) return ax < bx;
        return a < b;
    });
    const std::size_t leaf_count = (n + kLeafFanout - 1) / kLeafFanout;
    const std::size_t slices =
        static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(leaf_count))));
    const std::size_t slice_size = (n + slices - 1) / slices;
    for (std::size_t s = 0; s * slice_size < n; ++s) {
        const auto first = order.begin() + static_cast<std::ptrdiff_t>(s * slice_size);
        const auto last =
            order.begin() + static_cast<std::ptrdiff_t>(std::min(n, (s + 1) * slice_size));
        std::sort(first, last, [&](std::int32_t a, std::int32_t b) {
            const double ay = center_y(a), by = center_y(b);
            if (ay != by) return ay < by;
            return a < b;
        });
    }
    leaf_entries_ = std::move(order);

    // Leaf level.
    std::vector<Node> level;
    for (std::size_t i = 0; i < n; i += kLeafFanout) {
        Node node;
        node.leaf = true;
        node.first = static_cast<std::int32_t>(i);
        node.count = static_cast<std::int32_t>(std::min(kLeafFanout, n - i));
        node.box = shapes_[leaf_entries_[i]].box();
        for (std::int32_t k = 1; k < node.count; ++k)
            node.box.expand(shapes_[leaf_entries_[i + k]].box());
        level.push_back(node);
    }

    // Upper levels, bottom-up; children of each level are appended after
    // their parents so nodes_[0] stays the root.
    std::vector<std::vector<Node>> levels{level};
    while (levels.back().size() > 1) {
        const auto& prev = levels.back();
        std::vector<Node> next;
        for (std::size_t i = 0; i < prev.size(); i += kNodeFanout) {
            Node node;
            node.leaf = false;
            node.count = static_cast<std::int32_t>(std::min(kNodeFanout, prev.size() - i));
            node.first = static_cast<std::int32_t>(i);  // index within prev level
            node.box = prev[i].box;
            for (std::int32_t k = 1; k < node.count; ++k) node.box.expand(prev[i + k].box);
            next.push_back(node);
        }
        levels.push_back(std::move(next));
    }

    // Flatten root-first; fix child offsets level by level.
    nodes_.clear();
    std::size_t offset = 0;
    for (std::size_t li = levels.size(); li-- > 0;) {
        const std::size_t level_start = nodes_.size();
        for (const Node& nd : levels[li]) nodes_.push_back(nd);
        if (li + 1 < levels.size()) {
            // Parents at the previous flattened block point into this one.
            for (std::size_t p = offset; p < level_start; ++p)
                nodes_[p].first += static_cast<std::int32_t>(level_start);
        }
        offset = level_start;
    }
}

void SpatialIndex::collect(const Point& p, std::size_t node,
                           std::vector<std::size_t>& out) const {
    const Node& nd = nodes_[node];
    if (!nd.box.contains(p)) return;
    if (nd.leaf) {
        for (std::int32_t k = 0; k < nd.count; ++k) {
            const std::int32_t e = leaf_entries_[static_cast<std::size_t>(nd.first + k)];
            if (shapes_[e].box().contains(p)) out.push_back(static_cast<std::size_t>(e));
        }
        return;
    }
    for (std::int32_t k = 0; k < nd.count; ++k)
        collect(p, static_cast<std::size_t>(nd.first + k), out);
}

void SpatialIndex::collect_box(const Box& b, std::size_t node,
                               std::vector<std::size_t>& out) const {
    const Node& nd = nodes_[node];
    if (!nd.box.intersects(b)) return;
    if (nd.leaf) {
        for (std::int32_t k = 0; k < nd.count; ++k) {
            const std::int32_t e = leaf_entries_[static_cast<std::size_t>(nd.first + k)];
            if (shapes_[e].box().intersects(b)) out.push_back(static_cast<std::size_t>(e));
        }
        return;
    }
    for (std::int32_t k = 0; k < nd.count; ++k)
        collect_box(b, static_cast<std::size_t>(nd.first + k), out);
}

std::vector<std::string> SpatialIndex::candidates(const Point& p) const {
    std::vector<std::string> out;
    if (nodes_.empty()) return out;
    std::vector<std::size_t> idx;
    collect(p, 0, idx);
    out.reserve(idx.size());
    for (std::size_t i : idx) out.push_back(keys_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> SpatialIndex::query(const Point& p) const {
    std::vector<std::string> out;
    if (nodes_.empty()) return out;
    std::vector<std::size_t> idx;
    collect(p, 0, idx);
    for (std::size_t i : idx)
        if (shapes_[i].contains(p)) out.push_back(keys_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> SpatialIndex::box_candidates(const Box& probe) const {
    std::vector<std::size_t> out;
    if (nodes_.empty()) return out;
    collect_box(probe, 0, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace gridshed::geom
