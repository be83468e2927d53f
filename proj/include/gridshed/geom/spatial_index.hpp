#pragma once

// Static spatial index over (key, MultiPolygon) entries: an STR-packed
// R-tree for bounding-box candidate retrieval plus prepared geometry for
// the exact containment filter.  Immutable after construction; queries
// are safe from any number of threads.

#include <string>
#include <vector>

#include "gridshed/geom/prepared.hpp"
#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

class SpatialIndex {
public:
    SpatialIndex() = default;
    explicit SpatialIndex(std::vector<std::pair<std::string, MultiPolygon>> entries);

    // Keys whose bounding box covers p: a superset of query(p).
    std::vector<std::string> candidates(const Point& p) const;

    // Keys whose geometry contains p (boundary-inclusive), sorted.
    std::vector<std::string> query(const Point& p) const;

    // Candidate entry indices whose box intersects the probe box.
    std::vector<std::size_t> box_candidates(const Box& probe) const;

    std::size_t size() const noexcept { return keys_.size(); }
    const std::string& key_at(std::size_t i) const { return keys_[i]; }
    const PreparedShape& shape_at(std::size_t i) const { return shapes_[i]; }

private:
    struct Node {
        Box box{};
        std::int32_t first = 0;  // child node or leaf entry index
        std::int32_t count = 0;
        bool leaf = false;
    };

    void collect(const Point& p, std::size_t node, std::vector<std::size_t>& out) const;
    void collect_box(const Box& b, std::size_t node, std::vector<std::size_t>& out) const;

    std::vector<std::string> keys_;
    std::vector<PreparedShape> shapes_;
    std::vector<std::int32_t> leaf_entries_;  // entry indices, leaf-major order
    std::vector<Node> nodes_;                 // nodes_[0] is the root when non-empty
};

}  // namespace gridshed::geom
