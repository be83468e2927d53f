#pragma once

// Query-optimised form of a MultiPolygon: per-ring SoA edge arrays for the
// SIMD kernels plus cached bounding boxes.  Immutable after construction
// and safe to share across threads.

#include <cstddef>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

struct PreparedRing {
    std::vector<double> x0, y0, x1, y1;  // edge SoA
    Box box{};

    void assign(const Ring& r);
    std::size_t edge_count() const noexcept { return x0.size(); }
};

struct PreparedPart {
    PreparedRing exterior;
    std::vector<PreparedRing> holes;
};

class PreparedShape {
public:
    PreparedShape() = default;
    explicit PreparedShape(const MultiPolygon& shape);

    // Boundary-inclusive containment: interior points and points on any
    // ring (exterior or hole) count as inside.
    bool contains(const Point& p) const;

    const Box& box() const noexcept { return box_; }
    bool empty() const noexcept { return parts_.empty(); }

private:
    std::vector<PreparedPart> parts_;
    Box box_{};
};

// One-shot boundary-inclusive test; prefer PreparedShape for repeated
// queries against the same geometry.
bool contains(const MultiPolygon& shape, const Point& p);

}  // namespace gridshed::geom
