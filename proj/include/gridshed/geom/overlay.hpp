#pragma once

// Polygon overlay on a snapped integer lattice.  All operand rings are
// noded against each other exactly (128-bit integer predicates), the
// resulting planar subdivision is labelled face-by-face with the set of
// operands covering it (even-odd rule per operand), and any boolean
// combination is read off by keeping faces that satisfy a predicate.
//
// One OverlaySet can be built once and queried for several extractions,
// which is how the QA scan derives holes and overlaps from a single pass.
//
// Coordinates are snapped to the 1e-9 m grid, so extracted geometry can
// differ from the inputs by up to half a grid unit per vertex.

#include <functional>
#include <memory>
#include <span>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

class OverlaySet {
public:
    OverlaySet();
    ~OverlaySet();
    OverlaySet(OverlaySet&&) noexcept;
    OverlaySet& operator=(OverlaySet&&) noexcept;

    // Registers a shape as the next operand; returns its operand id.
    // Every ring (exterior or hole) contributes even-odd parity edges.
    int add(const MultiPolygon& shape);

    void build();

    // Assembles the region of all faces whose covering-operand set (sorted
    // ascending) satisfies `keep`.  Exteriors come out counter-clockwise,
    // holes clockwise, rings closed.
    MultiPolygon extract(const std::function<bool(std::span<const int>)>& keep) const;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

enum class BoolOp { union_op, intersection, difference, xor_op };

MultiPolygon overlay(const MultiPolygon& a, const MultiPolygon& b, BoolOp op);

MultiPolygon union_all(std::span<const MultiPolygon> shapes);

// Even-odd reinterpretation of all rings of a shape: self-intersecting
// rings split at their crossings, duplicate geometry cancelled.
MultiPolygon even_odd_decompose(const MultiPolygon& shape);

}  // namespace gridshed::geom
