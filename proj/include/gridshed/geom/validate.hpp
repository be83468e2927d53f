#pragma once

#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

// Structural and topological validity scan.  Returns an empty list iff the
// shape satisfies every invariant: rings closed with >= 4 vertices, finite
// coordinates, simple rings, holes inside their exterior and pairwise
// disjoint, part interiors pairwise disjoint.  Each defect is reported
// once per (kind, part, ring).  Diagnostic only; never throws.
std::vector<GeometryError> validate(const MultiPolygon& shape);

}  // namespace gridshed::geom
