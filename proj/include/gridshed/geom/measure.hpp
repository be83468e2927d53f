#pragma once

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

// Shoelace area in square metres: |exterior| minus |holes| per part,
// summed over parts.  Never negative for valid input.
double area_m2(const MultiPolygon& shape);

inline double area_km2(const MultiPolygon& shape) { return area_m2(shape) / 1e6; }

// Area-weighted centroid over all parts (holes subtract).
// Throws Error{zero_area_shape} when the total area vanishes.
Point centroid(const MultiPolygon& shape);

}  // namespace gridshed::geom
