#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

// Voronoi cells of the seed set clipped to `clip`, one cell per seed in
// input order.  Cells partition the clip: interiors are pairwise disjoint
// and their areas sum to the clip area (within snapping tolerance).
//
// Built by半-plane clipping each seed's region against bisectors of its
// neighbours in increasing-distance order, stopping once the next site is
// more than twice as far as the farthest current cell vertex.
//
// Throws Error{duplicate_seed} for coincident seeds, Error{seed_outside_clip}
// when a seed is not inside the clip, Error{bad_input} for an empty seed
// list or invalid clip.
std::vector<MultiPolygon> voronoi_cells(std::span<const Point> seeds,
                                        const MultiPolygon& clip);

// Even-odd repair: valid shapes pass through untouched; invalid shapes are
// rebuilt from the noded arrangement of all their rings (self-intersections
// split, duplicate vertices removed, degenerate rings dropped).
// Throws Error{irreparable_geometry} when nothing with area remains.
MultiPolygon repair(const MultiPolygon& shape);

// Union of cells grouped by parent key.  parents[i] names the parent of
// cells[i]; an empty parent key raises Error{missing_parent}.
std::map<std::string, MultiPolygon> dissolve(std::span<const MultiPolygon> cells,
                                             std::span<const std::string> parents);

}  // namespace gridshed::geom
