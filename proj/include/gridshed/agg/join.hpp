#pragma once

#include <span>
#include <string>
#include <vector>

#include "gridshed/geom/spatial_index.hpp"
#include "gridshed/ingest/consumption.hpp"

namespace gridshed::agg {

struct Assignment {
    std::string postcode;
    std::string upid;
    bool double_counted = false;  // centroid sits inside >= 2 service areas
};

struct JoinResult {
    std::vector<Assignment> assignments;    // ordered by (postcode, upid)
    std::size_t neglected = 0;              // centroids outside every polygon
    std::size_t double_counted = 0;         // postcodes assigned >= 2 times
    std::size_t missing_centroid = 0;       // postcodes with no centroid
};

// Point-in-polygon assignment of each distinct postcode centroid to the
// service areas containing it.  Boundary points match every touching
// polygon, mirroring the double-count rule.  Deterministic for any jobs.
JoinResult spatial_join(std::span<const ingest::PostcodeRecord> records,
                        const geom::SpatialIndex& index, int jobs = 1);

}  // namespace gridshed::agg
