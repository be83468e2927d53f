#pragma once

#include <filesystem>
#include <span>
#include <vector>

#include "gridshed/boundary/service_area.hpp"

namespace gridshed::boundary {

// Voronoi tessellation of the seeds, dissolved onto parents, UPIDs
// assigned over parents sorted by (name, parent_id).  Generated features
// take the parent id as their name.
std::vector<ServiceArea> build_layer(std::span<const SeedPoint> seeds,
                                     const geom::MultiPolygon& clip, int licence);

// Numbers features "NN-0001".. in input order.  Throws
// Error{too_many_features} past 9999 and Error{bad_licence} outside 1..14.
struct NamedShape {
    std::string name;
    geom::MultiPolygon geometry;
    std::string source_id;
};
std::vector<ServiceArea> assign_upids(std::vector<NamedShape> features, int licence);

// Concatenates layers; UPIDs must be globally unique.
std::vector<ServiceArea> merge_layers(std::span<const std::vector<ServiceArea>> layers);

// GeoJSON layer I/O with properties upid, name, licence_area and the
// optional source_id / direct_supply attributes.
std::vector<ServiceArea> read_layer(const std::filesystem::path& path);
void write_layer(const std::filesystem::path& path, std::span<const ServiceArea> layer);

}  // namespace gridshed::boundary
