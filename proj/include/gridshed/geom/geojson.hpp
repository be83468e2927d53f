#pragma once

// GeoJSON (RFC 7946) reading and writing for Polygon / MultiPolygon
// features.  Coordinates pass through untouched: the caller is
// responsible for supplying a planar metric CRS when areas are wanted.
// On write, exteriors are emitted counter-clockwise and holes clockwise.

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "gridshed/geom/types.hpp"

namespace gridshed::geom {

struct Feature {
    MultiPolygon geometry;
    nlohmann::ordered_json properties = nlohmann::ordered_json::object();
};

struct FeatureCollection {
    std::vector<Feature> features;
};

FeatureCollection read_feature_collection(const std::filesystem::path& path);
void write_feature_collection(const std::filesystem::path& path,
                              const FeatureCollection& fc);

// Accepts a FeatureCollection, a Feature or a bare geometry and gathers
// every polygon into one shape (parts concatenated, no union).
MultiPolygon read_shape(const std::filesystem::path& path);

// Geometry (de)serialisation used by the report writers.
nlohmann::ordered_json geometry_to_json(const MultiPolygon& shape);
MultiPolygon geometry_from_json(const nlohmann::json& geometry);

}  // namespace gridshed::geom
