#include "gridshed/boundary/builder.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gridshed/errors.hpp"
#include "gridshed/geom/geojson.hpp"
#include "gridshed/geom/voronoi.hpp"

namespace gridshed::boundary {

std::vector<ServiceArea> build_layer(std::span<const SeedPoint> seeds,
                                     const geom::MultiPolygon& clip, int licence) {
    if (!valid_licence(licence))
        throw Error(ErrorCode::bad_licence, std::to_string(licence));
    std::vector<geom::Point> points;
    std::vector<std::string> parents;
    points.reserve(seeds.size());
    parents.reserve(seeds.size());
    {
        std::set<std::string> seen;
        for (const SeedPoint& s : seeds) {
            if (s.parent_id.empty())
                throw Error(ErrorCode::missing_parent, "seed " + s.seed_id);
            if (!seen.insert(s.seed_id).second)
                throw Error(ErrorCode::bad_input, "duplicate seed_id " + s.seed_id);
            points.push_back(s.location);
            parents.push_back(s.parent_id);
        }
    }

    const auto cells = geom::voronoi_cells(points, clip);
    auto merged = geom::dissolve(cells, parents);

    std::vector<NamedShape> features;
    features.reserve(merged.size());
    for (auto& [parent, shape] : merged)
        features.push_back({parent, std::move(shape), parent});
    // dissolve() returns parents in sorted order; name == parent_id, so
    // this is already the (name, parent_id) UPID ordering.
    return assign_upids(std::move(features), licence);
}

std::vector<ServiceArea> assign_upids(std::vector<NamedShape> features, int licence) {
    if (!valid_licence(licence))
        throw Error(ErrorCode::bad_licence, std::to_string(licence));
    if (features.size() > 9999)
        throw Error(ErrorCode::too_many_features,
                    std::to_string(features.size()) + " features in licence " +
                        std::to_string(licence) + " (limit 9999)");
    std::vector<ServiceArea> out;
    out.reserve(features.size());
    int seq = 1;
    for (NamedShape& f : features) {
        ServiceArea area;
        area.upid = format_upid(licence, seq++);
        area.name = std::move(f.name);
        area.licence_area = licence;
        area.geometry = std::move(f.geometry);
        area.source_id = std::move(f.source_id);
        out.push_back(std::move(area));
    }
    return out;
}

std::vector<ServiceArea> merge_layers(std::span<const std::vector<ServiceArea>> layers) {
    std::vector<ServiceArea> merged;
    std::set<std::string> seen;
    for (const auto& layer : layers) {
        for (const ServiceArea& f : layer) {
            if (!seen.insert(f.upid).second)
                throw Error(ErrorCode::duplicate_upid, f.upid);
            merged.push_back(f);
        }
    }
    return merged;
}

std::vector<ServiceArea> read_layer(const std::filesystem::path& path) {
    const auto fc = geom::read_feature_collection(path);
    std::vector<ServiceArea> layer;
    layer.reserve(fc.features.size());
    for (const auto& f : fc.features) {
        ServiceArea area;
        area.geometry = f.geometry;
        const auto& props = f.properties;
        area.upid = props.value("upid", "");
        area.name = props.value("name", "");
        area.licence_area = props.value("licence_area", 0);
        area.source_id = props.value("source_id", "");
        area.direct_supply = props.value("direct_supply", false);
        layer.push_back(std::move(area));
    }
    return layer;
}

void write_layer(const std::filesystem::path& path, std::span<const ServiceArea> layer) {
    geom::FeatureCollection fc;
    fc.features.reserve(layer.size());
    for (const ServiceArea& area : layer) {
        geom::Feature f;
        f.geometry = area.geometry;
        f.properties["upid"] = area.upid;
        f.properties["name"] = area.name;
        f.properties["licence_area"] = area.licence_area;
        if (!area.source_id.empty()) f.properties["source_id"] = area.source_id;
        if (area.direct_supply) f.properties["direct_supply"] = true;
        fc.features.push_back(std::move(f));
    }
    geom::write_feature_collection(path, fc);
}

}  // namespace gridshed::boundary
