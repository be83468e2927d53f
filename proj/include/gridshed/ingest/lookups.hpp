#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::ingest {

// The eight ONS rural-urban classes plus the devolved-statistics gap
// (Scotland publishes its own scheme, carried here as unknown).
enum class RucClass {
    urban_major_conurbation,
    urban_minor_conurbation,
    urban_city_and_town,
    urban_city_and_town_sparse,
    rural_town_and_fringe,
    rural_town_and_fringe_sparse,
    rural_village_and_dispersed,
    rural_village_and_dispersed_sparse,
    unknown,
};

const char* ruc_name(RucClass c);
RucClass ruc_from_string(const std::string& label);  // unknown when unrecognised

struct LsoaCentroid {
    std::string lsoa_id;
    geom::Point location;
    RucClass ruc = RucClass::unknown;
};

struct HpScenarioRow {
    std::string local_authority;
    int year = 0;
    double hp_penetration = 0;  // 0..1
};

struct LocalAuthorityShape {
    std::string la_name;
    geom::MultiPolygon geometry;
};

// `postcode,x,y` with header.  Postcodes are normalized on load.
std::map<std::string, geom::Point> read_postcode_centroids(
    const std::filesystem::path& path);

// `lsoa_id,x,y,ruc` with header.
std::vector<LsoaCentroid> read_lsoa_centroids(const std::filesystem::path& path);

// `local_authority,year,hp_penetration` with header; penetration in [0,1].
std::vector<HpScenarioRow> read_hp_scenario(const std::filesystem::path& path);

// GeoJSON FeatureCollection with property `la_name`.
std::vector<LocalAuthorityShape> read_la_polygons(const std::filesystem::path& path);

}  // namespace gridshed::ingest
