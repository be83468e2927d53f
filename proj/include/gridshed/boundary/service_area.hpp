#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::boundary {

// A low-voltage substation point feeding the Voronoi tessellation.
struct SeedPoint {
    std::string seed_id;
    std::string parent_id;  // primary substation the LV substation hangs off
    geom::Point location;
};

// One primary substation's service-area feature.
struct ServiceArea {
    std::string upid;  // "NN-XXXX": 2-digit licence + 4-digit sequence
    std::string name;
    int licence_area = 0;  // 1..14
    geom::MultiPolygon geometry;
    std::string source_id;      // external id of an ingested foreign feature
    bool direct_supply = false; // caller-set flag, no special handling
};

struct LicenceAreaInfo {
    int number;
    const char* name;
    const char* dno_group;
};

// The 14 distribution licence areas, indexed 1..14.
const LicenceAreaInfo& licence_info(int number);
bool valid_licence(int number);

bool valid_upid(const std::string& upid);
std::string format_upid(int licence, int sequence);

// Reads `seed_id,parent_id,x,y` (header required, UTF-8, comma-delimited).
std::vector<SeedPoint> read_seeds_csv(const std::filesystem::path& path);

}  // namespace gridshed::boundary
