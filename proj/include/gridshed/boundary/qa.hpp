#pragma once

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "gridshed/boundary/service_area.hpp"
#include "gridshed/geom/types.hpp"

namespace gridshed::boundary {

struct OverlapFinding {
    std::string upid_a;  // lexicographically smaller
    std::string upid_b;
    geom::MultiPolygon geometry;
    double area_km2 = 0;
};

struct HoleFinding {
    geom::MultiPolygon geometry;
    double area_km2 = 0;
};

struct NameGroup {
    std::string name;
    std::vector<std::string> upids;
};

struct QaReport {
    std::vector<std::pair<std::string, geom::GeometryError>> geometry_errors;
    std::vector<OverlapFinding> overlaps;
    std::vector<HoleFinding> holes;
    std::vector<NameGroup> duplicate_names;
    std::vector<NameGroup> cross_licence_name_matches;

    std::size_t anomaly_count() const {
        return overlaps.size() + holes.size();
    }
};

// Pairwise interior overlaps at or above min_anomaly_km2; uncovered
// connected parts of `coverage` at or above the same threshold; duplicate
// feature names, and duplicates spanning distinct licence areas.  Pass an
// empty coverage to skip hole detection.  Deterministic for any `jobs`.
QaReport qa_scan(std::span<const ServiceArea> layer, const geom::MultiPolygon& coverage,
                 double min_anomaly_km2, int jobs = 1);

nlohmann::ordered_json qa_report_to_json(const QaReport& report);

}  // namespace gridshed::boundary
