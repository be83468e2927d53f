#include "gridshed/agg/join.hpp"

#include <algorithm>
#include <map>

#include "gridshed/util/parallel.hpp"

namespace gridshed::agg {

JoinResult spatial_join(std::span<const ingest::PostcodeRecord> records,
                        const geom::SpatialIndex& index, int jobs) {
    JoinResult result;

    // Distinct postcodes; one lookup each, reused across years.
    std::map<std::string, std::optional<geom::Point>> postcodes;
    for (const auto& rec : records) {
        auto [it, fresh] = postcodes.emplace(rec.postcode, rec.centroid);
        if (!fresh && !it->second && rec.centroid) it->second = rec.centroid;
    }

    std::vector<std::pair<std::string, geom::Point>> located;
    located.reserve(postcodes.size());
    for (const auto& [pc, centroid] : postcodes) {
        if (centroid) located.emplace_back(pc, *centroid);
        else ++result.missing_centroid;
    }

    std::vector<std::vector<std::string>> hits(located.size());
    util::parallel_for(located.size(), jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            hits[i] = index.query(located[i].second);
    });

    for (std::size_t i = 0; i < located.size(); ++i) {
        if (hits[i].empty()) {
            ++result.neglected;
            continue;
        }
        const bool doubled = hits[i].size() > 1;
        if (doubled) ++result.double_counted;
        for (const std::string& upid : hits[i])
            result.assignments.push_back({located[i].first, upid, doubled});
    }
    return result;
}

}  // namespace gridshed::agg
