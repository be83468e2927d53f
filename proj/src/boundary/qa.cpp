#include "gridshed/boundary/qa.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gridshed/geom/geojson.hpp"
#include "gridshed/geom/measure.hpp"
#include "gridshed/geom/overlay.hpp"
#include "gridshed/geom/spatial_index.hpp"
#include "gridshed/geom/validate.hpp"
#include "gridshed/util/parallel.hpp"

namespace gridshed::boundary {

QaReport qa_scan(std::span<const ServiceArea> layer, const geom::MultiPolygon& coverage,
                 double min_anomaly_km2, int jobs) {
    QaReport report;

    for (const ServiceArea& f : layer)
        for (const geom::GeometryError& e : geom::validate(f.geometry))
            report.geometry_errors.emplace_back(f.upid, e);

    // Candidate overlap pairs from bounding boxes, evaluated exactly.
    std::vector<std::pair<std::string, geom::MultiPolygon>> entries;
    entries.reserve(layer.size());
    for (const ServiceArea& f : layer) entries.emplace_back(f.upid, f.geometry);
    const geom::SpatialIndex index(entries);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < layer.size(); ++i) {
        const auto cands = index.box_candidates(geom::shape_box(layer[i].geometry));
        for (std::size_t j : cands)
            if (j > i) pairs.emplace_back(i, j);
    }

    std::vector<OverlapFinding> findings(pairs.size());
    std::vector<char> hit(pairs.size(), 0);
    util::parallel_for(pairs.size(), jobs, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            const auto [i, j] = pairs[k];
            auto inter = geom::overlay(layer[i].geometry, layer[j].geometry,
                                       geom::BoolOp::intersection);
            if (inter.empty()) continue;
            const double area = geom::area_km2(inter);
            if (area < min_anomaly_km2) continue;
            OverlapFinding f;
            f.upid_a = std::min(layer[i].upid, layer[j].upid);
            f.upid_b = std::max(layer[i].upid, layer[j].upid);
            f.geometry = std::move(inter);
            f.area_km2 = area;
            findings[k] = std::move(f);
            hit[k] = 1;
        }
    });
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (hit[k]) report.overlaps.push_back(std::move(findings[k]));
    std::sort(report.overlaps.begin(), report.overlaps.end(),
              [](const OverlapFinding& a, const OverlapFinding& b) {
                  if (a.upid_a != b.upid_a) return a.upid_a < b.upid_a;
                  return a.upid_b < b.upid_b;
              });

    if (!coverage.empty()) {
        std::vector<geom::MultiPolygon> shapes;
        shapes.reserve(layer.size());
        for (const ServiceArea& f : layer) shapes.push_back(f.geometry);
        const auto covered = geom::union_all(shapes);
        const auto uncovered =
            geom::overlay(coverage, covered, geom::BoolOp::difference);
        for (const geom::Polygon& part : uncovered.parts) {
            geom::MultiPolygon piece;
            piece.parts.push_back(part);
            const double area = geom::area_km2(piece);
            if (area >= min_anomaly_km2)
                report.holes.push_back({std::move(piece), area});
        }
        std::sort(report.holes.begin(), report.holes.end(),
                  [](const HoleFinding& a, const HoleFinding& b) {
                      return a.area_km2 > b.area_km2;
                  });
    }

    std::map<std::string, std::vector<std::size_t>> by_name;
    for (std::size_t i = 0; i < layer.size(); ++i)
        by_name[layer[i].name].push_back(i);
    for (const auto& [name, members] : by_name) {
        if (members.size() < 2 || name.empty()) continue;
        NameGroup group;
        group.name = name;
        std::set<int> licences;
        for (std::size_t i : members) {
            group.upids.push_back(layer[i].upid);
            licences.insert(layer[i].licence_area);
        }
        std::sort(group.upids.begin(), group.upids.end());
        report.duplicate_names.push_back(group);
        if (licences.size() > 1) report.cross_licence_name_matches.push_back(group);
    }

    return report;
}

nlohmann::ordered_json qa_report_to_json(const QaReport& report) {
    using nlohmann::ordered_json;
    ordered_json j;

    ordered_json errs = ordered_json::array();
    for (const auto& [upid, e] : report.geometry_errors) {
        ordered_json je;
        je["feature"] = upid;
        je["kind"] = geom::geometry_error_kind_name(e.kind);
        je["part"] = e.part;
        je["ring"] = e.ring;
        if (e.has_location) je["location"] = {e.location.x, e.location.y};
        errs.push_back(std::move(je));
    }
    j["geometry_errors"] = std::move(errs);

    ordered_json overlaps = ordered_json::array();
    for (const auto& o : report.overlaps) {
        ordered_json jo;
        jo["upid_a"] = o.upid_a;
        jo["upid_b"] = o.upid_b;
        jo["overlap_area_km2"] = o.area_km2;
        jo["geometry"] = geom::geometry_to_json(o.geometry);
        overlaps.push_back(std::move(jo));
    }
    j["overlaps"] = std::move(overlaps);

    ordered_json holes = ordered_json::array();
    for (const auto& h : report.holes) {
        ordered_json jh;
        jh["area_km2"] = h.area_km2;
        jh["geometry"] = geom::geometry_to_json(h.geometry);
        holes.push_back(std::move(jh));
    }
    j["holes"] = std::move(holes);

    auto groups_json = [](const std::vector<NameGroup>& groups) {
        ordered_json arr = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json jg;
            jg["name"] = g.name;
            jg["upids"] = g.upids;
            arr.push_back(std::move(jg));
        }
        return arr;
    };
    j["duplicate_names"] = groups_json(report.duplicate_names);
    j["cross_licence_name_matches"] = groups_json(report.cross_licence_name_matches);
    return j;
}

}  // namespace gridshed::boundary
