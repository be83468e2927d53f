#include "gridshed/agg/aggregate.hpp"

#include <algorithm>
#include <cmath>

#include "gridshed/errors.hpp"
#include "gridshed/geom/measure.hpp"

namespace gridshed::agg {

namespace {

// Rounded-to-nearest period mean with the publisher's floor: any observed
// meters lift the count to at least 5.
long long final_meter_count(double mean_meters) {
    if (!(mean_meters > 0)) return 0;
    const long long rounded = std::llround(mean_meters);
    return std::max<long long>(rounded, 5);
}

}  // namespace

std::vector<PrimaryAggregate> aggregate_by_primary(
    const JoinResult& join, std::span<const ingest::PostcodeRecord> records,
    std::span<const boundary::ServiceArea> layer, std::span<const int> years) {
    if (years.empty()) throw Error(ErrorCode::bad_input, "no years requested");

    std::map<std::string, std::size_t> upid_to_slot;
    std::vector<PrimaryAggregate> out(layer.size());
    for (std::size_t i = 0; i < layer.size(); ++i) {
        out[i].upid = layer[i].upid;
        out[i].name = layer[i].name;
        out[i].licence_area = layer[i].licence_area;
        out[i].area_km2 = geom::area_km2(layer[i].geometry);
        for (int y : years) out[i].per_year.emplace(y, YearStats{});
        upid_to_slot[layer[i].upid] = i;
    }

    // postcode -> target slots (a double-counted postcode feeds several).
    std::map<std::string, std::vector<std::size_t>> targets;
    for (const Assignment& a : join.assignments) {
        auto it = upid_to_slot.find(a.upid);
        if (it == upid_to_slot.end())
            throw Error(ErrorCode::unknown_upid, a.upid);
        targets[a.postcode].push_back(it->second);
    }

    for (const auto& rec : records) {
        auto it = targets.find(rec.postcode);
        if (it == targets.end()) continue;
        for (std::size_t slot : it->second) {
            auto year_it = out[slot].per_year.find(rec.year);
            if (year_it == out[slot].per_year.end()) continue;  // year not requested
            YearStats& ys = year_it->second;
            ys.gas_meters += rec.gas_meters;
            ys.gas_kwh += rec.gas_kwh;
            ys.elec_meters += rec.elec_meters;
            ys.elec_kwh += rec.elec_kwh;
        }
    }

    const double n_years = static_cast<double>(years.size());
    for (auto& agg : out) {
        double gas_m = 0, gas_k = 0, elec_m = 0, elec_k = 0;
        for (const auto& [year, ys] : agg.per_year) {
            gas_m += ys.gas_meters;
            gas_k += ys.gas_kwh;
            elec_m += ys.elec_meters;
            elec_k += ys.elec_kwh;
        }
        agg.mean_gas_meters = final_meter_count(gas_m / n_years);
        agg.mean_elec_meters = final_meter_count(elec_m / n_years);
        if (agg.mean_gas_meters > 0)
            agg.mean_gas_kwh_per_meter =
                (gas_k / n_years) / static_cast<double>(agg.mean_gas_meters);
        if (agg.mean_elec_meters > 0)
            agg.mean_elec_kwh_per_meter =
                (elec_k / n_years) / static_cast<double>(agg.mean_elec_meters);

        agg.pct_on_gas = pct_on_gas_ratio(agg.mean_gas_meters, agg.mean_elec_meters);
        agg.anomalous_gas_ratio = agg.pct_on_gas && *agg.pct_on_gas > 1.0;
    }
    return out;
}

std::optional<double> pct_on_gas_ratio(long long gas_meters, long long elec_meters) {
    if (elec_meters <= 0) return std::nullopt;
    return static_cast<double>(gas_meters) / static_cast<double>(elec_meters);
}

double off_gas_display(double raw_pct_on_gas) {
    return std::max(0.0, 1.0 - raw_pct_on_gas);
}

std::optional<double> pct_change_gas(const PrimaryAggregate& agg, int from_year,
                                     int to_year) {
    const auto from_it = agg.per_year.find(from_year);
    const auto to_it = agg.per_year.find(to_year);
    if (from_it == agg.per_year.end() || to_it == agg.per_year.end())
        return std::nullopt;
    const YearStats& a = from_it->second;
    const YearStats& b = to_it->second;
    if (!(a.gas_meters > 0) || !(b.gas_meters > 0)) return std::nullopt;
    const double mean_from = a.gas_kwh / a.gas_meters;
    const double mean_to = b.gas_kwh / b.gas_meters;
    if (!(mean_from > 0)) return std::nullopt;
    return (mean_to - mean_from) / mean_from;
}

}  // namespace gridshed::agg
