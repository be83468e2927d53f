#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gridshed/agg/join.hpp"
#include "gridshed/boundary/service_area.hpp"
#include "gridshed/ingest/consumption.hpp"
#include "gridshed/ingest/lookups.hpp"

namespace gridshed::agg {

struct YearStats {
    double gas_meters = 0;
    double gas_kwh = 0;
    double elec_meters = 0;
    double elec_kwh = 0;
};

struct PrimaryAggregate {
    std::string upid;
    std::string name;
    int licence_area = 0;
    double area_km2 = 0;

    std::map<int, YearStats> per_year;  // one entry per requested year

    // Period means over the year list.  Meter counts follow the published
    // convention: rounded to the nearest integer, and floored at 5
    // whenever any meters were observed at all.
    long long mean_gas_meters = 0;
    long long mean_elec_meters = 0;
    std::optional<double> mean_gas_kwh_per_meter;   // period-mean kWh / final count
    std::optional<double> mean_elec_kwh_per_meter;

    std::optional<double> pct_on_gas;  // raw gas/elec meter ratio, may exceed 1
    bool anomalous_gas_ratio = false;  // raw ratio > 1

    std::optional<int> gas_decile;                  // 1..10
    std::optional<double> pct_change_gas;           // default 2015 -> 2019
    std::optional<std::string> local_authority;
    bool la_boundary_tie = false;
    std::optional<ingest::RucClass> ruc;
    bool ruc_tie = false;
};

// Group-by-UPID sums per year plus the period-mean derivations.  Every
// feature of `layer` yields one aggregate (zeros and NONE means when no
// postcode landed in it).  Throws Error{unknown_upid} if an assignment
// names a UPID absent from the layer.
std::vector<PrimaryAggregate> aggregate_by_primary(
    const JoinResult& join, std::span<const ingest::PostcodeRecord> records,
    std::span<const boundary::ServiceArea> layer, std::span<const int> years);

// Raw gas-to-electricity meter ratio; NONE when there are no electricity
// meters.
std::optional<double> pct_on_gas_ratio(long long gas_meters, long long elec_meters);

// Display form: share of properties off the gas grid, clamped to [0, 1].
double off_gas_display(double raw_pct_on_gas);

// Relative change of per-meter consumption between two years; NONE unless
// both years have meters and consumption.
std::optional<double> pct_change_gas(const PrimaryAggregate& agg, int from_year,
                                     int to_year);

}  // namespace gridshed::agg
