#pragma once

// Tabular input model.  Counts and totals below the publisher's 5-meter
// disclosure floor arrive blank and are carried as "suppressed"; sums
// treat suppressed as zero rather than imputing.

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridshed/geom/types.hpp"

namespace gridshed::ingest {

enum class Vector { gas, std_elec, e7_elec };

const char* vector_name(Vector v);

// One vector-year's numbers for one postcode, straight off the file.
struct ConsumptionFragment {
    std::string postcode;  // normalized
    int year = 0;
    bool suppressed = false;     // blank meter count or total
    double meters = 0;           // 0 when suppressed
    double total_kwh = 0;        // 0 when suppressed
    double mean_kwh = 0;         // parsed, not used downstream
    double median_kwh = 0;       // parsed, not used downstream
};

struct ParseDiagnostics {
    std::size_t rows_parsed = 0;
    std::size_t rows_malformed = 0;
    std::vector<std::string> malformed_samples;  // "line N: reason", capped
};

// Optional header-name overrides (normalized form), e.g. {"postcode","pc"}.
using ColumnSynonyms = std::map<std::string, std::string>;

// Parses one DESNZ-style consumption file.  Columns are located by header
// name (case-insensitive, punctuation-insensitive) with built-in synonym
// lists per column; `overrides` adds caller-specified names.  Rows with
// blank count/total become suppressed records; rows with non-numeric
// numerics are skipped and counted.
std::vector<ConsumptionFragment> parse_consumption(std::istream& in, Vector vector,
                                                   int year, ParseDiagnostics& diag,
                                                   const ColumnSynonyms& overrides = {});
std::vector<ConsumptionFragment> parse_consumption_file(
    const std::filesystem::path& path, Vector vector, int year, ParseDiagnostics& diag,
    const ColumnSynonyms& overrides = {});

// Gas and combined-electricity numbers for one postcode-year.
struct PostcodeRecord {
    std::string postcode;
    int year = 0;
    bool gas_suppressed = true;
    double gas_meters = 0;
    double gas_kwh = 0;
    bool elec_suppressed = true;  // both classes suppressed/absent
    double elec_meters = 0;
    double elec_kwh = 0;
    std::optional<geom::Point> centroid;
};

// Outer join of standard and economy-7 fragments on (postcode, year);
// suppressed values contribute zero.
std::vector<PostcodeRecord> combine_electricity(
    std::vector<ConsumptionFragment> std_elec, std::vector<ConsumptionFragment> e7_elec);

// Folds gas fragments into the combined records (outer join again).
void merge_gas(std::vector<PostcodeRecord>& records,
               std::vector<ConsumptionFragment> gas);

// Exact-string centroid attachment after normalization; unmatched records
// keep centroid == nullopt and are counted.
std::size_t attach_centroids(std::vector<PostcodeRecord>& records,
                             const std::map<std::string, geom::Point>& lookup);

// Uppercase, trim, collapse internal whitespace to one space.
std::string normalize_postcode(const std::string& raw);

}  // namespace gridshed::ingest
