#include "gridshed/ingest/consumption.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>

#include "gridshed/errors.hpp"
#include "gridshed/util/csv.hpp"

namespace gridshed::ingest {

const char* vector_name(Vector v) {
    switch (v) {
        case Vector::gas: return "gas";
        case Vector::std_elec: return "std_elec";
        case Vector::e7_elec: return "e7_elec";
    }
    return "?";
}

std::string normalize_postcode(const std::string& raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    for (unsigned char c : raw) {
        if (std::isspace(c)) {
            if (!out.empty()) pending_space = true;
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(static_cast<char>(std::toupper(c)));
    }
    return out;
}

namespace {

// Built-in header synonyms per logical column, normalized form.  DESNZ
// wording drifts across years, so several spellings map to each column.
const std::array<std::pair<const char*, const char*>, 18> kSynonyms{{
    {"postcode", "postcode"},
    {"pcode", "postcode"},
    {"post_code", "postcode"},
    {"num_meters", "meters"},
    {"number_of_meters", "meters"},
    {"meter_count", "meters"},
    {"meters", "meters"},
    {"total_cons_kwh", "total"},
    {"total_consumption_kwh", "total"},
    {"consumption_kwh", "total"},
    {"total_kwh", "total"},
    {"mean_cons_kwh", "mean"},
    {"mean_consumption_kwh", "mean"},
    {"mean_kwh", "mean"},
    {"median_cons_kwh", "median"},
    {"median_consumption_kwh", "median"},
    {"median_kwh", "median"},
    {"median", "median"},
}};

bool parse_double(const std::string& s, double& out) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    if (b == e) return false;
    const auto [p, ec] = std::from_chars(s.data() + b, s.data() + e, out);
    return ec == std::errc() && p == s.data() + e;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::vector<ConsumptionFragment> parse_consumption(std::istream& in, Vector vector,
                                                   int year, ParseDiagnostics& diag,
                                                   const ColumnSynonyms& overrides) {
    (void)vector;
    util::CsvReader reader(in);
    std::vector<std::string> fields;
    if (!reader.next(fields))
        throw Error(ErrorCode::bad_input, "consumption file has no header row");

    int col_postcode = -1, col_meters = -1, col_total = -1, col_mean = -1,
        col_median = -1;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
        std::string h = util::normalize_header(fields[i]);
        std::string logical;
        if (auto it = overrides.find(h); it != overrides.end()) {
            logical = it->second;
        } else {
            for (const auto& [syn, name] : kSynonyms)
                if (h == syn) {
                    logical = name;
                    break;
                }
        }
        if (logical == "postcode" && col_postcode < 0) col_postcode = i;
        else if (logical == "meters" && col_meters < 0) col_meters = i;
        else if (logical == "total" && col_total < 0) col_total = i;
        else if (logical == "mean" && col_mean < 0) col_mean = i;
        else if (logical == "median" && col_median < 0) col_median = i;
    }
    if (col_postcode < 0 || col_meters < 0 || col_total < 0)
        throw Error(ErrorCode::bad_input,
                    "consumption header lacks postcode/meters/total columns");

    std::vector<ConsumptionFragment> out;
    while (reader.next(fields)) {
        auto get = [&](int col) -> const std::string& {
            static const std::string empty;
            return (col >= 0 && col < static_cast<int>(fields.size()))
                       ? fields[static_cast<std::size_t>(col)]
                       : empty;
        };
        const std::string& pc_raw = get(col_postcode);
        if (blank(pc_raw)) {
            ++diag.rows_malformed;
            if (diag.malformed_samples.size() < 20)
                diag.malformed_samples.push_back("line " + std::to_string(reader.line()) +
                                                 ": blank postcode");
            continue;
        }

        ConsumptionFragment frag;
        frag.postcode = normalize_postcode(pc_raw);
        frag.year = year;

        const std::string& meters_s = get(col_meters);
        const std::string& total_s = get(col_total);
        if (blank(meters_s) || blank(total_s)) {
            frag.suppressed = true;
        } else {
            double meters = 0, total = 0;
            if (!parse_double(meters_s, meters) || !parse_double(total_s, total)) {
                ++diag.rows_malformed;
                if (diag.malformed_samples.size() < 20)
                    diag.malformed_samples.push_back(
                        "line " + std::to_string(reader.line()) + ": non-numeric value");
                continue;
            }
            if (meters < 0 || total < 0) {
                ++diag.rows_malformed;
                if (diag.malformed_samples.size() < 20)
                    diag.malformed_samples.push_back(
                        "line " + std::to_string(reader.line()) + ": negative value");
                continue;
            }
            frag.meters = meters;
            frag.total_kwh = total;
        }
        // Means and medians ride along when present; they are recomputed
        // from totals downstream, never trusted.
        (void)parse_double(get(col_mean), frag.mean_kwh);
        (void)parse_double(get(col_median), frag.median_kwh);

        ++diag.rows_parsed;
        out.push_back(std::move(frag));
    }
    return out;
}

std::vector<ConsumptionFragment> parse_consumption_file(
    const std::filesystem::path& path, Vector vector, int year, ParseDiagnostics& diag,
    const ColumnSynonyms& overrides) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    try {
        return parse_consumption(in, vector, year, diag, overrides);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

std::vector<PostcodeRecord> combine_electricity(
    std::vector<ConsumptionFragment> std_elec, std::vector<ConsumptionFragment> e7_elec) {
    std::map<std::pair<std::string, int>, PostcodeRecord> joined;
    auto fold = [&joined](const ConsumptionFragment& f) {
        auto& rec = joined[{f.postcode, f.year}];
        rec.postcode = f.postcode;
        rec.year = f.year;
        if (!f.suppressed) {
            rec.elec_suppressed = false;
            rec.elec_meters += f.meters;
            rec.elec_kwh += f.total_kwh;
        }
    };
    for (const auto& f : std_elec) fold(f);
    for (const auto& f : e7_elec) fold(f);

    std::vector<PostcodeRecord> out;
    out.reserve(joined.size());
    for (auto& [key, rec] : joined) out.push_back(std::move(rec));
    return out;
}

void merge_gas(std::vector<PostcodeRecord>& records,
               std::vector<ConsumptionFragment> gas) {
    std::map<std::pair<std::string, int>, std::size_t> where;
    for (std::size_t i = 0; i < records.size(); ++i)
        where[{records[i].postcode, records[i].year}] = i;
    for (const auto& f : gas) {
        const auto key = std::make_pair(f.postcode, f.year);
        auto it = where.find(key);
        std::size_t idx;
        if (it == where.end()) {
            PostcodeRecord rec;
            rec.postcode = f.postcode;
            rec.year = f.year;
            records.push_back(std::move(rec));
            idx = records.size() - 1;
            where[key] = idx;
        } else {
            idx = it->second;
        }
        if (!f.suppressed) {
            records[idx].gas_suppressed = false;
            records[idx].gas_meters += f.meters;
            records[idx].gas_kwh += f.total_kwh;
        }
    }
    std::sort(records.begin(), records.end(),
              [](const PostcodeRecord& a, const PostcodeRecord& b) {
                  if (a.postcode != b.postcode) return a.postcode < b.postcode;
                  return a.year < b.year;
              });
}

std::size_t attach_centroids(std::vector<PostcodeRecord>& records,
                             const std::map<std::string, geom::Point>& lookup) {
    std::set<std::string> unmatched;
    for (auto& rec : records) {
        auto it = lookup.find(rec.postcode);
        if (it == lookup.end()) {
            rec.centroid.reset();
            unmatched.insert(rec.postcode);
        } else {
            rec.centroid = it->second;
        }
    }
    return unmatched.size();
}

}  // namespace gridshed::ingest
