#include "gridshed/ingest/lookups.hpp"

#include <array>
#include <charconv>
#include <fstream>

#include "gridshed/errors.hpp"
#include "gridshed/geom/geojson.hpp"
#include "gridshed/ingest/consumption.hpp"
#include "gridshed/util/csv.hpp"

namespace gridshed::ingest {

namespace {

constexpr std::array<const char*, 9> kRucNames{
    "Urban major conurbation",
    "Urban minor conurbation",
    "Urban city and town",
    "Urban city and town in a sparse setting",
    "Rural town and fringe",
    "Rural town and fringe in a sparse setting",
    "Rural village and dispersed",
    "Rural village and dispersed in a sparse setting",
    "Unknown",
};

double parse_num(const std::string& s, const std::string& context, int line) {
    double v = 0;
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    const auto [p, ec] = std::from_chars(s.data() + b, s.data() + e, v);
    if (ec != std::errc() || p != s.data() + e)
        throw Error(ErrorCode::bad_input,
                    context + ":" + std::to_string(line) + ": bad number '" + s + "'");
    return v;
}

struct HeaderMap {
    std::map<std::string, int> cols;
    int require(const std::string& name, const std::string& context) const {
        auto it = cols.find(name);
        if (it == cols.end())
            throw Error(ErrorCode::bad_input, context + ": missing column " + name);
        return it->second;
    }
};

HeaderMap read_header(util::CsvReader& reader, const std::string& context) {
    std::vector<std::string> fields;
    if (!reader.next(fields))
        throw Error(ErrorCode::bad_input, context + ": empty file");
    HeaderMap h;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i)
        h.cols.emplace(util::normalize_header(fields[i]), i);
    return h;
}

}  // namespace

const char* ruc_name(RucClass c) {
    return kRucNames[static_cast<std::size_t>(c)];
}

RucClass ruc_from_string(const std::string& label) {
    const std::string norm = util::normalize_header(label);
    for (std::size_t i = 0; i + 1 < kRucNames.size(); ++i)
        if (norm == util::normalize_header(kRucNames[i])) return static_cast<RucClass>(i);
    return RucClass::unknown;
}

std::map<std::string, geom::Point> read_postcode_centroids(
    const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    util::CsvReader reader(in);
    const auto header = read_header(reader, path.string());
    const int cp = header.require("postcode", path.string());
    const int cx = header.require("x", path.string());
    const int cy = header.require("y", path.string());

    std::map<std::string, geom::Point> lookup;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (static_cast<int>(fields.size()) <= std::max(cp, std::max(cx, cy)))
            throw Error(ErrorCode::bad_input, path.string() + ":" +
                                                  std::to_string(reader.line()) +
                                                  ": short row");
        const std::string pc = normalize_postcode(fields[static_cast<std::size_t>(cp)]);
        lookup[pc] = {parse_num(fields[static_cast<std::size_t>(cx)], path.string(),
                                reader.line()),
                      parse_num(fields[static_cast<std::size_t>(cy)], path.string(),
                                reader.line())};
    }
    return lookup;
}

std::vector<LsoaCentroid> read_lsoa_centroids(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    util::CsvReader reader(in);
    const auto header = read_header(reader, path.string());
    const int ci = header.require("lsoa_id", path.string());
    const int cx = header.require("x", path.string());
    const int cy = header.require("y", path.string());
    const int cr = header.require("ruc", path.string());

    std::vector<LsoaCentroid> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (static_cast<int>(fields.size()) <=
            std::max(std::max(ci, cr), std::max(cx, cy)))
            throw Error(ErrorCode::bad_input, path.string() + ":" +
                                                  std::to_string(reader.line()) +
                                                  ": short row");
        LsoaCentroid row;
        row.lsoa_id = fields[static_cast<std::size_t>(ci)];
        row.location = {parse_num(fields[static_cast<std::size_t>(cx)], path.string(),
                                  reader.line()),
                        parse_num(fields[static_cast<std::size_t>(cy)], path.string(),
                                  reader.line())};
        row.ruc = ruc_from_string(fields[static_cast<std::size_t>(cr)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<HpScenarioRow> read_hp_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    util::CsvReader reader(in);
    const auto header = read_header(reader, path.string());
    const int cl = header.require("local_authority", path.string());
    const int cy = header.require("year", path.string());
    const int cp = header.require("hp_penetration", path.string());

    std::vector<HpScenarioRow> rows;
    std::vector<std::string> fields;
    while (reader.next(fields)) {
        if (static_cast<int>(fields.size()) <= std::max(cl, std::max(cy, cp)))
            throw Error(ErrorCode::bad_input, path.string() + ":" +
                                                  std::to_string(reader.line()) +
                                                  ": short row");
        HpScenarioRow row;
        row.local_authority = fields[static_cast<std::size_t>(cl)];
        row.year = static_cast<int>(parse_num(fields[static_cast<std::size_t>(cy)],
                                              path.string(), reader.line()));
        row.hp_penetration = parse_num(fields[static_cast<std::size_t>(cp)],
                                       path.string(), reader.line());
        if (row.hp_penetration < 0 || row.hp_penetration > 1)
            throw Error(ErrorCode::bad_input,
                        path.string() + ":" + std::to_string(reader.line()) +
                            ": hp_penetration outside [0,1]");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<LocalAuthorityShape> read_la_polygons(const std::filesystem::path& path) {
    const auto fc = geom::read_feature_collection(path);
    std::vector<LocalAuthorityShape> out;
    out.reserve(fc.features.size());
    for (const auto& f : fc.features) {
        LocalAuthorityShape la;
        la.la_name = f.properties.value("la_name", "");
        if (la.la_name.empty())
            throw Error(ErrorCode::bad_input,
                        path.string() + ": feature without la_name property");
        la.geometry = f.geometry;
        out.push_back(std::move(la));
    }
    return out;
}

}  // namespace gridshed::ingest
