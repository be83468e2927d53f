#include "gridshed/boundary/service_area.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>

#include "gridshed/errors.hpp"
#include "gridshed/util/csv.hpp"

namespace gridshed::boundary {

namespace {

constexpr std::array<LicenceAreaInfo, 14> kLicenceAreas{{
    {1, "Northern Scotland", "SSEN"},
    {2, "Southern Scotland", "SPEN"},
    {3, "Northern England", "NPG"},
    {4, "Yorkshire", "NPG"},
    {5, "North West England", "ENWL"},
    {6, "Merseyside and North Wales", "SPEN"},
    {7, "South Wales", "WPD"},
    {8, "West Midlands", "WPD"},
    {9, "East Midlands", "WPD"},
    {10, "South West England", "WPD"},
    {11, "Southern England", "SSEN"},
    {12, "South East England", "UKPN"},
    {13, "London", "UKPN"},
    {14, "Eastern England", "UKPN"},
}};

}  // namespace

bool valid_licence(int number) { return number >= 1 && number <= 14; }

const LicenceAreaInfo& licence_info(int number) {
    if (!valid_licence(number))
        throw Error(ErrorCode::bad_licence, "licence area " + std::to_string(number));
    return kLicenceAreas[static_cast<std::size_t>(number - 1)];
}

bool valid_upid(const std::string& upid) {
    if (upid.size() != 7 || upid[2] != '-') return false;
    for (std::size_t i : {0u, 1u, 3u, 4u, 5u, 6u})
        if (upid[i] < '0' || upid[i] > '9') return false;
    return true;
}

std::string format_upid(int licence, int sequence) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02d-%04d", licence, sequence);
    return buf;
}

std::vector<SeedPoint> read_seeds_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open " + path.string());
    util::CsvReader reader(in);

    std::vector<std::string> fields;
    if (!reader.next(fields))
        throw Error(ErrorCode::bad_input, path.string() + ": empty seed file");
    int col_seed = -1, col_parent = -1, col_x = -1, col_y = -1;
    for (int i = 0; i < static_cast<int>(fields.size()); ++i) {
        const std::string h = util::normalize_header(fields[i]);
        if (h == "seed_id") col_seed = i;
        else if (h == "parent_id") col_parent = i;
        else if (h == "x") col_x = i;
        else if (h == "y") col_y = i;
    }
    if (col_seed < 0 || col_parent < 0 || col_x < 0 || col_y < 0)
        throw Error(ErrorCode::bad_input,
                    path.string() + ": header must name seed_id,parent_id,x,y");

    auto parse_num = [&](const std::string& s, int line) {
        double v = 0;
        const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || p != s.data() + s.size())
            throw Error(ErrorCode::bad_input, path.string() + ":" + std::to_string(line) +
                                                  ": bad coordinate '" + s + "'");
        return v;
    };

    std::vector<SeedPoint> seeds;
    while (reader.next(fields)) {
        const int need = std::max(std::max(col_seed, col_parent), std::max(col_x, col_y));
        if (static_cast<int>(fields.size()) <= need)
            throw Error(ErrorCode::bad_input, path.string() + ":" +
                                                  std::to_string(reader.line()) +
                                                  ": short row");
        SeedPoint s;
        s.seed_id = fields[static_cast<std::size_t>(col_seed)];
        s.parent_id = fields[static_cast<std::size_t>(col_parent)];
        s.location.x = parse_num(fields[static_cast<std::size_t>(col_x)], reader.line());
        s.location.y = parse_num(fields[static_cast<std::size_t>(col_y)], reader.line());
        seeds.push_back(std::move(s));
    }
    return seeds;
}

}  // namespace gridshed::boundary
