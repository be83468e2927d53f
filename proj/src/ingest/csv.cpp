#include "gridshed/util/csv.hpp"

#include <cctype>

namespace gridshed::util {

bool CsvReader::next(std::vector<std::string>& fields) {
    fields.clear();
    std::string field;
    bool in_quotes = false;
    bool any = false;

    int c;
    while ((c = in_.get()) != std::istream::traits_type::eof()) {
        if (!any) {
            ++line_;
            record_line_ = line_;
            any = true;
        }
        if (in_quotes) {
            if (c == '"') {
                if (in_.peek() == '"') {
                    field.push_back('"');
                    in_.get();
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line_;
                field.push_back(static_cast<char>(c));
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                break;
            case ',':
                fields.push_back(std::move(field));
                field.clear();
                break;
            case '\r':
                break;
            case '\n':
                if (fields.empty() && field.empty()) {
                    // blank line: keep scanning
                    any = false;
                    continue;
                }
                fields.push_back(std::move(field));
                return true;
            default:
                field.push_back(static_cast<char>(c));
        }
    }
    if (any && (!field.empty() || !fields.empty())) {
        fields.push_back(std::move(field));
        return true;
    }
    return false;
}

std::string csv_escape(const std::string& value) {
    if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string normalize_header(const std::string& header) {
    std::string out;
    bool last_us = false;
    for (unsigned char c : header) {
        if (std::isalnum(c)) {
            out.push_back(static_cast<char>(std::tolower(c)));
            last_us = false;
        } else if (!out.empty() && !last_us) {
            out.push_back('_');
            last_us = true;
        }
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

}  // namespace gridshed::util
