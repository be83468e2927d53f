#pragma once

// Minimal RFC 4180 CSV reader: quoted fields, embedded commas/newlines,
// CRLF endings.  Tracks the physical line number of each record for
// diagnostics.

#include <istream>
#include <string>
#include <vector>

namespace gridshed::util {

class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    // Reads one record; false at end of input.  Empty lines are skipped.
    bool next(std::vector<std::string>& fields);

    // Physical line on which the last record started (1-based).
    int line() const noexcept { return record_line_; }

private:
    std::istream& in_;
    int line_ = 0;
    int record_line_ = 0;
};

// Quotes a value for CSV output when needed.
std::string csv_escape(const std::string& value);

// Lower-cases and squeezes a header cell to [a-z0-9_] for matching.
std::string normalize_header(const std::string& header);

}  // namespace gridshed::util
