#pragma once

#include <stdexcept>
#include <string>

namespace gridshed {

// Error conditions with a stable machine-readable code.  Diagnostic
// findings (geometry defects, malformed CSV rows) are returned as data,
// not thrown; these codes cover contract violations only.
enum class ErrorCode {
    duplicate_seed,
    seed_outside_clip,
    irreparable_geometry,
    zero_area_shape,
    missing_parent,
    too_many_features,
    bad_licence,
    duplicate_upid,
    unknown_upid,
    too_few_eligible,
    missing_local_authority,
    missing_scenario_row,
    bad_input,
    io_error,
    config_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gridshed
