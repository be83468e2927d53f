#include "gridshed/errors.hpp"

namespace gridshed {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::duplicate_seed: return "DuplicateSeed";
        case ErrorCode::seed_outside_clip: return "SeedOutsideClip";
        case ErrorCode::irreparable_geometry: return "IrreparableGeometry";
        case ErrorCode::zero_area_shape: return "ZeroAreaShape";
        case ErrorCode::missing_parent: return "MissingParent";
        case ErrorCode::too_many_features: return "TooManyFeatures";
        case ErrorCode::bad_licence: return "BadLicence";
        case ErrorCode::duplicate_upid: return "DuplicateUpid";
        case ErrorCode::unknown_upid: return "UnknownUpid";
        case ErrorCode::too_few_eligible: return "TooFewEligible";
        case ErrorCode::missing_local_authority: return "MissingLocalAuthority";
        case ErrorCode::missing_scenario_row: return "MissingScenarioRow";
        case ErrorCode::bad_input: return "BadInput";
        case ErrorCode::io_error: return "IoError";
        case ErrorCode::config_error: return "ConfigError";
    }
    return "UnknownError";
}

}  // namespace gridshed
