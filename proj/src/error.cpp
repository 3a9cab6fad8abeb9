#include "legch/error.hpp"

namespace legch {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::structural: return "STRUCTURAL";
    case ErrorCode::precondition: return "PRECONDITION";
    case ErrorCode::malformed_json: return "MALFORMED_JSON";
    case ErrorCode::schema_violation: return "SCHEMA_VIOLATION";
    case ErrorCode::unknown_generator: return "UNKNOWN_GENERATOR";
    case ErrorCode::duplicate_generator: return "DUPLICATE_GENERATOR";
    case ErrorCode::grading_violation: return "GRADING_VIOLATION";
    case ErrorCode::nonzero_square: return "NONZERO_SQUARE";
    case ErrorCode::invalid_height: return "INVALID_HEIGHT";
    case ErrorCode::invalid_patch: return "INVALID_PATCH";
    case ErrorCode::height_violation: return "HEIGHT_VIOLATION";
    case ErrorCode::usage: return "USAGE";
    }
    return "UNKNOWN";
}

} // namespace legch
