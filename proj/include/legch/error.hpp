#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace legch {

enum class ErrorCode {
    structural,          // ids/names that do not refer to the ambient object
    precondition,        // operation called outside its contract
    malformed_json,
    schema_violation,    // missing key or wrong JSON type
    unknown_generator,
    duplicate_generator,
    grading_violation,
    nonzero_square,      // the differential does not square to zero
    invalid_height,
    invalid_patch,
    height_violation,    // differential not strictly height-decreasing
    usage,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace legch
