#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qg {

enum class ErrorCode {
    NotHermitian,
    NotUnitTrace,
    NotPSD,
    DegenerateEigenvalue,
    NegativeInput,
    NotAProbabilityVector,
    NonOrthonormalMarkers,
    EmptyInput,
    InvalidArgument,
    ParseError,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying one of the library's error categories.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

private:
    ErrorCode code_;
};

}  // namespace qg
