#include "qutrit_geom/error.hpp"

namespace qg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotHermitian:
            return "NotHermitian";
        case ErrorCode::NotUnitTrace:
            return "NotUnitTrace";
        case ErrorCode::NotPSD:
            return "NotPSD";
        case ErrorCode::DegenerateEigenvalue:
            return "DegenerateEigenvalue";
        case ErrorCode::NegativeInput:
            return "NegativeInput";
        case ErrorCode::NotAProbabilityVector:
            return "NotAProbabilityVector";
        case ErrorCode::NonOrthonormalMarkers:
            return "NonOrthonormalMarkers";
        case ErrorCode::EmptyInput:
            return "EmptyInput";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

}  // namespace qg
