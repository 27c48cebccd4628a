#include "pclosed/error.hpp"

namespace pclosed {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Mismatch: return "Mismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::ZeroGcdInput: return "ZeroGcdInput";
        case ErrorCode::NotAPthPower: return "NotAPthPower";
        case ErrorCode::RaggedMatrix: return "RaggedMatrix";
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DivergenceNotZero: return "DivergenceNotZero";
        case ErrorCode::NotCoprime: return "NotCoprime";
        case ErrorCode::ZeroInput: return "ZeroInput";
        case ErrorCode::NotClosed: return "NotClosed";
        case ErrorCode::MalformedSeries: return "MalformedSeries";
        case ErrorCode::InvariantViolation: return "InvariantViolation";
    }
    return "Unknown";
}

}  // namespace pclosed
