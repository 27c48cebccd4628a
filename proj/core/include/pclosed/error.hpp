#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pclosed {

enum class ErrorCode {
    NotPrime,
    Mismatch,
    IndexOutOfRange,
    ZeroDenominator,
    ZeroGcdInput,
    NotAPthPower,
    RaggedMatrix,
    EmptyInput,
    DivergenceNotZero,
    NotCoprime,
    ZeroInput,
    NotClosed,
    MalformedSeries,
    InvariantViolation,
};

std::string_view to_string(ErrorCode code);

/// Base class of every error raised by the library. The code identifies the
/// failure kind so callers (and the CLI) can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace pclosed
