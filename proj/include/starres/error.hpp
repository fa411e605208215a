#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starres {

enum class ErrorCode {
    InvalidParameters,
    ParameterMismatch,
    Precondition,
    OutOfRange,
    NotMinimal,
    Unsupported,
    NotNegativeDefinite,
    SingularMatrix,
    Degenerate,
    InternalConsistency,
};

std::string_view code_name(ErrorCode code);

// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace starres
