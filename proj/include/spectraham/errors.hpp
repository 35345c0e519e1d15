#pragma once

#include <stdexcept>
#include <string>

namespace spectraham {

enum class ErrorCode {
    InvalidArgument,
    InvalidEdge,
    InvalidVertex,
    EmptyGraph,
    NotBalanced,
    ConvergenceFailure,
    TooLarge,
    DomainError,
    HypothesisNotMet,
    InvalidFamilyParams,
    UnavailableFamily,
    ParseError,
    Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace spectraham
