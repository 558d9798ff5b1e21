#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ore {

enum class ErrorCode {
    ContextMismatch,
    DivisionByZeroPoly,
    DivisionByZero,
    CapabilityMissing,
    ZeroConjugator,
    DomainRequired,
    NotPIndependent,
    DisjointnessViolated,
    ZeroC,
    AInClass,
    NotFull,
    SyntaxError,
    WrongRing,
    InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Every library failure carries one of the codes above; the message is
/// meant for humans.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures additionally record the offending character offset.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace ore
