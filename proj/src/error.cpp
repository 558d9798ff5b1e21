#include "ore/error.hpp"

namespace ore {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::ContextMismatch: return "CONTEXT_MISMATCH";
        case ErrorCode::DivisionByZeroPoly: return "DIVISION_BY_ZERO_POLY";
        case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
        case ErrorCode::CapabilityMissing: return "CAPABILITY_MISSING";
        case ErrorCode::ZeroConjugator: return "ZERO_CONJUGATOR";
        case ErrorCode::DomainRequired: return "DOMAIN_REQUIRED";
        case ErrorCode::NotPIndependent: return "NOT_P_INDEPENDENT";
        case ErrorCode::DisjointnessViolated: return "DISJOINTNESS_VIOLATED";
        case ErrorCode::ZeroC: return "ZERO_C";
        case ErrorCode::AInClass: return "A_IN_CLASS";
        case ErrorCode::NotFull: return "NOT_FULL";
        case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
        case ErrorCode::WrongRing: return "WRONG_RING";
        case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    }
    return "UNKNOWN";
}

}  // namespace ore
