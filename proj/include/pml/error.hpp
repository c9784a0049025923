#pragma once

#include <stdexcept>
#include <string>

namespace pml {

enum class ErrorCode {
    CycleDetected,
    NotTransitivelyReduced,
    DuplicateCover,
    IndexOutOfRange,
    NoUniqueMinimum,
    EmptyResult,
    InvalidParameter,
    LengthMismatch,
    NotRootedTree,
    NotRanked,
    NotNatural,
    NotPacked,
    NotAnIdeal,
    PreconditionViolated,
    NonzeroRemainder,
    LimitExceeded,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::CycleDetected:          return "CycleDetected";
        case ErrorCode::NotTransitivelyReduced: return "NotTransitivelyReduced";
        case ErrorCode::DuplicateCover:         return "DuplicateCover";
        case ErrorCode::IndexOutOfRange:        return "IndexOutOfRange";
        case ErrorCode::NoUniqueMinimum:        return "NoUniqueMinimum";
        case ErrorCode::EmptyResult:            return "EmptyResult";
        case ErrorCode::InvalidParameter:       return "InvalidParameter";
        case ErrorCode::LengthMismatch:         return "LengthMismatch";
        case ErrorCode::NotRootedTree:          return "NotRootedTree";
        case ErrorCode::NotRanked:              return "NotRanked";
        case ErrorCode::NotNatural:             return "NotNatural";
        case ErrorCode::NotPacked:              return "NotPacked";
        case ErrorCode::NotAnIdeal:             return "NotAnIdeal";
        case ErrorCode::PreconditionViolated:   return "PreconditionViolated";
        case ErrorCode::NonzeroRemainder:       return "NonzeroRemainder";
        case ErrorCode::LimitExceeded:          return "LimitExceeded";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace pml
