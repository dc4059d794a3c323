#ifndef SLIDETOK_ERROR_HPP
#define SLIDETOK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace slidetok {

enum class ErrorCode {
    NotATree,
    InvalidVertex,
    DuplicateEdge,
    NotAdjacent,
    TooSmall,
    NoTokenAtSource,
    DestinationOccupied,
    NotAnEdge,
    IndependenceViolated,
    NotIndependent,
    NoTokenAtRoot,
    RootIsRigid,
    NoTokens,
    NotSafeLeaf,
    NotFeasible,
    TooLarge,
    InvalidK,
    Infeasible,
    SyntaxError,
    SchemaError,
    IoError,
    InternalInvariant,
};

inline const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotATree: return "NotATree";
        case ErrorCode::InvalidVertex: return "InvalidVertex";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::NotAdjacent: return "NotAdjacent";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NoTokenAtSource: return "NoTokenAtSource";
        case ErrorCode::DestinationOccupied: return "DestinationOccupied";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::IndependenceViolated: return "IndependenceViolated";
        case ErrorCode::NotIndependent: return "NotIndependent";
        case ErrorCode::NoTokenAtRoot: return "NoTokenAtRoot";
        case ErrorCode::RootIsRigid: return "RootIsRigid";
        case ErrorCode::NoTokens: return "NoTokens";
        case ErrorCode::NotSafeLeaf: return "NotSafeLeaf";
        case ErrorCode::NotFeasible: return "NotFeasible";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::SchemaError: return "SchemaError";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
    }
    return "Unknown";
}

/// Library-wide exception; `code()` identifies the failure category.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace slidetok

#endif
