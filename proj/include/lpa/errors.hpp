#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

enum class ErrorCode {
    IndexOutOfRange,
    InvalidGraph,
    NotHereditarySaturated,
    NonSquare,
    DimensionMismatch,
    NotABijection,
    InvalidSelector,
    HasSink,
    TooLarge,
    NotInLattice,
    NotStronglyConnected,
    NotAperiodic,
    EmptySubset,
    DuplicateIndex,
    NotACycle,
    SinkCannotExpand,
    GeneratorAbsent,
    PreconditionViolation,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::NotHereditarySaturated: return "NotHereditarySaturated";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotABijection: return "NotABijection";
    case ErrorCode::InvalidSelector: return "InvalidSelector";
    case ErrorCode::HasSink: return "HasSink";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotAperiodic: return "NotAperiodic";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::DuplicateIndex: return "DuplicateIndex";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::SinkCannotExpand: return "SinkCannotExpand";
    case ErrorCode::GeneratorAbsent: return "GeneratorAbsent";
    case ErrorCode::PreconditionViolation: return "PreconditionViolation";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to an exit status and a structured error object.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lpa
