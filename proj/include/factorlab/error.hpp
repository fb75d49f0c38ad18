#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace factorlab {

enum class ErrorCode {
    EmptyGraph,
    NonDisjoint,
    BadParams,
    ParityPreconditionViolated,
    InvalidGF,
    SizeLimitExceeded,
    NotConverged,
    NotAPartition,
    BadRotation,
    SamplerExhausted,
    Graph6Parse,
    TooLarge,
};

inline constexpr std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::NonDisjoint: return "NonDisjoint";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::ParityPreconditionViolated: return "ParityPreconditionViolated";
    case ErrorCode::InvalidGF: return "InvalidGF";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::NotAPartition: return "NotAPartition";
    case ErrorCode::BadRotation: return "BadRotation";
    case ErrorCode::SamplerExhausted: return "SamplerExhausted";
    case ErrorCode::Graph6Parse: return "Graph6Parse";
    case ErrorCode::TooLarge: return "TooLarge";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what)
    {
    }

    ErrorCode code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
};

} // namespace factorlab
