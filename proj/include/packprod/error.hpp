#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace packprod {

enum class ErrorCode {
    InvalidVertex,
    LoopRejected,
    EmptyGraph,
    BadParameters,
    EmptyFactor,
    UnsupportedKind,
    NodeBudgetExceeded,
    IsolatedVertex,
    EnumerationLimitExceeded,
    DisconnectedFactor,
    NotTwoIndependent,
    TriangleFound,
    ChromaticExceedsR,
    ParseError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Single exception type for every library failure; `code()` identifies the kind.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace packprod
