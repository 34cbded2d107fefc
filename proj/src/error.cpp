#include "packprod/error.hpp"

namespace packprod {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::EmptyFactor: return "EmptyFactor";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::NodeBudgetExceeded: return "NodeBudgetExceeded";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::EnumerationLimitExceeded: return "EnumerationLimitExceeded";
    case ErrorCode::DisconnectedFactor: return "DisconnectedFactor";
    case ErrorCode::NotTwoIndependent: return "NotTwoIndependent";
    case ErrorCode::TriangleFound: return "TriangleFound";
    case ErrorCode::ChromaticExceedsR: return "ChromaticExceedsR";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code)
{
}

} // namespace packprod
