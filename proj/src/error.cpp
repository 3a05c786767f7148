#include "mdim/error.hpp"

namespace mdim {

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::disconnected_graph: return "DisconnectedGraph";
    case ErrorCode::invalid_edge: return "InvalidEdge";
    case ErrorCode::invalid_params: return "InvalidParams";
    case ErrorCode::size_overflow: return "SizeOverflow";
    case ErrorCode::too_small: return "TooSmall";
    case ErrorCode::too_large: return "TooLarge";
    case ErrorCode::precondition_failed: return "PreconditionFailed";
    case ErrorCode::out_of_proven_range: return "OutOfProvenRange";
    case ErrorCode::not_a_tree: return "NotATree";
    case ErrorCode::length_mismatch: return "LengthMismatch";
    case ErrorCode::parse_error: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
{
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

} // namespace mdim
