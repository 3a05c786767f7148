#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdim {

enum class ErrorCode {
    disconnected_graph,
    invalid_edge,
    invalid_params,
    size_overflow,
    too_small,
    too_large,
    precondition_failed,
    out_of_proven_range,
    not_a_tree,
    length_mismatch,
    parse_error,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so
// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

} // namespace mdim
