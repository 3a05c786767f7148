#pragma once

// Verification batteries behind `mdim verify`. Each suite runs a family of
// instances, compares solver or checker output against a closed form or an
// invariant, and records one line per instance.

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus status);

struct SuiteLine {
    std::string family;
    std::string params;
    std::string expected;
    std::string actual;
    CheckStatus status = CheckStatus::pass;
    std::chrono::milliseconds elapsed{0};
};

struct SuiteOptions {
    /// Largest instance parameter; 0 selects the suite default.
    int max_size = 0;
    std::uint64_t seed = 1;
    /// Solver budget per instance; 0 selects the suite default.
    std::chrono::milliseconds budget{0};
};

struct SuiteReport {
    std::string suite;
    int max_size = 0;
    std::uint64_t seed = 0;
    std::vector<SuiteLine> lines;
    std::chrono::milliseconds elapsed{0};

    std::size_t count(CheckStatus status) const;
    bool ok() const { return count(CheckStatus::fail) == 0; }
};

const std::vector<std::string_view>& suite_names();

/// Throws Error{invalid_params} for an unknown suite.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

/// `family params expected actual status`, one line per instance.
void write_report_text(std::ostream& out, const SuiteReport& report);
/// Per-instance lines plus {"pass","fail","skipped"} counts.
std::string report_json(const SuiteReport& report);

} // namespace mdim
