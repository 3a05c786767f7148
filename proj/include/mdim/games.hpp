#pragma once

#include "mdim/resolver.hpp"

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

/// Entries in 1..k.
using CodeVector = std::vector<int>;

inline constexpr std::int64_t max_secrets = 10'000'000;
inline constexpr int max_weighing_coins = 24;

/// Positions where s and t agree. Throws Error{length_mismatch}.
int agree_count(const CodeVector& s, const CodeVector& t);

/// True iff the answers a(secret, t), t in questions, determine every secret
/// in {1..k}^n. Throws Error{too_large} above max_secrets and
/// Error{invalid_params} for malformed questions.
bool static_questions_verify(int n, int k, const std::vector<CodeVector>& questions);

struct Inference {
    enum class Status { unique, ambiguous, inconsistent };
    Status status = Status::inconsistent;
    /// The secret when unique; two witnesses when ambiguous.
    std::vector<CodeVector> witnesses;
};

std::string_view to_string(Inference::Status status);

Inference infer_secret(int n, int k, const std::vector<CodeVector>& questions, const std::vector<int>& answers);

std::vector<int> answer_questions(const CodeVector& secret, const std::vector<CodeVector>& questions);

struct WeighingScheme {
    int coins = 0;
    std::vector<std::vector<int>> weighings;
};

/// True iff the heavy-coin counts of the weighings identify every
/// light/heavy assignment. Throws Error{too_large} above max_weighing_coins.
bool weighing_scheme_verify(const WeighingScheme& scheme);

/// Smallest detecting scheme for n <= 6 coins. The certificate lists the
/// weighings as coin bitmasks. Throws Error{too_large} for n > 6.
SolverResult min_weighings(int n, std::chrono::milliseconds budget = std::chrono::milliseconds{60'000});

/// Binary words map 0 -> 1 and 1 -> 2.
CodeVector from_binary_string(std::string_view bits);
std::string to_binary_string(const CodeVector& v);

// Files: one vector per line, entries space separated (or, for k = 2, a
// single 0/1 word). Answers: one integer per line. Weighing schemes: one
// weighing per line as space separated coin indices.
std::vector<CodeVector> parse_questions(std::string_view text, int n, int k);
std::vector<int> parse_answers(std::string_view text);
WeighingScheme parse_weighing_scheme(std::string_view text, int coins);
std::string format_code(const CodeVector& v, int k);

} // namespace mdim
