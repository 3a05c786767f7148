#include "mdim/games.hpp"

#include "cover_search.hpp"
#include "mdim/error.hpp"
#include "mdim/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <limits>
#include <sstream>

namespace mdim {

namespace {

std::int64_t secret_count(int n, int k)
{
    if (n < 1 || k < 1)
        fail(ErrorCode::invalid_params, "need n >= 1 and k >= 1");
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) {
        total *= k;
        if (total > max_secrets)
            fail(ErrorCode::too_large, std::to_string(k) + "^" + std::to_string(n) + " secrets exceed the cap of " +
                                           std::to_string(max_secrets));
    }
    return total;
}

void check_code(const CodeVector& v, int n, int k, const char* what)
{
    if (static_cast<int>(v.size()) != n)
        fail(ErrorCode::length_mismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                             ", expected " + std::to_string(n));
    for (int e : v)
        if (e < 1 || e > k)
            fail(ErrorCode::invalid_params, std::string(what) + " entry " + std::to_string(e) + " outside 1.." +
                                                std::to_string(k));
}

// Secret digits in base k, first coordinate most significant; matches the
// Hamming-graph vertex order.
void decode(std::int64_t index, int k, std::vector<int>& digits)
{
    for (auto i = digits.size(); i-- > 0;) {
        digits[i] = static_cast<int>(index % k) + 1;
        index /= k;
    }
}

void answers_into(const std::vector<int>& secret, const std::vector<CodeVector>& questions, std::vector<int>& out)
{
    out.resize(questions.size());
    for (std::size_t q = 0; q < questions.size(); ++q) {
        int a = 0;
        for (std::size_t i = 0; i < secret.size(); ++i)
            a += secret[i] == questions[q][i];
        out[q] = a;
    }
}

std::uint64_t fnv(const std::vector<int>& values)
{
    std::uint64_t h = 1469598103934665603ull;
    for (int v : values) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<int> answers_of(std::int64_t secret, int n, int k, const std::vector<CodeVector>& questions)
{
    std::vector<int> digits(n), out;
    decode(secret, k, digits);
    answers_into(digits, questions, out);
    return out;
}

} // namespace

int agree_count(const CodeVector& s, const CodeVector& t)
{
    if (s.size() != t.size())
        fail(ErrorCode::length_mismatch, "vectors of length " + std::to_string(s.size()) + " and " +
                                             std::to_string(t.size()));
    int a = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
        a += s[i] == t[i];
    return a;
}

std::vector<int> answer_questions(const CodeVector& secret, const std::vector<CodeVector>& questions)
{
    std::vector<int> out;
    out.reserve(questions.size());
    for (const auto& t : questions)
        out.push_back(agree_count(secret, t));
    return out;
}

bool static_questions_verify(int n, int k, const std::vector<CodeVector>& questions)
{
    const std::int64_t total = secret_count(n, k);
    for (const auto& t : questions)
        check_code(t, n, k, "question");
    if (total == 1)
        return true;

    std::vector<std::pair<std::uint64_t, std::int64_t>> keys(static_cast<std::size_t>(total));
#pragma omp parallel
    {
        std::vector<int> digits(n), answers;
#pragma omp for schedule(static)
        for (std::int64_t s = 0; s < total; ++s) {
            decode(s, k, digits);
            answers_into(digits, questions, answers);
            keys[static_cast<std::size_t>(s)] = {fnv(answers), s};
        }
    }
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < keys.size(); ++i)
        if (keys[i].first == keys[i - 1].first &&
            answers_of(keys[i].second, n, k, questions) == answers_of(keys[i - 1].second, n, k, questions))
            return false;
    return true;
}

std::string_view to_string(Inference::Status status)
{
    switch (status) {
    case Inference::Status::unique: return "unique";
    case Inference::Status::ambiguous: return "ambiguous";
    case Inference::Status::inconsistent: return "inconsistent";
    }
    return "unknown";
}

Inference infer_secret(int n, int k, const std::vector<CodeVector>& questions, const std::vector<int>& answers)
{
    const std::int64_t total = secret_count(n, k);
    for (const auto& t : questions)
        check_code(t, n, k, "question");
    if (answers.size() != questions.size())
        fail(ErrorCode::length_mismatch, std::to_string(answers.size()) + " answers for " +
                                             std::to_string(questions.size()) + " questions");
    Inference out;
    for (int a : answers)
        if (a < 0 || a > n)
            return out;

    // The two smallest consistent secrets, found per thread and merged.
    constexpr std::int64_t none = std::numeric_limits<std::int64_t>::max();
    std::int64_t first = none, second = none;
#pragma omp parallel
    {
        std::int64_t a = none, b = none;
        std::vector<int> digits(n), got;
#pragma omp for schedule(static) nowait
        for (std::int64_t s = 0; s < total; ++s) {
            if (b != none)
                continue;
            decode(s, k, digits);
            answers_into(digits, questions, got);
            if (got == answers)
                (a == none ? a : b) = s;
        }
#pragma omp critical
        {
            for (std::int64_t c : {a, b}) {
                if (c < first) {
                    second = first;
                    first = c;
                } else if (c < second && c != first) {
                    second = c;
                }
            }
        }
    }
    if (first == none)
        return out;
    out.witnesses.push_back(hamming_word(first, n, k));
    if (second == none) {
        out.status = Inference::Status::unique;
    } else {
        out.status = Inference::Status::ambiguous;
        out.witnesses.push_back(hamming_word(second, n, k));
    }
    return out;
}

bool weighing_scheme_verify(const WeighingScheme& scheme)
{
    const int n = scheme.coins;
    if (n < 1)
        fail(ErrorCode::invalid_params, "scheme needs at least one coin");
    if (n > max_weighing_coins)
        fail(ErrorCode::too_large, std::to_string(n) + " coins exceed the cap of " +
                                       std::to_string(max_weighing_coins));
    if (scheme.weighings.empty())
        fail(ErrorCode::invalid_params, "scheme has no weighings");
    std::vector<std::uint32_t> masks;
    for (const auto& w : scheme.weighings) {
        std::uint32_t m = 0;
        for (int coin : w) {
            if (coin < 0 || coin >= n)
                fail(ErrorCode::invalid_params, "coin " + std::to_string(coin) + " outside 0.." +
                                                    std::to_string(n - 1));
            m |= std::uint32_t{1} << coin;
        }
        masks.push_back(m);
    }

    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::uint64_t> keys(total);
#pragma omp parallel for schedule(static)
    for (std::int64_t h = 0; h < static_cast<std::int64_t>(total); ++h) {
        std::uint64_t key = 1469598103934665603ull;
        for (std::uint32_t m : masks) {
            key ^= static_cast<std::uint64_t>(std::popcount(static_cast<std::uint32_t>(h) & m));
            key *= 1099511628211ull;
        }
        keys[static_cast<std::size_t>(h)] = key;
    }
    std::vector<std::uint32_t> order(total);
    for (std::uint32_t i = 0; i < total; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return keys[a] < keys[b] || (keys[a] == keys[b] && a < b); });
    auto same_counts = [&](std::uint32_t a, std::uint32_t b) {
        for (std::uint32_t m : masks)
            if (std::popcount(a & m) != std::popcount(b & m))
                return false;
        return true;
    };
    for (std::size_t i = 1; i < order.size(); ++i)
        if (keys[order[i]] == keys[order[i - 1]] && same_counts(order[i], order[i - 1]))
            return false;
    return true;
}

namespace {

// Families of strictly increasing nonempty masks, tested for injectivity
// once complete. Counts are packed in base n+1.
class WeighingSearch {
public:
    WeighingSearch(int n, detail::Budget& budget) : n_(n), budget_(budget) {}

    bool exists(int w)
    {
        masks_.assign(w, 0);
        int code_space = 1;
        for (int i = 0; i < w; ++i)
            code_space *= n_ + 1;
        stamp_.assign(code_space, 0);
        epoch_ = 0;
        return extend(0, 1);
    }

    const std::vector<std::uint32_t>& masks() const { return masks_; }

private:
    bool extend(std::size_t depth, std::uint32_t from)
    {
        const std::uint32_t full = (std::uint32_t{1} << n_) - 1;
        if (depth == masks_.size())
            return injective();
        for (std::uint32_t m = from; m <= full; ++m) {
            if (budget_.tick())
                return false;
            masks_[depth] = m;
            if (extend(depth + 1, m + 1))
                return true;
        }
        return false;
    }

    bool injective()
    {
        if (++epoch_ == 0) {
            std::fill(stamp_.begin(), stamp_.end(), 0);
            epoch_ = 1;
        }
        for (std::uint32_t h = 0; h < (std::uint32_t{1} << n_); ++h) {
            int code = 0;
            for (std::uint32_t m : masks_)
                code = code * (n_ + 1) + std::popcount(h & m);
            if (stamp_[code] == epoch_)
                return false;
            stamp_[code] = epoch_;
        }
        return true;
    }

    int n_;
    detail::Budget& budget_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::uint32_t> stamp_;
    std::uint32_t epoch_ = 0;
};

} // namespace

SolverResult min_weighings(int n, std::chrono::milliseconds budget)
{
    if (n < 1)
        fail(ErrorCode::invalid_params, "need at least one coin");
    if (n > 6)
        fail(ErrorCode::too_large, "min_weighings supports at most 6 coins");
    detail::Budget clock(budget, 0);
    SolverResult result;
    result.kind = InvariantKind::weighings;
    result.upper = n;

    // w weighings give at most (n+1)^w outcomes.
    int w = 1;
    for (std::uint64_t outcomes = n + 1; outcomes < (std::uint64_t{1} << n); outcomes *= n + 1)
        ++w;
    result.lower = w;

    WeighingSearch search(n, clock);
    for (; w <= n; ++w) {
        if (search.exists(w)) {
            std::vector<Vertex> cert(search.masks().begin(), search.masks().end());
            result.status = ResultStatus::exact;
            result.value = result.lower = result.upper = w;
            result.certificate = VertexSet(std::move(cert));
            break;
        }
        if (clock.expired()) {
            result.status = ResultStatus::bounds;
            std::vector<Vertex> singletons;
            for (int c = 0; c < n; ++c)
                singletons.push_back(Vertex{1} << c);
            result.certificate = VertexSet(std::move(singletons));
            break;
        }
        result.lower = w + 1;
    }
    result.nodes_explored = clock.nodes();
    result.elapsed = clock.elapsed();
    return result;
}

CodeVector from_binary_string(std::string_view bits)
{
    CodeVector out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1')
            fail(ErrorCode::parse_error, "binary word contains '" + std::string(1, c) + "'");
        out.push_back(c == '0' ? 1 : 2);
    }
    return out;
}

std::string to_binary_string(const CodeVector& v)
{
    std::string out;
    for (int e : v) {
        if (e != 1 && e != 2)
            fail(ErrorCode::invalid_params, "entry " + std::to_string(e) + " is not binary");
        out.push_back(e == 1 ? '0' : '1');
    }
    return out;
}

namespace {

std::vector<std::string> content_lines(std::string_view text)
{
    std::vector<std::string> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<int> parse_ints(const std::string& line, std::size_t line_no)
{
    std::vector<int> out;
    std::istringstream in(line);
    std::string token;
    while (in >> token) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            fail(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": bad integer '" + token + "'");
        out.push_back(value);
    }
    return out;
}

} // namespace

std::vector<CodeVector> parse_questions(std::string_view text, int n, int k)
{
    std::vector<CodeVector> out;
    std::size_t line_no = 0;
    for (const auto& line : content_lines(text)) {
        ++line_no;
        std::istringstream in(line);
        std::string first, rest;
        in >> first;
        CodeVector v;
        if (k == 2 && !(in >> rest) && static_cast<int>(first.size()) == n &&
            first.find_first_not_of("01") == std::string::npos && n > 1)
            v = from_binary_string(first);
        else
            v = parse_ints(line, line_no);
        if (static_cast<int>(v.size()) != n)
            fail(ErrorCode::parse_error, "question " + std::to_string(line_no) + " has " + std::to_string(v.size()) +
                                             " entries, expected " + std::to_string(n));
        for (int e : v)
            if (e < 1 || e > k)
                fail(ErrorCode::parse_error, "question " + std::to_string(line_no) + " entry " + std::to_string(e) +
                                                 " outside 1.." + std::to_string(k));
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<int> parse_answers(std::string_view text)
{
    std::vector<int> out;
    std::size_t line_no = 0;
    for (const auto& line : content_lines(text)) {
        auto values = parse_ints(line, ++line_no);
        if (values.size() != 1)
            fail(ErrorCode::parse_error, "answer line " + std::to_string(line_no) + " must hold one integer");
        out.push_back(values[0]);
    }
    return out;
}

WeighingScheme parse_weighing_scheme(std::string_view text, int coins)
{
    WeighingScheme scheme{coins, {}};
    std::size_t line_no = 0;
    for (const auto& line : content_lines(text)) {
        auto values = parse_ints(line, ++line_no);
        for (int c : values)
            if (c < 0 || c >= coins)
                fail(ErrorCode::parse_error, "weighing " + std::to_string(line_no) + ": coin " + std::to_string(c) +
                                                 " outside 0.." + std::to_string(coins - 1));
        scheme.weighings.push_back(std::move(values));
    }
    if (scheme.weighings.empty())
        fail(ErrorCode::parse_error, "weighing scheme is empty");
    return scheme;
}

std::string format_code(const CodeVector& v, int k)
{
    if (k == 2)
        return to_binary_string(v);
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace mdim
