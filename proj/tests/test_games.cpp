#include "mdim/distance.hpp"
#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "mdim/resolver.hpp"
#include "test_support.hpp"

#include <random>

using namespace mdim;

namespace {

std::vector<CodeVector> binary(std::initializer_list<const char*> words)
{
    std::vector<CodeVector> out;
    for (const char* w : words)
        out.push_back(from_binary_string(w));
    return out;
}

VertexSet as_vertices(const std::vector<CodeVector>& qs, int k)
{
    std::vector<Vertex> members;
    for (const auto& q : qs)
        members.push_back(static_cast<Vertex>(hamming_index(q, k)));
    return VertexSet(std::move(members));
}

} // namespace

TEST_CASE("agreement counts")
{
    CHECK(agree_count({1, 2, 3, 4}, {1, 3, 3, 5}) == 2);
    CHECK(agree_count({2, 2, 1}, {2, 2, 1}) == 3);
    CHECK_ERROR_CODE(agree_count({1, 2}, {1, 2, 3}), ErrorCode::length_mismatch);
    CHECK(answer_questions({1, 2}, {{1, 1}, {2, 2}}) == std::vector<int>{1, 1});
}

TEST_CASE("static question sets")
{
    CHECK(static_questions_verify(5, 2, binary({"00000", "00011", "00101", "01001"})));
    CHECK(static_questions_verify(1, 2, {{1}}));
    for (std::int64_t a = 0; a < 9; ++a)
        for (std::int64_t b = a + 1; b < 9; ++b)
            CHECK_FALSE(static_questions_verify(2, 3, {hamming_word(a, 2, 3), hamming_word(b, 2, 3)}));
    CHECK_ERROR_CODE(static_questions_verify(24, 2, {}), ErrorCode::too_large);
    CHECK_ERROR_CODE(static_questions_verify(2, 3, {{1, 4}}), ErrorCode::invalid_params);
    CHECK_ERROR_CODE(static_questions_verify(2, 3, {{1}}), ErrorCode::length_mismatch);
}

TEST_CASE("question sets verify exactly when they resolve the Hamming graph")
{
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 8; ++n)
        for (int k = 2; k <= 8; ++k) {
            std::int64_t size = 1;
            for (int i = 0; i < n; ++i)
                size *= k;
            if (size > 600)
                continue;
            Graph h = hamming_graph(n, k);
            auto dm = all_pairs_distances(h);
            for (int trial = 0; trial < 8; ++trial) {
                std::vector<CodeVector> qs(1 + rng() % static_cast<std::uint64_t>(n * (k - 1) + 1), CodeVector(n));
                for (auto& q : qs)
                    for (auto& e : q)
                        e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
                CHECK(static_questions_verify(n, k, qs) == resolves(h, dm, as_vertices(qs, k)));
            }
        }
}

TEST_CASE("secret inference")
{
    auto qs = binary({"00000", "00011", "00101", "01001"});
    CodeVector secret = from_binary_string("10110");
    auto inferred = infer_secret(5, 2, qs, answer_questions(secret, qs));
    CHECK(inferred.status == Inference::Status::unique);
    CHECK(to_binary_string(inferred.witnesses.at(0)) == "10110");

    auto single = infer_secret(2, 3, {{1, 1}}, {2});
    CHECK(single.status == Inference::Status::unique);
    CHECK(single.witnesses.at(0) == CodeVector{1, 1});

    auto ambiguous = infer_secret(2, 3, {{1, 1}}, {1});
    CHECK(ambiguous.status == Inference::Status::ambiguous);
    CHECK(ambiguous.witnesses.size() == 2);
    CHECK(ambiguous.witnesses[0] == CodeVector{1, 2});
    CHECK(ambiguous.witnesses[1] == CodeVector{1, 3});

    CHECK(infer_secret(2, 3, {{1, 1}}, {3}).status == Inference::Status::inconsistent);
    CHECK(infer_secret(5, 2, qs, {0, 0, 0, 0}).status == Inference::Status::inconsistent);
    CHECK_ERROR_CODE(infer_secret(2, 3, {{1, 1}}, {1, 2}), ErrorCode::length_mismatch);
}

TEST_CASE("inference round-trips random secrets")
{
    std::mt19937_64 rng(31);
    auto qs = binary({"00000", "00011", "00101", "01001"});
    for (int trial = 0; trial < 100; ++trial) {
        CodeVector secret = hamming_word(static_cast<std::int64_t>(rng() % 32), 5, 2);
        auto inferred = infer_secret(5, 2, qs, answer_questions(secret, qs));
        REQUIRE(inferred.status == Inference::Status::unique);
        CHECK(inferred.witnesses[0] == secret);
    }
}

TEST_CASE("weighing schemes")
{
    CHECK(weighing_scheme_verify({2, {{0}, {1}}}));
    CHECK_FALSE(weighing_scheme_verify({2, {{0, 1}}}));
    CHECK(weighing_scheme_verify({3, {{0}, {1}, {2}}}));
    CHECK_ERROR_CODE(weighing_scheme_verify({25, {{0}}}), ErrorCode::too_large);
    CHECK_ERROR_CODE(weighing_scheme_verify({3, {}}), ErrorCode::invalid_params);
    CHECK_ERROR_CODE(weighing_scheme_verify({3, {{3}}}), ErrorCode::invalid_params);
}

TEST_CASE("minimum weighings")
{
    auto one = min_weighings(1);
    CHECK(one.value == 1);
    CHECK(one.kind == InvariantKind::weighings);
    // n = 2: every single weighing was checked and rejected before two succeeded.
    CHECK(min_weighings(2).value == 2);
    for (int n = 1; n <= 5; ++n) {
        auto r = min_weighings(n);
        REQUIRE(r.exact());
        const int b = n == 1 ? 1 : metric_dimension(hypercube(n), all_pairs_distances(hypercube(n))).value;
        CHECK(std::abs(r.value - b) <= 1);
        std::vector<std::vector<int>> weighings;
        for (Vertex mask : r.certificate) {
            std::vector<int> coins;
            for (int c = 0; c < n; ++c)
                if (mask >> c & 1)
                    coins.push_back(c);
            weighings.push_back(coins);
        }
        CHECK(weighing_scheme_verify({n, weighings}));
    }
    CHECK_ERROR_CODE(min_weighings(7), ErrorCode::too_large);
}

TEST_CASE("text formats")
{
    auto qs = parse_questions("# Q5 set\n00000\n00011\n1 1 2 1 2\n", 5, 2);
    REQUIRE(qs.size() == 3);
    CHECK(to_binary_string(qs[1]) == "00011");
    CHECK(qs[2] == CodeVector{1, 1, 2, 1, 2});
    CHECK(parse_questions("1 3\n2 2\n", 2, 3).size() == 2);
    CHECK_ERROR_CODE(parse_questions("1 4\n", 2, 3), ErrorCode::parse_error);
    CHECK_ERROR_CODE(parse_questions("1 2 3\n", 2, 3), ErrorCode::parse_error);
    CHECK_ERROR_CODE(parse_questions("1 x\n", 2, 3), ErrorCode::parse_error);

    CHECK(parse_answers("3\n\n1\n") == std::vector<int>{3, 1});
    CHECK_ERROR_CODE(parse_answers("3 4\n"), ErrorCode::parse_error);

    auto scheme = parse_weighing_scheme("0 1\n2\n", 3);
    CHECK(scheme.weighings == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK_ERROR_CODE(parse_weighing_scheme("0 5\n", 3), ErrorCode::parse_error);
    CHECK_ERROR_CODE(parse_weighing_scheme("", 3), ErrorCode::parse_error);

    CHECK(format_code({2, 1, 2}, 2) == "101");
    CHECK(format_code({3, 1}, 4) == "3 1");
    CHECK_ERROR_CODE(from_binary_string("012"), ErrorCode::parse_error);
}
