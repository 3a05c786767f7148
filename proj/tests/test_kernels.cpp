// OpenMP kernels against their serial references, across team sizes.
#include "mdim/distance.hpp"
#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "mdim/pair_cover.hpp"
#include "mdim/reference.hpp"
#include "mdim/resolver.hpp"
#include "test_support.hpp"

#include <random>

using namespace mdim;

namespace {

std::vector<Graph> sample_graphs()
{
    std::mt19937_64 rng(99);
    std::vector<Graph> out{hypercube(6), hamming_graph(3, 4), comb_graph(7), petersen_graph(), Graph{},
                           cartesian_product(cycle_graph(6), complete_graph(5)).graph};
    for (int i = 0; i < 12; ++i)
        out.push_back(random_connected_graph(2 + static_cast<int>(rng() % 70), 0.08, rng()));
    return out;
}

VertexSet random_subset(std::mt19937_64& rng, Vertex n, int size)
{
    std::vector<Vertex> members;
    for (int i = 0; i < size; ++i)
        members.push_back(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)));
    return VertexSet(std::move(members));
}

} // namespace

TEST_CASE("all_pairs_distances matches the serial BFS")
{
    for (const auto& g : sample_graphs()) {
        auto expected = reference::all_pairs_distances(g);
        for_thread_counts([&](int threads) {
            CAPTURE(threads);
            CHECK(all_pairs_distances(g) == expected);
        });
    }
}

TEST_CASE("resolves and doubly_resolves match the serial checks")
{
    std::mt19937_64 rng(7);
    for (const auto& g : sample_graphs()) {
        auto dm = all_pairs_distances(g);
        for (int trial = 0; trial < 20; ++trial) {
            auto s = random_subset(rng, g.order(), 1 + static_cast<int>(rng() % 8));
            const bool r = reference::resolves(dm, s);
            const bool d = s.size() >= 2 ? reference::doubly_resolves(dm, s) : false;
            for_thread_counts([&](int threads) {
                CAPTURE(threads);
                CHECK(resolves(g, dm, s) == r);
                CHECK(unresolved_pairs(g, dm, s).empty() == r);
                if (s.size() >= 2)
                    CHECK(doubly_resolves(g, dm, s) == d);
            });
        }
    }
}

TEST_CASE("pair cover table matches the serial rows")
{
    for (const auto& g : sample_graphs()) {
        if (g.order() > 80)
            continue;
        auto dm = all_pairs_distances(g);
        auto expected = reference::pair_cover_rows(dm);
        for_thread_counts([&](int threads) {
            CAPTURE(threads);
            CHECK(PairCoverTable::resolving(dm).raw() == expected);
        });
    }
}

TEST_CASE("doubly table agrees with the pairwise definition")
{
    auto dm = all_pairs_distances(petersen_graph());
    const Vertex n = dm.order();
    for (Vertex anchor : {0, 4}) {
        auto table = PairCoverTable::doubly(dm, anchor);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w = v + 1; w < n; ++w)
                for (Vertex x = 0; x < n; ++x)
                    CHECK(table.covers(pair_index(v, w, n), x) ==
                          (dm(v, x) - dm(w, x) != dm(v, anchor) - dm(w, anchor)));
    }
}

TEST_CASE("static question verification matches the serial enumeration")
{
    std::mt19937_64 rng(3);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 3}, {5, 2}, {2, 6}, {4, 3}}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<CodeVector> qs(1 + rng() % 6, CodeVector(n));
            for (auto& q : qs)
                for (auto& e : q)
                    e = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(k));
            const bool expected = reference::static_questions_injective(n, k, qs);
            for_thread_counts([&](int) { CHECK(static_questions_verify(n, k, qs) == expected); });
        }
    }
}

TEST_CASE("weighing verification matches the serial enumeration")
{
    std::mt19937_64 rng(4);
    for (int coins = 1; coins <= 10; ++coins)
        for (int trial = 0; trial < 10; ++trial) {
            WeighingScheme scheme{coins, {}};
            for (int w = 0, count = 1 + static_cast<int>(rng() % coins); w < count; ++w) {
                std::vector<int> subset;
                for (int c = 0; c < coins; ++c)
                    if (rng() % 2)
                        subset.push_back(c);
                scheme.weighings.push_back(subset);
            }
            const bool expected = reference::weighing_injective(coins, scheme.weighings);
            for_thread_counts([&](int) { CHECK(weighing_scheme_verify(scheme) == expected); });
        }
}

TEST_CASE("solver output does not depend on the team size")
{
    std::vector<Graph> graphs{hypercube(5), cartesian_product(complete_graph(5), complete_graph(4)).graph,
                              gnk_graph(2, 2), random_connected_graph(11, 0.3, 8)};
    for (const auto& g : graphs) {
        auto dm = all_pairs_distances(g);
        omp_set_num_threads(1);
        const std::string beta = to_json(metric_dimension(g, dm));
        const std::string psi = to_json(min_doubly_resolving(g, dm));
        auto strip = [](std::string s) { return s.substr(0, s.find("\"nodes_explored\"")); };
        for_thread_counts([&](int threads) {
            CAPTURE(threads);
            CHECK(strip(to_json(metric_dimension(g, dm))) == strip(beta));
            CHECK(strip(to_json(min_doubly_resolving(g, dm))) == strip(psi));
        });
    }
}
