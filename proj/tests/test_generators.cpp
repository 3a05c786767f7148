#include "mdim/distance.hpp"
#include "mdim/games.hpp"
#include "mdim/generators.hpp"
#include "test_support.hpp"

#include <queue>

using namespace mdim;

namespace {

bool connected_without(const Graph& g, const std::vector<bool>& removed)
{
    Vertex start = 0;
    while (start < g.order() && removed[start])
        ++start;
    std::vector<bool> seen(g.order(), false);
    std::queue<Vertex> q;
    q.push(start);
    seen[start] = true;
    int reached = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (Vertex w : g.neighbors(v))
            if (!removed[w] && !seen[w]) {
                seen[w] = true;
                ++reached;
                q.push(w);
            }
    }
    int alive = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        alive += !removed[v];
    return reached == alive;
}

// True when no set of fewer than k vertices disconnects g.
bool is_k_connected(const Graph& g, int k)
{
    const Vertex n = g.order();
    std::vector<bool> removed(n, false);
    std::function<bool(Vertex, int)> rec = [&](Vertex from, int left) {
        if (!connected_without(g, removed))
            return false;
        if (left == 0)
            return true;
        for (Vertex v = from; v < n; ++v) {
            removed[v] = true;
            bool ok = rec(v + 1, left - 1);
            removed[v] = false;
            if (!ok)
                return false;
        }
        return true;
    };
    return rec(0, k - 1);
}

} // namespace

TEST_CASE("family sizes")
{
    CHECK(hypercube(5).order() == 32);
    CHECK(hypercube(5).size() == 80);
    CHECK(hamming_graph(3, 3).order() == 27);
    CHECK(hamming_graph(3, 3).size() == 27 * 6 / 2);
    CHECK(comb_graph(10).order() == 20);
    CHECK(comb_graph(10).size() == 19);
    CHECK(gnk_graph(2, 3).order() == 24);
    CHECK(grid_graph({3, 4}).order() == 12);
    CHECK(grid_graph({3, 4}).size() == 17);
    CHECK(petersen_graph().size() == 15);
    CHECK(complete_graph(6).size() == 15);
    CHECK(star_graph(3).order() == 4);
}

TEST_CASE("generate dispatches on the family")
{
    auto spec = [](Family family, int n, int k = 0) {
        FamilySpec s;
        s.family = family;
        s.n = n;
        s.k = k;
        return s;
    };
    CHECK(generate(spec(Family::hypercube, 4)) == hypercube(4));
    CHECK(generate(spec(Family::hamming, 2, 3)) == hamming_graph(2, 3));
    CHECK(generate(spec(Family::gnk, 2, 3)) == gnk_graph(2, 3));
    auto grid = spec(Family::grid, 0);
    grid.dims = {2, 3};
    CHECK(generate(grid) == grid_graph({2, 3}));
    CHECK(parse_family("tree") == Family::tree_random);
    CHECK_ERROR_CODE(parse_family("wheel"), ErrorCode::invalid_params);
}

TEST_CASE("hypercube vertex order and labels")
{
    Graph q = hypercube(5);
    auto dm = all_pairs_distances(q);
    const auto a = static_cast<Vertex>(hamming_index(from_binary_string("00000"), 2));
    const auto b = static_cast<Vertex>(hamming_index(from_binary_string("00011"), 2));
    CHECK(a == 0);
    CHECK(b == 3);
    CHECK(q.label(3) == "00011");
    // Distance between 00000 and 00011, computed once by BFS.
    CHECK(dm(a, b) == 2);
}

TEST_CASE("hamming distances are n minus agreements")
{
    Graph h = hamming_graph(3, 3);
    auto dm = all_pairs_distances(h);
    for (Vertex v = 0; v < h.order(); ++v)
        for (Vertex w = 0; w < h.order(); ++w)
            CHECK(dm(v, w) == 3 - agree_count(hamming_word(v, 3, 3), hamming_word(w, 3, 3)));
    CHECK(h.label(5) == "1,2,3");
}

TEST_CASE("hamming index and word are inverse")
{
    for (std::int64_t i = 0; i < 4 * 4 * 4; ++i)
        CHECK(hamming_index(hamming_word(i, 3, 4), 4) == i);
}

TEST_CASE("catalog counts match the number of isomorphism classes")
{
    const int connected[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n)
        CHECK(connected_graph_catalog(n).size() == static_cast<std::size_t>(connected[n]));
    const int trees[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) {
        auto catalog = tree_catalog(n);
        CHECK(catalog.size() == static_cast<std::size_t>(trees[n]));
        for (const auto& t : catalog)
            CHECK(is_tree(t));
    }
}

TEST_CASE("random generators are deterministic in the seed")
{
    CHECK(random_tree(12, 5) == random_tree(12, 5));
    CHECK(random_connected_graph(9, 0.4, 3) == random_connected_graph(9, 0.4, 3));
    CHECK(is_tree(random_tree(30, 77)));
    CHECK(random_tree(30, 77).order() == 30);
}

TEST_CASE("G_{n,k} has no vertex cut smaller than k")
{
    for (int k = 1; k <= 3; ++k) {
        Graph g = gnk_graph(2, k);
        CHECK(is_k_connected(g, k));
    }
    // The leaves of G_{n,1} = B_{2n} are cut off by single vertices.
    CHECK_FALSE(is_k_connected(gnk_graph(2, 1), 2));
}

TEST_CASE("G_{n,1} is the comb B_{2n} up to relabelling")
{
    Graph g = gnk_graph(2, 1);
    Graph b = comb_graph(4);
    CHECK(g.order() == b.order());
    CHECK(g.size() == b.size());
    auto ds = degree_sequence(g), db = degree_sequence(b);
    std::sort(ds.begin(), ds.end());
    std::sort(db.begin(), db.end());
    CHECK(ds == db);
}

TEST_CASE("generator parameter errors")
{
    CHECK_ERROR_CODE(cycle_graph(2), ErrorCode::invalid_params);
    CHECK_ERROR_CODE(hypercube(0), ErrorCode::invalid_params);
    CHECK_ERROR_CODE(comb_graph(0), ErrorCode::invalid_params);
}
