#include "mdim/distance.hpp"
#include "mdim/generators.hpp"
#include "mdim/product.hpp"
#include "mdim/resolver.hpp"
#include "test_support.hpp"

#include <random>

using namespace mdim;

namespace {

SolverResult beta(const Graph& g, SolverOptions o = {}) { return metric_dimension(g, all_pairs_distances(g), o); }
SolverResult psi(const Graph& g, SolverOptions o = {}) { return min_doubly_resolving(g, all_pairs_distances(g), o); }

void check_against_brute_force(const Graph& g)
{
    auto dm = all_pairs_distances(g);
    auto brute_beta = brute_force_invariant(g, dm, InvariantKind::beta);
    SolverOptions plain;
    plain.twin_reduction = false;
    for (const auto& options : {SolverOptions{}, plain}) {
        auto b = metric_dimension(g, dm, options);
        REQUIRE(b.exact());
        CHECK(b.value == brute_beta.value);
        CHECK(b.certificate == brute_beta.certificate);  // both lexicographically least
        CHECK(resolves(g, dm, b.certificate));
    }
    if (g.order() < 2)
        return;
    auto brute_psi = brute_force_invariant(g, dm, InvariantKind::psi);
    auto p = min_doubly_resolving(g, dm);
    REQUIRE(p.exact());
    CHECK(p.value == brute_psi.value);
    CHECK(p.certificate == brute_psi.certificate);
    CHECK(doubly_resolves(g, dm, p.certificate));
}

} // namespace

TEST_CASE("resolving set checks on small graphs")
{
    Graph c6 = cycle_graph(6);
    auto dm = all_pairs_distances(c6);
    CHECK(resolves(c6, dm, {0, 1}));
    CHECK_FALSE(resolves(c6, dm, {0, 3}));
    CHECK(unresolved_pairs(c6, dm, {0, 3}) == std::vector<Edge>{{1, 5}, {2, 4}});
    CHECK_FALSE(resolves(c6, dm, {0}));
    Graph k1;
    CHECK(resolves(k1, all_pairs_distances(k1), {}));
    CHECK_ERROR_CODE(doubly_resolves(c6, dm, {2}), ErrorCode::too_small);
}

TEST_CASE("doubly resolving implies resolving")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_connected_graph(3 + static_cast<int>(rng() % 9), 0.3, rng());
        auto dm = all_pairs_distances(g);
        for (int s = 0; s < 20; ++s) {
            std::vector<Vertex> members;
            for (Vertex v = 0; v < g.order(); ++v)
                if (rng() % 3 == 0)
                    members.push_back(v);
            if (members.size() < 2)
                continue;
            VertexSet set(std::move(members));
            if (doubly_resolves(g, dm, set))
                CHECK(resolves(g, dm, set));
        }
    }
}

TEST_CASE("known values")
{
    CHECK(beta(Graph{}).value == 0);
    CHECK(beta(Graph{}).certificate.empty());
    CHECK(beta(path_graph(7)).value == 1);
    CHECK(beta(cycle_graph(6)).value == 2);
    CHECK(beta(complete_graph(6)).value == 5);
    CHECK(beta(hypercube(5)).certificate == VertexSet{0, 3, 5, 9});
    CHECK(psi(complete_graph(5)).value == 4);
    CHECK(psi(complete_graph(2)).value == 2);
    CHECK(psi(cycle_graph(9)).value == 2);
    CHECK(psi(cycle_graph(8)).value == 3);
    CHECK_ERROR_CODE(psi(Graph{}), ErrorCode::too_small);
}

TEST_CASE("brute force oracle values")
{
    // Each value below was computed once by enumerating every subset.
    auto dm = all_pairs_distances(star_graph(3));
    CHECK(brute_force_invariant(star_graph(3), dm, InvariantKind::beta).value == 2);
    auto pdm = all_pairs_distances(petersen_graph());
    CHECK(brute_force_invariant(petersen_graph(), pdm, InvariantKind::beta).value == 3);
    auto c6 = all_pairs_distances(cycle_graph(6));
    CHECK(brute_force_invariant(cycle_graph(6), c6, InvariantKind::beta).value == 2);
    Graph k1;
    CHECK(brute_force_invariant(k1, all_pairs_distances(k1), InvariantKind::beta).value == 0);
    CHECK_ERROR_CODE(brute_force_invariant(path_graph(17), all_pairs_distances(path_graph(17)), InvariantKind::beta),
                     ErrorCode::too_large);
}

TEST_CASE("solver equals brute force on every connected graph up to 7 vertices")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : connected_graph_catalog(n))
            check_against_brute_force(g);
}

TEST_CASE("solver equals brute force on random graphs with 8 to 12 vertices")
{
    std::mt19937_64 rng(12345);
    static constexpr double densities[] = {0.1, 0.25, 0.45, 0.7, 0.9};
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected_graph(8 + static_cast<int>(rng() % 5), densities[rng() % 5], rng());
        CAPTURE(trial);
        check_against_brute_force(g);
    }
}

TEST_CASE("beta is at most psi, psi at most n - 1")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : connected_graph_catalog(n)) {
            auto b = beta(g), p = psi(g);
            CHECK(b.value <= p.value);
            CHECK(p.value <= n - 1);
            CHECK(p.value >= 2);
        }
}

TEST_CASE("budget exhaustion reports bounds with a valid certificate")
{
    Graph q = hypercube(7);
    auto dm = all_pairs_distances(q);
    SolverOptions o;
    o.node_limit = 50;
    o.descent_budget = std::chrono::milliseconds{0};
    auto r = metric_dimension(q, dm, o);
    CHECK(r.status == ResultStatus::bounds);
    CHECK(r.lower <= 6);
    CHECK(r.upper >= 6);
    CHECK(static_cast<int>(r.certificate.size()) == r.upper);
    CHECK(resolves(q, dm, r.certificate));
}

TEST_CASE("twin classes force members")
{
    auto dm = all_pairs_distances(star_graph(4));
    auto classes = twin_classes(dm);
    REQUIRE(classes.size() == 1);
    CHECK(classes[0] == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(twin_classes(all_pairs_distances(cycle_graph(5))).empty());
    CHECK(twin_classes(all_pairs_distances(complete_graph(4)))[0].size() == 4);
}

TEST_CASE("leaves are forced into doubly resolving sets")
{
    Graph b = comb_graph(5);
    auto forced = forced_doubly_resolving_vertices(all_pairs_distances(b));
    for (Vertex leaf : leaves(b))
        CHECK(forced.contains(leaf));
}

TEST_CASE("product construction from a basis and a doubly resolving set")
{
    Graph g = cycle_graph(5), h = path_graph(4);
    auto basis = beta(g).certificate;
    auto drs = psi(h).certificate;
    auto x = construct_product_resolving(g, h, basis, drs);
    CHECK(x.size() == basis.size() + drs.size() - 1);
    auto p = cartesian_product(g, h);
    CHECK(resolves(p.graph, all_pairs_distances(p.graph), x));

    CHECK_ERROR_CODE(construct_product_resolving(g, h, {0}, drs), ErrorCode::precondition_failed);
    CHECK_ERROR_CODE(construct_product_resolving(g, h, {}, drs), ErrorCode::precondition_failed);
    CHECK_ERROR_CODE(construct_product_resolving(g, h, basis, {0, 1}), ErrorCode::precondition_failed);
}

TEST_CASE("clique product construction")
{
    struct Case {
        int n;
        Graph g;
        std::size_t size;
        int beta;
    };
    for (const auto& c : {Case{7, cycle_graph(5), 6, 6}, Case{2, path_graph(3), 2, -1}, Case{3, path_graph(2), 2, 2}}) {
        auto basis = beta(c.g).certificate;
        auto t = construct_clique_product_resolving(c.n, c.g, basis);
        CHECK(t.size() == c.size);
        auto p = cartesian_product(complete_graph(c.n), c.g);
        auto dm = all_pairs_distances(p.graph);
        CHECK(resolves(p.graph, dm, t));
        if (c.beta > 0)
            CHECK(metric_dimension(p.graph, dm).value == c.beta);
    }
    CHECK(construct_clique_product_resolving(1, cycle_graph(5), {0, 1}) == VertexSet{0, 1});
    CHECK_ERROR_CODE(construct_clique_product_resolving(4, cycle_graph(5), {0}), ErrorCode::precondition_failed);
    CHECK_ERROR_CODE(construct_clique_product_resolving(0, cycle_graph(5), {0, 1}), ErrorCode::precondition_failed);
}

TEST_CASE("solver results round-trip through JSON")
{
    auto exact = beta(petersen_graph());
    auto text = to_json(exact);
    CHECK(text.rfind("{\"kind\":\"beta\",\"status\":\"exact\",\"value\":3,\"certificate\":", 0) == 0);
    auto back = solver_result_from_json(text);
    CHECK(back.value == exact.value);
    CHECK(back.certificate == exact.certificate);
    CHECK(to_json(back) == text);

    SolverResult bounds;
    bounds.kind = InvariantKind::psi;
    bounds.status = ResultStatus::bounds;
    bounds.lower = 3;
    bounds.upper = 5;
    bounds.certificate = VertexSet{1, 4, 6, 8, 9};
    auto btext = to_json(bounds);
    CHECK(btext.find("\"value\"") == std::string::npos);
    CHECK(btext.find("\"lower\":3,\"upper\":5") != std::string::npos);
    auto bback = solver_result_from_json(btext);
    CHECK(bback.status == ResultStatus::bounds);
    CHECK(bback.certificate == bounds.certificate);
    CHECK_ERROR_CODE(solver_result_from_json("{\"kind\":\"beta\"}"), ErrorCode::parse_error);
}

TEST_CASE("repeated runs give identical results")
{
    Graph g = cartesian_product(cycle_graph(4), cycle_graph(6)).graph;
    auto a = beta(g), b = beta(g);
    CHECK(a.certificate == b.certificate);
    CHECK(a.nodes_explored == b.nodes_explored);
}
