#include "mdim/distance.hpp"
#include "mdim/generators.hpp"
#include "mdim/product.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>

using namespace mdim;

namespace {

std::vector<int> distance_multiset(const DistanceMatrix& dm)
{
    std::vector<int> out;
    for (Vertex v = 0; v < dm.order(); ++v)
        for (auto d : dm.row(v))
            out.push_back(d);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> sorted_degrees(const Graph& g)
{
    auto d = degree_sequence(g);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("product distances are sums of factor distances")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int ng = 1 + static_cast<int>(rng() % 20);
        int nh = 1 + static_cast<int>(rng() % std::max(1, 400 / ng));
        Graph g = random_connected_graph(ng, 0.25, rng());
        Graph h = random_connected_graph(nh, 0.25, rng());
        auto p = cartesian_product(g, h);
        REQUIRE(p.graph.order() == ng * nh);
        CHECK(p.graph.size() == g.size() * nh + h.size() * ng);
        auto dg = all_pairs_distances(g), dh = all_pairs_distances(h), dp = all_pairs_distances(p.graph);
        for (Vertex x = 0; x < p.graph.order(); ++x)
            for (Vertex y = 0; y < p.graph.order(); ++y) {
                auto [a, v] = p.labeling.coords(x);
                auto [b, w] = p.labeling.coords(y);
                CHECK(dp(x, y) == dg(a, b) + dh(v, w));
            }
    }
}

TEST_CASE("product is associative up to relabelling")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Graph a = random_connected_graph(1 + static_cast<int>(rng() % 5), 0.4, rng());
        Graph b = random_connected_graph(1 + static_cast<int>(rng() % 5), 0.4, rng());
        Graph c = random_connected_graph(1 + static_cast<int>(rng() % 5), 0.4, rng());
        Graph left = cartesian_product(cartesian_product(a, b).graph, c).graph;
        Graph right = cartesian_product(a, cartesian_product(b, c).graph).graph;
        CHECK(sorted_degrees(left) == sorted_degrees(right));
        CHECK(distance_multiset(all_pairs_distances(left)) == distance_multiset(all_pairs_distances(right)));
    }
}

TEST_CASE("small products")
{
    auto pc = cartesian_product(path_graph(3), cycle_graph(5));
    CHECK(pc.graph.order() == 15);
    CHECK(pc.graph.label(7) == "1:2");

    auto c4 = cartesian_product(complete_graph(2), complete_graph(2)).graph;
    CHECK(c4.order() == 4);
    CHECK(sorted_degrees(c4) == std::vector<Vertex>{2, 2, 2, 2});
    CHECK(all_pairs_distances(c4).diameter() == 2);

    CHECK(cartesian_product(complete_graph(7), complete_graph(7)).graph.order() == 49);
    CHECK(cartesian_product(Graph{}, petersen_graph()).graph == with_labels(petersen_graph(), {
        "0:0", "0:1", "0:2", "0:3", "0:4", "0:5", "0:6", "0:7", "0:8", "0:9"}));
}

TEST_CASE("vertex limit")
{
    CHECK_ERROR_CODE(cartesian_product(path_graph(400), path_graph(300)), ErrorCode::size_overflow);
    CHECK_ERROR_CODE(cartesian_product(path_graph(5), path_graph(5), 24), ErrorCode::size_overflow);
    CHECK(cartesian_product(path_graph(5), path_graph(5), 25).graph.order() == 25);
}

TEST_CASE("projections and product sets")
{
    auto p = cartesian_product(path_graph(3), cycle_graph(4));
    VertexSet s{p.labeling.index(0, 1), p.labeling.index(2, 1), p.labeling.index(2, 3)};
    CHECK(project(s, p.labeling, Side::g) == VertexSet{0, 2});
    CHECK(project(s, p.labeling, Side::h) == VertexSet{1, 3});
    auto rect = product_set({0, 2}, {1, 3}, p.labeling);
    CHECK(rect.size() == 4);
    CHECK(rect.contains(p.labeling.index(2, 3)));
    CHECK(project(rect, p.labeling, Side::g) == VertexSet{0, 2});
}
