#include "mdim/error.hpp"
#include "mdim/generators.hpp"
#include "mdim/resolver.hpp"

namespace mdim {

VertexSet construct_product_resolving(const Graph& g, const Graph& h, const VertexSet& basis_g, const VertexSet& drs_h)
{
    if (basis_g.empty() || !basis_g.fits(g.order()) || !resolves(g, all_pairs_distances(g), basis_g))
        fail(ErrorCode::precondition_failed, "basis " + to_string(basis_g) + " does not resolve G");
    if (drs_h.size() < 2 || !drs_h.fits(h.order()) || !doubly_resolves(h, all_pairs_distances(h), drs_h))
        fail(ErrorCode::precondition_failed, "set " + to_string(drs_h) + " does not doubly resolve H");

    ProductLabeling labeling{g.order(), h.order()};
    const Vertex s = basis_g.front();
    const Vertex t = drs_h.front();
    std::vector<Vertex> x;
    for (Vertex v : drs_h)
        x.push_back(labeling.index(s, v));
    for (Vertex a : basis_g)
        x.push_back(labeling.index(a, t));
    return VertexSet(std::move(x));
}

VertexSet construct_clique_product_resolving(int clique_order, const Graph& g, const VertexSet& basis_g)
{
    if (clique_order < 1)
        fail(ErrorCode::precondition_failed, "clique order must be at least 1");
    if (!basis_g.fits(g.order()) || !resolves(g, all_pairs_distances(g), basis_g))
        fail(ErrorCode::precondition_failed, "basis " + to_string(basis_g) + " does not resolve G");

    ProductLabeling labeling{clique_order, g.order()};
    const int basis_size = static_cast<int>(basis_g.size());
    std::vector<Vertex> t;
    if (clique_order == 1) {
        for (Vertex x : basis_g)
            t.push_back(labeling.index(0, x));
    } else if (basis_size == 0) {
        // G = K_1: the product is K_n itself.
        for (int a = 0; a + 1 < clique_order; ++a)
            t.push_back(labeling.index(a, 0));
    } else if (clique_order - 1 >= 2 * basis_size) {
        // Every clique vertex except r = n-1 gets one basis column, cycling
        // through the basis so each column receives at least two.
        for (int a = 0; a + 1 < clique_order; ++a)
            t.push_back(labeling.index(a, basis_g[static_cast<std::size_t>(a % basis_size)]));
    } else {
        // Two clique vertices per basis column; 2|S| >= n covers every clique vertex.
        for (int i = 0; i < basis_size; ++i) {
            t.push_back(labeling.index((2 * i) % clique_order, basis_g[i]));
            t.push_back(labeling.index((2 * i + 1) % clique_order, basis_g[i]));
        }
    }
    return VertexSet(std::move(t));
}

} // namespace mdim
