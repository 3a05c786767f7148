#pragma once

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

#include <utility>

namespace mdim {

/// Index convention for G □ H: vertex (a, v) is stored at a * nH + v and
/// labelled "a:v". Columns fix a, rows fix v.
struct ProductLabeling {
    Vertex g_order = 1;
    Vertex h_order = 1;

    Vertex index(Vertex a, Vertex v) const noexcept { return a * h_order + v; }
    std::pair<Vertex, Vertex> coords(Vertex x) const noexcept { return {x / h_order, x % h_order}; }
    Vertex order() const noexcept { return g_order * h_order; }
};

enum class Side { g, h };

struct Product {
    Graph graph;
    ProductLabeling labeling;
};

inline constexpr Vertex default_vertex_limit = 100000;

/// Throws Error{size_overflow} when nG * nH exceeds vertex_limit.
Product cartesian_product(const Graph& g, const Graph& h, Vertex vertex_limit = default_vertex_limit);

/// Sorted, deduplicated set of factor coordinates of the members of s.
VertexSet project(const VertexSet& s, const ProductLabeling& labeling, Side side);

/// {(a, v) : a in a_set, v in v_set} as product indices.
VertexSet product_set(const VertexSet& a_set, const VertexSet& v_set, const ProductLabeling& labeling);

} // namespace mdim
