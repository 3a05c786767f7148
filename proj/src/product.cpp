#include "mdim/product.hpp"

#include "mdim/error.hpp"

#include <cstdint>

namespace mdim {

std::string to_string(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first)
            out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

Product cartesian_product(const Graph& g, const Graph& h, Vertex vertex_limit)
{
    const std::int64_t total = static_cast<std::int64_t>(g.order()) * h.order();
    if (total > vertex_limit)
        fail(ErrorCode::size_overflow, "product has " + std::to_string(total) + " vertices, limit is " +
                                           std::to_string(vertex_limit));
    ProductLabeling labeling{g.order(), h.order()};
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.order()) * h.size() + static_cast<std::size_t>(h.order()) * g.size());
    for (Vertex a = 0; a < g.order(); ++a)
        for (auto [v, w] : h.edges())
            edges.emplace_back(labeling.index(a, v), labeling.index(a, w));
    for (auto [a, b] : g.edges())
        for (Vertex v = 0; v < h.order(); ++v)
            edges.emplace_back(labeling.index(a, v), labeling.index(b, v));

    std::vector<std::string> labels(static_cast<std::size_t>(total));
    for (Vertex x = 0; x < labeling.order(); ++x) {
        auto [a, v] = labeling.coords(x);
        labels[x] = std::to_string(a) + ":" + std::to_string(v);
    }
    return {build_graph(labeling.order(), edges, std::move(labels)), labeling};
}

VertexSet project(const VertexSet& s, const ProductLabeling& labeling, Side side)
{
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex x : s) {
        auto [a, v] = labeling.coords(x);
        out.push_back(side == Side::g ? a : v);
    }
    return VertexSet(std::move(out));
}

VertexSet product_set(const VertexSet& a_set, const VertexSet& v_set, const ProductLabeling& labeling)
{
    std::vector<Vertex> out;
    for (Vertex a : a_set)
        for (Vertex v : v_set)
            out.push_back(labeling.index(a, v));
    return VertexSet(std::move(out));
}

} // namespace mdim
