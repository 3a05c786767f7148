#include "mdim/graph.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <queue>

namespace mdim {

Graph::Graph() : offsets_{0, 0} {}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept
{
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(size());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Graph build_graph(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels)
{
    if (n < 1)
        fail(ErrorCode::invalid_params, "graph needs at least one vertex");
    if (!labels.empty() && static_cast<Vertex>(labels.size()) != n)
        fail(ErrorCode::invalid_params, "label count must equal vertex count");

    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            fail(ErrorCode::invalid_edge,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v)
            fail(ErrorCode::invalid_edge, "self-loop at " + std::to_string(u));
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : arcs)
        ++g.offsets_[u + 1];
    for (Vertex v = 0; v < n; ++v)
        g.offsets_[v + 1] += g.offsets_[v];
    g.adjacency_.reserve(arcs.size());
    for (auto [u, v] : arcs)
        g.adjacency_.push_back(v);
    g.labels_ = std::move(labels);

    std::vector<char> seen(n, 0);
    std::queue<Vertex> queue;
    seen[0] = 1;
    queue.push(0);
    Vertex reached = 1;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop();
        for (Vertex v : g.neighbors(u))
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                queue.push(v);
            }
    }
    if (reached != n)
        fail(ErrorCode::disconnected_graph,
             "only " + std::to_string(reached) + " of " + std::to_string(n) + " vertices reachable from 0");
    return g;
}

Graph with_labels(const Graph& g, std::vector<std::string> labels)
{
    auto e = g.edges();
    return build_graph(g.order(), e, std::move(labels));
}

bool is_tree(const Graph& g) { return g.size() + 1 == static_cast<std::size_t>(g.order()); }

bool is_path(const Graph& g)
{
    if (!is_tree(g))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2)
            return false;
    return true;
}

std::vector<Vertex> leaves(const Graph& g)
{
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 1)
            out.push_back(v);
    return out;
}

std::vector<Vertex> degree_sequence(const Graph& g)
{
    std::vector<Vertex> seq(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        seq[v] = g.degree(v);
    std::sort(seq.begin(), seq.end());
    return seq;
}


} // namespace mdim
