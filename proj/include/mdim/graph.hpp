#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple connected undirected graph on vertices 0..order()-1.
///
/// Adjacency is stored in compressed sparse row form with every neighbour
/// list sorted ascending. Optional per-vertex labels carry the product
/// coordinates or Hamming vectors of generated graphs.
class Graph {
public:
    /// Builds K_1.
    Graph();

    Vertex order() const noexcept { return static_cast<Vertex>(offsets_.size() - 1); }
    std::size_t size() const noexcept { return adjacency_.size() / 2; }

    std::span<const Vertex> neighbors(Vertex v) const noexcept
    {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    Vertex degree(Vertex v) const noexcept
    {
        return static_cast<Vertex>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(Vertex u, Vertex v) const noexcept;

    /// Edges as (u, v) with u < v, ascending by u then v.
    std::vector<Edge> edges() const;

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::string& label(Vertex v) const { return labels_.at(v); }

    bool operator==(const Graph& other) const = default;

private:
    friend Graph build_graph(Vertex, std::span<const Edge>, std::vector<std::string>);

    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adjacency_;
    std::vector<std::string> labels_;
};

/// Validates and deduplicates the edge list, then checks connectivity.
///
/// Throws Error{invalid_edge} for self-loops or out-of-range endpoints,
/// Error{disconnected_graph} when BFS from vertex 0 misses a vertex, and
/// Error{invalid_params} when n < 1 or the label count is not 0 or n.
Graph build_graph(Vertex n, std::span<const Edge> edges, std::vector<std::string> labels = {});

inline Graph build_graph(Vertex n, std::initializer_list<Edge> edges)
{
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph with_labels(const Graph& g, std::vector<std::string> labels);

bool is_tree(const Graph& g);
bool is_path(const Graph& g);
std::vector<Vertex> leaves(const Graph& g);
std::vector<Vertex> degree_sequence(const Graph& g);

} // namespace mdim
