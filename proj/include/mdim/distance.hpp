#pragma once

#include "mdim/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mdim {

/// Dense all-pairs hop-count matrix, row-major.
class DistanceMatrix {
public:
    using value_type = std::uint16_t;

    /// Largest order accepted by all_pairs_distances.
    static constexpr Vertex max_order = 16384;

    DistanceMatrix() = default;
    DistanceMatrix(Vertex n, std::vector<value_type> data);

    Vertex order() const noexcept { return n_; }
    int operator()(Vertex v, Vertex w) const noexcept
    {
        return d_[static_cast<std::size_t>(v) * n_ + w];
    }
    std::span<const value_type> row(Vertex v) const noexcept
    {
        return {d_.data() + static_cast<std::size_t>(v) * n_, static_cast<std::size_t>(n_)};
    }
    int diameter() const noexcept;

    bool operator==(const DistanceMatrix&) const = default;

private:
    Vertex n_ = 0;
    std::vector<value_type> d_;
};

/// One BFS per source, sources distributed over OpenMP threads.
/// Throws Error{too_large} above DistanceMatrix::max_order.
DistanceMatrix all_pairs_distances(const Graph& g);

} // namespace mdim
