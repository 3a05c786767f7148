#include "mdim/distance.hpp"

#include "mdim/error.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace mdim {

DistanceMatrix::DistanceMatrix(Vertex n, std::vector<value_type> data) : n_(n), d_(std::move(data)) {}

int DistanceMatrix::diameter() const noexcept
{
    return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

namespace {

void bfs_row(const Graph& g, Vertex source, DistanceMatrix::value_type* row, std::vector<Vertex>& queue)
{
    constexpr auto unseen = std::numeric_limits<DistanceMatrix::value_type>::max();
    std::fill(row, row + g.order(), unseen);
    queue.clear();
    row[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        auto next = static_cast<DistanceMatrix::value_type>(row[u] + 1);
        for (Vertex v : g.neighbors(u))
            if (row[v] == unseen) {
                row[v] = next;
                queue.push_back(v);
            }
    }
}

} // namespace

DistanceMatrix all_pairs_distances(const Graph& g)
{
    const Vertex n = g.order();
    if (n > DistanceMatrix::max_order)
        fail(ErrorCode::too_large, "distance matrix limited to " + std::to_string(DistanceMatrix::max_order) +
                                       " vertices, got " + std::to_string(n));
    std::vector<DistanceMatrix::value_type> d(static_cast<std::size_t>(n) * n);

#pragma omp parallel
    {
        std::vector<Vertex> queue;
        queue.reserve(n);
#pragma omp for schedule(dynamic, 16)
        for (Vertex s = 0; s < n; ++s)
            bfs_row(g, s, d.data() + static_cast<std::size_t>(s) * n, queue);
    }
    return DistanceMatrix(n, std::move(d));
}

} // namespace mdim
