#pragma once

// Serial reference implementations of the OpenMP kernels. They are kept
// deliberately plain and are used by the tests (and the benchmark) as the
// ground truth for the parallel versions.

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

#include <cstdint>
#include <vector>

namespace mdim::reference {

DistanceMatrix all_pairs_distances(const Graph& g);

bool resolves(const DistanceMatrix& dm, const VertexSet& s);
bool doubly_resolves(const DistanceMatrix& dm, const VertexSet& s);

/// Row-major pairs x vertices table: bit x of row p is set when x resolves
/// pair p (pairs in lexicographic (v, w), v < w, order).
std::vector<std::uint64_t> pair_cover_rows(const DistanceMatrix& dm);

bool static_questions_injective(int n, int k, const std::vector<std::vector<int>>& questions);
bool weighing_injective(int n, const std::vector<std::vector<int>>& weighings);

} // namespace mdim::reference
