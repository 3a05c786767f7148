#pragma once

#include "mdim/distance.hpp"
#include "mdim/graph.hpp"
#include "mdim/product.hpp"
#include "mdim/vertex_set.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mdim {

// ---------------------------------------------------------------------------
// Checks

/// True iff the distance vectors (d(v, x))_{x in s} are pairwise distinct.
/// A one-vertex graph is resolved by the empty set.
bool resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// Pairs (v, w), v < w, with equal distance vectors to s.
std::vector<Edge> unresolved_pairs(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

/// True iff for every pair v != w the map x -> d(v,x) - d(w,x) is
/// non-constant on s. Throws Error{too_small} when |s| < 2.
bool doubly_resolves(const Graph& g, const DistanceMatrix& dm, const VertexSet& s);

// ---------------------------------------------------------------------------
// Exact search

enum class InvariantKind { beta, psi, weighings };
enum class ResultStatus { exact, bounds };

struct SolverResult {
    InvariantKind kind = InvariantKind::beta;
    ResultStatus status = ResultStatus::exact;
    int value = 0;  // meaningful when exact
    int lower = 0;
    int upper = 0;
    VertexSet certificate;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};

    bool exact() const noexcept { return status == ResultStatus::exact; }
};

struct SolverOptions {
    std::chrono::milliseconds budget{60'000};
    /// 0 means unlimited.
    std::uint64_t node_limit = 0;
    /// Twin classes force |class| - 1 members; turn off for oracle cross-checks.
    bool twin_reduction = true;
    /// Rewrite the certificate into the lexicographically least minimum set.
    bool canonical_certificate = true;
    /// Part of the budget spent shrinking the greedy set from above before
    /// the ascending search, so a timeout still reports a small certificate.
    /// Capped at a quarter of the budget; 0 disables.
    std::chrono::milliseconds descent_budget{10'000};
};

/// Exact metric dimension by iterative deepening over the set size, with a
/// branch-and-bound set cover over vertex pairs at each size. Returns
/// bounds plus the best certificate found when the budget runs out.
SolverResult metric_dimension(const Graph& g, const DistanceMatrix& dm, const SolverOptions& options = {});

/// Exact ψ(G). Throws Error{too_small} for K_1.
SolverResult min_doubly_resolving(const Graph& g, const DistanceMatrix& dm, const SolverOptions& options = {});

/// Size-then-lexicographic subset enumeration using resolves() /
/// doubly_resolves() directly. Throws Error{too_large} above 16 vertices and
/// Error{too_small} for ψ on K_1.
SolverResult brute_force_invariant(const Graph& g, const DistanceMatrix& dm, InvariantKind kind);

inline constexpr Vertex brute_force_max_order = 16;

/// Twin classes of size >= 2: vertices with identical distances to every
/// other vertex. Each class is sorted.
std::vector<std::vector<Vertex>> twin_classes(const DistanceMatrix& dm);

/// Vertices that belong to every doubly resolving set because some pair
/// (v, w) is doubly resolved only by pairs containing v.
VertexSet forced_doubly_resolving_vertices(const DistanceMatrix& dm);

// ---------------------------------------------------------------------------
// Product constructions

/// X = {s v : v in T} ∪ {a t : a in S} for s = min S, t = min T, which
/// resolves G □ H with |S| + |T| - 1 vertices. Throws
/// Error{precondition_failed} when S does not resolve G, T does not doubly
/// resolve H, or S is empty.
VertexSet construct_product_resolving(const Graph& g, const Graph& h, const VertexSet& basis_g,
                                      const VertexSet& drs_h);

/// Resolving set of K_n □ G of size max{n - 1, 2|S|}: every clique vertex but
/// r = n - 1 meets some basis column and every basis column holds two chosen
/// vertices. Throws Error{precondition_failed} when S does not resolve G or
/// n < 1. For n = 1 the basis itself is returned.
VertexSet construct_clique_product_resolving(int clique_order, const Graph& g, const VertexSet& basis_g);

// ---------------------------------------------------------------------------
// Serialization

std::string_view to_string(InvariantKind kind);
std::string_view to_string(ResultStatus status);

/// {"kind","status","value"|("lower","upper"),"certificate","nodes_explored","elapsed_ms"}
std::string to_json(const SolverResult& result);
SolverResult solver_result_from_json(std::string_view text);

} // namespace mdim
