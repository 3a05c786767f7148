#pragma once

#include "mdim/graph.hpp"
#include "mdim/vertex_set.hpp"

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace mdim {

enum class FormulaTarget { beta, psi };

enum class FormulaFamily {
    complete,        // K_n                       params {n}
    path,            // P_n                       params {n}
    cycle,           // C_n                       params {n}
    tree,            // tree given as graph
    hypercube_table, // Q_n, 2 <= n <= 8          params {n}
    knkm,            // K_n □ K_m                 params {n, m}
    cmcn,            // C_m □ C_n                 params {m, n}
    kncm,            // K_n □ C_m                 params {n, m}
    pmcn,            // P_m □ C_n                 params {m, n}
    hamming2k,       // H_{2,k} = K_k □ K_k       params {k}
    comb,            // B_n                       params {n}
    gnk_bounds,      // G_{n,k}                   params {n, k}
};

std::string_view to_string(FormulaFamily f);
FormulaFamily parse_formula_family(std::string_view name);

struct FormulaQuery {
    FormulaTarget target = FormulaTarget::beta;
    FormulaFamily family = FormulaFamily::complete;
    std::vector<int> params;
    /// Only for FormulaFamily::tree.
    const Graph* tree = nullptr;
};

/// Closed-form β for the proven families. Throws Error{out_of_proven_range}
/// outside each formula's range; never falls back to search.
int beta_formula(const FormulaQuery& q);

/// Closed-form ψ for cliques, paths, cycles, trees and combs.
int psi_formula(const FormulaQuery& q);

/// β(Q_n) upper bounds from the computer-search table (n = 10, 15); these
/// have no certificate and are not exact values.
std::optional<int> hypercube_upper_bound(int n);

struct TreeDecoration {
    /// legs[v]: number of components of T - v that are paths attached to v
    /// at one of their ends.
    std::vector<int> legs;
    VertexSet leaves;
};

struct TreeBeta {
    int beta = 0;
    TreeDecoration decoration;
};

/// β(T) = Σ max{legs(v) - 1, 0}, with paths handled separately (β = 1, or 0
/// for K_1). Throws Error{not_a_tree}.
TreeBeta tree_beta(const Graph& t);

/// (column a in K_n, row v in K_m) coordinates.
using CliqueCell = std::pair<int, int>;

/// Empty-line / lonely-vertex characterisation of resolving sets of K_n □ K_m
/// (n, m >= 2): at most one empty row, at most one empty column, at most one
/// lonely vertex, and no lonely vertex when both an empty row and an empty
/// column exist.
bool knkm_resolving_check(int n, int m, const std::vector<CliqueCell>& cells);

/// β(K_n □ K_m) from the two-step recursion with base cases m <= 2.
/// Throws Error{invalid_params} for n < 1 or m < 1.
int knkm_recursion(int n, int m);

struct GnkCertificates {
    VertexSet resolving_set;
    int psi_lower = 0;
};

/// {v_i, v_{2kn+1-i} : 1 <= i <= k} in the generator's index order, and the
/// lower bound ψ(G_{n,k}) >= 2n. Throws Error{invalid_params}.
GnkCertificates gnk_certificates(int k, int n);

} // namespace mdim
