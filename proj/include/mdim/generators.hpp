#pragma once

#include "mdim/graph.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mdim {

enum class Family { path, cycle, complete, hypercube, hamming, grid, tree_random, comb, gnk };

std::string_view to_string(Family f);
/// Throws Error{invalid_params} for an unknown name.
Family parse_family(std::string_view name);

/// Parametric description of a generated graph. Which fields matter
/// depends on the family:
///   path, cycle, complete, hypercube, comb   n
///   hamming                                  n (dimension), k (alphabet)
///   grid                                     dims (side lengths)
///   tree_random                              n, seed
///   gnk                                      n, k
struct FamilySpec {
    Family family = Family::path;
    int n = 1;
    int k = 0;
    std::vector<int> dims;
    std::uint64_t seed = 0;
};

/// Canonical vertex orders:
///   path/cycle    walk order 0..n-1
///   hypercube     binary vectors in lexicographic order, labels "0101"
///   hamming       vectors over 1..k in lexicographic order, labels "1,3,2"
///   grid          coordinates in lexicographic order, labels "0,2,1"
///   comb B_n      spine 0..n-1, leaf of spine i is n+i
///   gnk           v_1..v_2kn at 0..2kn-1, w_i at 2kn+i-1
Graph generate(const FamilySpec& spec);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph hypercube(int n);
Graph hamming_graph(int n, int k);
Graph grid_graph(const std::vector<int>& dims);
Graph random_tree(int n, std::uint64_t seed);
Graph comb_graph(int n);
Graph gnk_graph(int n, int k);
Graph star_graph(int leaves);
Graph petersen_graph();

/// Random connected graph: a random spanning tree plus each remaining pair
/// independently with probability edge_probability.
Graph random_connected_graph(int n, double edge_probability, std::uint64_t seed);

/// Connected graphs on exactly n vertices, one per isomorphism class, in a
/// fixed deterministic order. Practical for n <= 7.
std::vector<Graph> connected_graph_catalog(int n);

/// Trees on exactly n vertices, one per isomorphism class. Practical for n <= 12.
std::vector<Graph> tree_catalog(int n);

/// Hamming-vector index of a word with entries in 1..k (first entry most significant).
std::int64_t hamming_index(const std::vector<int>& word, int k);
std::vector<int> hamming_word(std::int64_t index, int n, int k);

} // namespace mdim
