#pragma once

#include "mdim/graph.hpp"
#include "mdim/product.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace mdim {

// Text format:
//   n m
//   u v          (m lines, u < v, ascending by u then v)
//   l i label    (optional, after the edges)
// Lines beginning with '#' are comments.

std::string format_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);

/// Throws Error{parse_error} for malformed text, and the build_graph errors
/// for well-formed text describing an invalid graph.
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

/// Sidecar for products: one "index a v" line per product vertex.
std::string format_labeling(const ProductLabeling& labeling);

} // namespace mdim
