#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/digraph.hpp"

namespace mvd {

/// Token-level view of an edge-list document before it becomes a Digraph or
/// an undirected graph. Pairs are in file order and may repeat.
struct EdgeListDocument {
  std::size_t vertex_count = 0;
  std::vector<Arc> pairs;
  std::vector<std::string> labels;  // empty for integer-id documents
};

/// Parses the edge-list format: one "u v" pair per line, '#' comment lines
/// and blank lines ignored. Integer ids are used as indices directly; if any
/// token is not a non-negative integer, every token is a name and names get
/// dense indices in first-appearance order.
///
/// A comment of the form "# vertices N" fixes the vertex count of an integer
/// document (isolated trailing vertices); "# vertices a b c" pre-declares the
/// names, in index order, of a named document.
///
/// Throws ParseError (with the 1-based line) on malformed lines and
/// self-loops.
EdgeListDocument parse_edge_list(std::string_view text);

Digraph from_edge_list(std::string_view text);
Digraph from_edge_list(std::istream& in);

/// Canonical serialization: arcs in lexicographic order, one per line, no
/// trailing newline. A "# vertices" line is prepended only when the arcs
/// alone would not reproduce the same vertex indexing.
std::string to_edge_list(const Digraph& graph);

/// Graphviz digraph with every vertex declared and labels quoted.
std::string to_dot(const Digraph& graph);

std::string read_all(std::istream& in);

}  // namespace mvd
