#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/digraph.hpp"

namespace mvd {

/// Simple undirected graph; each edge stored once with first < second.
struct UndirectedGraph {
  std::size_t vertex_count = 0;
  std::vector<Arc> edges;  // sorted, tail < head
  std::vector<std::string> labels;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;
};

/// Canonicalizes: orients each edge low -> high, drops duplicates.
/// Throws DomainError on self-loops or out-of-range endpoints.
UndirectedGraph make_undirected(std::size_t n, std::vector<Arc> edges,
                                std::vector<std::string> labels = {});

/// Same line format as the digraph edge list; "u v" and "v u" are one edge.
UndirectedGraph undirected_from_edge_list(std::string_view text);

bool is_connected(const UndirectedGraph& graph);

/// Undirected mutual-visibility check by brute force: all-pairs distances by
/// Floyd-Warshall on the edge set, then a search for a shortest path with no
/// internal vertex in `set` for every pair. Independent of the digraph code.
bool is_undirected_mv_set(const UndirectedGraph& graph, std::span<const VertexId> set);

}  // namespace mvd
