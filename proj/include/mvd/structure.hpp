#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mvd/digraph.hpp"

namespace mvd {

struct SccDecomposition {
  std::vector<std::size_t> component_of;
  /// Each component's vertices in increasing order. Components are indexed in
  /// reverse topological order of the condensation: sink components first.
  std::vector<std::vector<VertexId>> components;
  /// One vertex per component; arc (i, j) iff some arc crosses C_i -> C_j.
  Digraph condensation;
};

SccDecomposition scc(const Digraph& graph);

bool is_strongly_connected(const Digraph& graph);
bool is_dag(const Digraph& graph);

/// Arcs whose removal increases the number of strongly connected
/// components, in lexicographic order. Candidate arcs are tested in parallel.
std::vector<Arc> strong_bridges(const Digraph& graph);

/// Reference implementation: deletes every arc in turn, rebuilds the graph
/// and recounts components. Kept for testing and benchmarking.
std::vector<Arc> strong_bridges_serial(const Digraph& graph);

std::size_t beta(const Digraph& graph);

/// Partition around a strong bridge (u, v) of a strongly connected graph:
/// `source_side` is everything u still reaches once the bridge is deleted,
/// `sink_side` the rest. The bridge is then the only arc leaving
/// `source_side`.
struct BridgeCut {
  Arc bridge;
  std::vector<VertexId> source_side;
  std::vector<VertexId> sink_side;
};

/// Throws DomainError if the graph is not strongly connected or `bridge` is
/// not a strong bridge of it.
BridgeCut bridge_cut(const Digraph& graph, Arc bridge);

/// |{w : u -> w and v -> w}|. Throws DomainError when u == v.
std::size_t count_common_out_neighbors(const Digraph& graph, VertexId u, VertexId v);

/// |{w : from -> w and w -> to}|, the number of 2-arc paths. Throws
/// DomainError when from == to.
std::size_t count_two_paths(const Digraph& graph, VertexId from, VertexId to);

namespace kernel {
/// Number of strongly connected components, optionally ignoring one arc.
std::size_t scc_count(const Digraph& graph, std::optional<Arc> skip = std::nullopt);
}  // namespace kernel

}  // namespace mvd
