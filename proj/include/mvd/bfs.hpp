#pragma once

#include <span>
#include <vector>

#include "mvd/digraph.hpp"

namespace mvd {

/// Single-source BFS distances. Throws DomainError on an invalid source.
DistanceVector bfs_distances(const Digraph& graph, VertexId source);

/// BFS in which vertices of `blocked` are reached (their distance is recorded)
/// but never expanded, so every recorded distance is the length of a shortest
/// path whose internal vertices avoid `blocked`. Throws DomainError when the
/// source itself is blocked.
DistanceVector restricted_bfs(const Digraph& graph, VertexId source,
                              std::span<const VertexId> blocked);

bool mutually_reachable(const Digraph& graph, VertexId u, VertexId v);

namespace kernel {

/// Reusable BFS state for the hot loops in verification and search.
/// `blocked_mask` may be empty (no restriction); otherwise it has one entry
/// per vertex. `reverse` walks in-arcs instead of out-arcs.
class BfsWorkspace {
 public:
  void run(const Digraph& graph, VertexId source,
           std::span<const char> blocked_mask, bool reverse = false);

  const DistanceVector& distances() const { return dist_; }

 private:
  DistanceVector dist_;
  std::vector<VertexId> queue_;
};

}  // namespace kernel
}  // namespace mvd
