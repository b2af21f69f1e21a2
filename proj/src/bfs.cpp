#include "mvd/bfs.hpp"

#include <string>

#include "mvd/error.hpp"

namespace mvd {
namespace kernel {

void BfsWorkspace::run(const Digraph& graph, VertexId source,
                       std::span<const char> blocked_mask, bool reverse) {
  const std::size_t n = graph.vertex_count();
  dist_.assign(n, Distance::unreachable());
  queue_.clear();
  queue_.reserve(n);

  dist_[source] = Distance{0};
  queue_.push_back(source);
  const bool restricted = !blocked_mask.empty();
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const VertexId cur = queue_[head];
    if (restricted && cur != source && blocked_mask[cur]) continue;
    const std::uint32_t next = dist_[cur].hops() + 1;
    auto nbrs = reverse ? graph.in_neighbors(cur) : graph.out_neighbors(cur);
    for (VertexId w : nbrs) {
      if (!dist_[w].reachable()) {
        dist_[w] = Distance{next};
        queue_.push_back(w);
      }
    }
  }
}

}  // namespace kernel

namespace {
void check_source(const Digraph& graph, VertexId source) {
  if (!graph.contains(source)) {
    throw DomainError("source " + std::to_string(source) + " not in graph");
  }
}
}  // namespace

DistanceVector bfs_distances(const Digraph& graph, VertexId source) {
  check_source(graph, source);
  kernel::BfsWorkspace ws;
  ws.run(graph, source, {});
  return ws.distances();
}

DistanceVector restricted_bfs(const Digraph& graph, VertexId source,
                              std::span<const VertexId> blocked) {
  check_source(graph, source);
  std::vector<char> mask = make_mask(graph.vertex_count(), blocked);
  if (mask[source]) {
    throw DomainError("source " + std::to_string(source) + " is in the blocked set");
  }
  kernel::BfsWorkspace ws;
  ws.run(graph, source, mask);
  return ws.distances();
}

bool mutually_reachable(const Digraph& graph, VertexId u, VertexId v) {
  check_source(graph, u);
  check_source(graph, v);
  return bfs_distances(graph, u)[v].reachable() &&
         bfs_distances(graph, v)[u].reachable();
}

}  // namespace mvd
