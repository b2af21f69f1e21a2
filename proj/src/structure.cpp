#include "mvd/structure.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "mvd/bfs.hpp"
#include "mvd/error.hpp"

namespace mvd {
namespace {

constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();

// Iterative Tarjan. Calls emit(component) for each SCC in completion order,
// which is a reverse topological order of the condensation.
template <typename Emit>
void tarjan(const Digraph& graph, std::optional<Arc> skip, Emit&& emit) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<VertexId> stack;
  struct Frame {
    VertexId v;
    std::size_t next;
  };
  std::vector<Frame> call;
  std::vector<VertexId> component;
  std::size_t counter = 0;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;

    while (!call.empty()) {
      Frame& f = call.back();
      auto nbrs = graph.out_neighbors(f.v);
      if (f.next < nbrs.size()) {
        const VertexId w = nbrs[f.next++];
        if (skip && skip->tail == f.v && skip->head == w) continue;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) {
        low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
      if (low[v] == index[v]) {
        component.clear();
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          component.push_back(w);
        } while (w != v);
        emit(component);
      }
    }
  }
}

}  // namespace

namespace kernel {
std::size_t scc_count(const Digraph& graph, std::optional<Arc> skip) {
  std::size_t count = 0;
  tarjan(graph, skip, [&](const std::vector<VertexId>&) { ++count; });
  return count;
}
}  // namespace kernel

SccDecomposition scc(const Digraph& graph) {
  SccDecomposition d;
  d.component_of.assign(graph.vertex_count(), 0);
  tarjan(graph, std::nullopt, [&](const std::vector<VertexId>& comp) {
    std::vector<VertexId> sorted = comp;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId v : sorted) d.component_of[v] = d.components.size();
    d.components.push_back(std::move(sorted));
  });
  std::vector<Arc> crossing;
  for (const Arc& a : graph.arcs()) {
    const auto ct = d.component_of[a.tail];
    const auto ch = d.component_of[a.head];
    if (ct != ch) crossing.push_back({static_cast<VertexId>(ct), static_cast<VertexId>(ch)});
  }
  d.condensation = Digraph(d.components.size(), std::move(crossing));
  return d;
}

bool is_strongly_connected(const Digraph& graph) {
  return graph.vertex_count() > 0 && kernel::scc_count(graph) == 1;
}

bool is_dag(const Digraph& graph) {
  // Self-loops cannot occur in a Digraph.
  return kernel::scc_count(graph) == graph.vertex_count();
}

std::vector<Arc> strong_bridges(const Digraph& graph) {
  const std::size_t base = kernel::scc_count(graph);
  const SccDecomposition d = scc(graph);
  // Deleting an arc between two components cannot split a component.
  std::vector<Arc> candidates;
  for (const Arc& a : graph.arcs()) {
    if (d.component_of[a.tail] == d.component_of[a.head]) candidates.push_back(a);
  }
  std::vector<char> is_bridge(candidates.size(), 0);
  const auto m = static_cast<std::ptrdiff_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    is_bridge[i] = kernel::scc_count(graph, candidates[i]) > base;
  }
  std::vector<Arc> bridges;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (is_bridge[i]) bridges.push_back(candidates[i]);
  }
  return bridges;
}

std::vector<Arc> strong_bridges_serial(const Digraph& graph) {
  const std::size_t base = scc(graph).components.size();
  std::vector<Arc> bridges;
  for (const Arc& a : graph.arcs()) {
    if (scc(graph.without_arc(a)).components.size() > base) bridges.push_back(a);
  }
  return bridges;
}

std::size_t beta(const Digraph& graph) { return strong_bridges(graph).size(); }

BridgeCut bridge_cut(const Digraph& graph, Arc bridge) {
  if (!is_strongly_connected(graph)) {
    throw DomainError("bridge_cut requires a strongly connected graph");
  }
  if (!graph.has_arc(bridge.tail, bridge.head)) {
    throw DomainError("bridge_cut: arc (" + std::to_string(bridge.tail) + "," +
                      std::to_string(bridge.head) + ") not in graph");
  }
  if (kernel::scc_count(graph, bridge) == 1) {
    throw DomainError("bridge_cut: arc (" + std::to_string(bridge.tail) + "," +
                      std::to_string(bridge.head) + ") is not a strong bridge");
  }
  const DistanceVector reach = bfs_distances(graph.without_arc(bridge), bridge.tail);
  BridgeCut cut{bridge, {}, {}};
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    (reach[v].reachable() ? cut.source_side : cut.sink_side).push_back(v);
  }
  return cut;
}

namespace {
void check_pair(const Digraph& graph, VertexId a, VertexId b, const char* what) {
  if (!graph.contains(a) || !graph.contains(b)) {
    throw DomainError(std::string(what) + ": vertex out of range");
  }
  if (a == b) throw DomainError(std::string(what) + ": vertices must differ");
}
}  // namespace

std::size_t count_common_out_neighbors(const Digraph& graph, VertexId u, VertexId v) {
  check_pair(graph, u, v, "count_common_out_neighbors");
  auto a = graph.out_neighbors(u);
  auto b = graph.out_neighbors(v);
  std::size_t count = 0;
  // Both lists are sorted.
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

std::size_t count_two_paths(const Digraph& graph, VertexId from, VertexId to) {
  check_pair(graph, from, to, "count_two_paths");
  std::size_t count = 0;
  for (VertexId w : graph.out_neighbors(from)) {
    if (graph.has_arc(w, to)) ++count;
  }
  return count;
}

}  // namespace mvd
