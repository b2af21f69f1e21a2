#include "mvd/undirected.hpp"

#include <algorithm>
#include <limits>

#include "mvd/edge_list.hpp"
#include "mvd/error.hpp"

namespace mvd {

UndirectedGraph make_undirected(std::size_t n, std::vector<Arc> edges,
                                std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) throw DomainError("label count mismatch");
  for (Arc& e : edges) {
    if (e.tail >= n || e.head >= n) throw DomainError("edge endpoint out of range");
    if (e.tail == e.head) throw DomainError("self-loop at vertex " + std::to_string(e.tail));
    if (e.tail > e.head) std::swap(e.tail, e.head);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {n, std::move(edges), std::move(labels)};
}

UndirectedGraph undirected_from_edge_list(std::string_view text) {
  EdgeListDocument doc = parse_edge_list(text);
  return make_undirected(doc.vertex_count, std::move(doc.pairs), std::move(doc.labels));
}

bool is_connected(const UndirectedGraph& graph) {
  const std::size_t n = graph.vertex_count;
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t parts = n;
  for (const Arc& e : graph.edges) {
    auto a = find(e.tail), b = find(e.head);
    if (a != b) parent[a] = b, --parts;
  }
  return parts == 1;
}

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

struct Search {
  const std::vector<std::vector<char>>& adj;
  const std::vector<std::vector<std::size_t>>& dist;
  const std::vector<char>& in_set;

  // Walks the shortest-path layers from `cur` to `target`; internal vertices
  // must be outside the set.
  bool clear_path(std::size_t cur, std::size_t target) const {
    const std::size_t n = adj.size();
    for (std::size_t w = 0; w < n; ++w) {
      if (!adj[cur][w] || dist[w][target] + 1 != dist[cur][target]) continue;
      if (w == target) return true;
      if (!in_set[w] && clear_path(w, target)) return true;
    }
    return false;
  }
};

}  // namespace

bool is_undirected_mv_set(const UndirectedGraph& graph, std::span<const VertexId> set) {
  const std::size_t n = graph.vertex_count;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Arc& e : graph.edges) {
    adj[e.tail][e.head] = adj[e.head][e.tail] = 1;
    dist[e.tail][e.head] = dist[e.head][e.tail] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);

  std::vector<char> in_set(n, 0);
  for (VertexId v : set) {
    if (v >= n) throw DomainError("set vertex out of range");
    in_set[v] = 1;
  }
  Search search{adj, dist, in_set};
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (set[i] == set[j]) continue;
      if (dist[set[i]][set[j]] >= kInf || !search.clear_path(set[i], set[j])) return false;
    }
  }
  return true;
}

}  // namespace mvd
