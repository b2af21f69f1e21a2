#include <algorithm>
#include <stdexcept>

#include "mvd/error.hpp"
#include "mvd/visibility.hpp"

namespace mvd {
namespace {

using Matrix = std::vector<std::vector<Distance>>;

// All-pairs shortest paths where only vertices with allowed[k] may serve as
// intermediates.
Matrix floyd_warshall(const Digraph& graph, const std::vector<char>& allowed) {
  const std::size_t n = graph.vertex_count();
  Matrix d(n, std::vector<Distance>(n, Distance::unreachable()));
  for (VertexId u = 0; u < n; ++u) {
    d[u][u] = Distance{0};
    for (VertexId v : graph.out_neighbors(u)) d[u][v] = Distance{1};
  }
  for (VertexId k = 0; k < n; ++k) {
    if (!allowed[k]) continue;
    for (VertexId i = 0; i < n; ++i) {
      if (!d[i][k].reachable()) continue;
      for (VertexId j = 0; j < n; ++j) {
        if (!d[k][j].reachable()) continue;
        const Distance through{d[i][k].hops() + d[k][j].hops()};
        if (through < d[i][j]) d[i][j] = through;
      }
    }
  }
  return d;
}

class PathEnumerator {
 public:
  PathEnumerator(const Digraph& graph, const Matrix& dist, const std::vector<char>& in_set)
      : graph_(graph), dist_(dist), in_set_(in_set) {}

  // True iff some shortest from -> to path has no internal vertex in the set.
  bool some_shortest_path_avoids_set(VertexId from, VertexId to) {
    if (!dist_[from][to].reachable()) return false;
    path_.assign(1, from);
    return extend(to, dist_[from][to].hops());
  }

 private:
  bool extend(VertexId target, std::uint32_t remaining) {
    const VertexId cur = path_.back();
    if (remaining == 0) return cur == target && internal_vertices_clear();
    for (VertexId w : graph_.out_neighbors(cur)) {
      // Stay on the shortest-path DAG towards the target.
      if (!dist_[w][target].reachable() || dist_[w][target].hops() != remaining - 1) continue;
      path_.push_back(w);
      const bool found = extend(target, remaining - 1);
      path_.pop_back();
      if (found) return true;
    }
    return false;
  }

  bool internal_vertices_clear() const {
    return std::none_of(path_.begin() + 1, path_.end() - 1,
                        [&](VertexId v) { return in_set_[v] != 0; });
  }

  const Digraph& graph_;
  const Matrix& dist_;
  const std::vector<char>& in_set_;
  std::vector<VertexId> path_;
};

void check_cap(const Digraph& graph, const NaiveOptions& options) {
  if (graph.vertex_count() > options.max_vertices) {
    throw RefusalError(graph.vertex_count(), options.max_vertices,
                       "naive verification refused");
  }
}

}  // namespace

VisibilityReport naive_verify(const Digraph& graph, std::vector<VertexId> set,
                              Variant variant, NaiveOptions options) {
  check_cap(graph, options);
  const std::size_t n = graph.vertex_count();
  VisibilityReport report;
  report.variant = variant;
  report.set = normalize_set(n, std::move(set));
  const std::vector<char> in_set = make_mask(n, report.set);
  std::vector<char> outside(n);
  for (std::size_t v = 0; v < n; ++v) outside[v] = !in_set[v];

  const Matrix free = floyd_warshall(graph, std::vector<char>(n, 1));
  const Matrix restricted = floyd_warshall(graph, outside);
  PathEnumerator paths(graph, free, in_set);

  const std::vector<VertexPair> pairs = required_pairs(variant, report.set, n);
  report.pairs_checked = pairs.size();
  for (const VertexPair& p : pairs) {
    for (Direction dir : {Direction::kForward, Direction::kBackward}) {
      const VertexId from = dir == Direction::kForward ? p.first : p.second;
      const VertexId to = dir == Direction::kForward ? p.second : p.first;
      const bool visible = paths.some_shortest_path_avoids_set(from, to);
      if (visible != (free[from][to].reachable() && restricted[from][to] == free[from][to])) {
        throw std::logic_error("naive_verify: path enumeration and restricted distances disagree");
      }
      if (!visible) report.blocked.push_back({p, dir, free[from][to], restricted[from][to]});
    }
  }
  report.valid = report.blocked.empty();
  return report;
}

bool naive_is_valid(const Digraph& graph, std::span<const VertexId> set,
                    Variant variant, NaiveOptions options) {
  return kernel::NaiveOracle(graph, options).is_valid(set, variant);
}

namespace kernel {

NaiveOracle::NaiveOracle(const Digraph& graph, NaiveOptions options) : graph_(graph) {
  check_cap(graph, options);
  dist_ = floyd_warshall(graph, std::vector<char>(graph.vertex_count(), 1));
}

bool NaiveOracle::is_valid(std::span<const VertexId> set, Variant variant) const {
  const std::size_t n = graph_.vertex_count();
  const std::vector<char> in_set = make_mask(n, set);
  PathEnumerator paths(graph_, dist_, in_set);
  std::vector<VertexId> sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (const VertexPair& p : required_pairs(variant, sorted, n)) {
    if (!paths.some_shortest_path_avoids_set(p.first, p.second) ||
        !paths.some_shortest_path_avoids_set(p.second, p.first)) {
      return false;
    }
  }
  return true;
}

}  // namespace kernel
}  // namespace mvd
