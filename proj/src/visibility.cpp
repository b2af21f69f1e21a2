#include "mvd/visibility.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "mvd/error.hpp"

namespace mvd {

std::string_view to_string(Variant variant) {
  switch (variant) {
    case Variant::kStandard: return "standard";
    case Variant::kTotal: return "total";
    case Variant::kOuter: return "outer";
    case Variant::kDual: return "dual";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : {Variant::kStandard, Variant::kTotal, Variant::kOuter, Variant::kDual}) {
    if (to_string(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

std::vector<VertexPair> required_pairs(Variant variant,
                                       std::span<const VertexId> set,
                                       std::size_t vertex_count) {
  const std::vector<char> in_set = make_mask(vertex_count, set);
  const auto n = static_cast<VertexId>(vertex_count);
  std::vector<VertexPair> pairs;
  // Each branch emits pairs in lexicographic order and touches only the
  // pairs it emits (plus one pass over the set per vertex for outer/dual).
  auto set_members_after = [&](VertexId a) {
    for (auto it = std::upper_bound(set.begin(), set.end(), a); it != set.end(); ++it)
      pairs.push_back({a, *it});
  };
  switch (variant) {
    case Variant::kStandard:
      for (VertexId a : set) set_members_after(a);
      break;
    case Variant::kTotal:
      for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
      break;
    case Variant::kOuter:
      for (VertexId a = 0; a < n; ++a) {
        if (in_set[a]) {
          for (VertexId b = a + 1; b < n; ++b) pairs.push_back({a, b});
        } else {
          set_members_after(a);
        }
      }
      break;
    case Variant::kDual:
      for (VertexId a = 0; a < n; ++a) {
        if (in_set[a]) {
          set_members_after(a);
        } else {
          for (VertexId b = a + 1; b < n; ++b)
            if (!in_set[b]) pairs.push_back({a, b});
        }
      }
      break;
  }
  return pairs;
}

bool pair_visible(const Digraph& graph, std::span<const VertexId> set,
                  VertexId x, VertexId y) {
  if (!graph.contains(x) || !graph.contains(y)) {
    throw DomainError("pair_visible: vertex out of range");
  }
  if (x == y) throw DomainError("pair_visible: x and y must differ");
  std::vector<VertexId> blockers;
  for (VertexId s : set) {
    if (s != x && s != y) blockers.push_back(s);
  }
  auto one_way = [&](VertexId from, VertexId to) {
    const Distance free = bfs_distances(graph, from)[to];
    return free.reachable() && restricted_bfs(graph, from, blockers)[to] == free;
  };
  return one_way(x, y) && one_way(y, x);
}

namespace {

// One BFS source and the partners whose direction it certifies. A forward
// task from s checks s -> t; a reverse task from s checks t -> s.
struct SourceTask {
  VertexId source;
  bool reverse;
};

std::vector<SourceTask> plan_sources(Variant variant, std::span<const VertexId> set,
                                     std::size_t n) {
  std::vector<SourceTask> tasks;
  switch (variant) {
    case Variant::kStandard:
      for (VertexId s : set) tasks.push_back({s, false});
      break;
    case Variant::kOuter:
      for (VertexId s : set) tasks.push_back({s, false});
      for (VertexId s : set) tasks.push_back({s, true});
      break;
    case Variant::kTotal:
    case Variant::kDual:
      for (VertexId v = 0; v < n; ++v) tasks.push_back({v, false});
      break;
  }
  return tasks;
}

// Whether the ordered pair (from, to) is checked by this task. Each required
// ordered pair is owned by exactly one task.
bool task_owns(Variant variant, const SourceTask& task, VertexId partner,
               const std::vector<char>& in_set) {
  if (partner == task.source) return false;
  const bool src_in = in_set[task.source];
  const bool partner_in = in_set[partner];
  switch (variant) {
    case Variant::kStandard: return partner_in;
    case Variant::kTotal: return true;
    case Variant::kDual: return src_in == partner_in;
    case Variant::kOuter:
      // Forward tasks own s -> anything; reverse tasks own outside -> s.
      return task.reverse ? !partner_in : true;
  }
  return false;
}

BlockedPair make_blocked(VertexId from, VertexId to, Distance free, Distance restricted) {
  if (from < to) return {{from, to}, Direction::kForward, free, restricted};
  return {{to, from}, Direction::kBackward, free, restricted};
}

std::size_t required_pair_count(Variant variant, std::size_t k, std::size_t n) {
  auto choose2 = [](std::size_t m) { return m < 2 ? 0 : m * (m - 1) / 2; };
  switch (variant) {
    case Variant::kStandard: return choose2(k);
    case Variant::kTotal: return choose2(n);
    case Variant::kOuter: return choose2(k) + k * (n - k);
    case Variant::kDual: return choose2(k) + choose2(n - k);
  }
  return 0;
}

bool direction_ok(Distance free, Distance restricted) {
  return free.reachable() && restricted == free;
}

void finish(VisibilityReport& report) {
  std::sort(report.blocked.begin(), report.blocked.end(),
            [](const BlockedPair& a, const BlockedPair& b) {
              return std::tie(a.pair, a.direction) < std::tie(b.pair, b.direction);
            });
  report.valid = report.blocked.empty();
}

}  // namespace

VisibilityReport verify(const Digraph& graph, std::vector<VertexId> set, Variant variant) {
  const std::size_t n = graph.vertex_count();
  VisibilityReport report;
  report.variant = variant;
  report.set = normalize_set(n, std::move(set));
  const std::vector<char> in_set = make_mask(n, report.set);
  report.pairs_checked = required_pair_count(variant, report.set.size(), n);

  const std::vector<SourceTask> tasks = plan_sources(variant, report.set, n);
  std::vector<std::vector<BlockedPair>> found(tasks.size());
  const auto task_count = static_cast<std::ptrdiff_t>(tasks.size());

#pragma omp parallel
  {
    kernel::BfsWorkspace free_ws;
    kernel::BfsWorkspace restricted_ws;
#pragma omp for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < task_count; ++i) {
      const SourceTask& task = tasks[i];
      free_ws.run(graph, task.source, {}, task.reverse);
      restricted_ws.run(graph, task.source, in_set, task.reverse);
      const DistanceVector& d = free_ws.distances();
      const DistanceVector& r = restricted_ws.distances();
      for (VertexId t = 0; t < n; ++t) {
        if (!task_owns(variant, task, t, in_set) || direction_ok(d[t], r[t])) continue;
        found[i].push_back(task.reverse ? make_blocked(t, task.source, d[t], r[t])
                                        : make_blocked(task.source, t, d[t], r[t]));
      }
    }
  }

  for (auto& part : found) {
    report.blocked.insert(report.blocked.end(), part.begin(), part.end());
  }
  finish(report);
  return report;
}

VisibilityReport verify_serial(const Digraph& graph, std::vector<VertexId> set,
                               Variant variant) {
  const std::size_t n = graph.vertex_count();
  VisibilityReport report;
  report.variant = variant;
  report.set = normalize_set(n, std::move(set));
  const std::vector<VertexPair> pairs = required_pairs(variant, report.set, n);
  report.pairs_checked = pairs.size();

  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  const bool every_vertex = variant == Variant::kTotal || variant == Variant::kDual;
  const std::vector<VertexId>& sources = every_vertex ? all : report.set;
  const Digraph reversed = variant == Variant::kOuter ? graph.reversed() : Digraph{};

  // Step 1 and 2: plain and restricted distance rows from every source; the
  // restricted search never expands a set vertex other than its source.
  struct Rows {
    DistanceVector free;
    DistanceVector restricted;
  };
  auto rows_from = [&](const Digraph& g, VertexId s) {
    std::vector<VertexId> blockers;
    for (VertexId b : report.set) {
      if (b != s) blockers.push_back(b);
    }
    return Rows{bfs_distances(g, s), restricted_bfs(g, s, blockers)};
  };
  std::vector<std::optional<Rows>> forward(n), backward(n);
  for (VertexId s : sources) forward[s] = rows_from(graph, s);
  if (variant == Variant::kOuter) {
    for (VertexId s : report.set) backward[s] = rows_from(reversed, s);
  }

  // Step 3: compare both directions of every required pair.
  auto lookup = [&](VertexId from, VertexId to) -> std::pair<Distance, Distance> {
    if (forward[from]) return {forward[from]->free[to], forward[from]->restricted[to]};
    return {backward[to]->free[from], backward[to]->restricted[from]};
  };
  for (const VertexPair& p : pairs) {
    for (Direction dir : {Direction::kForward, Direction::kBackward}) {
      const VertexId from = dir == Direction::kForward ? p.first : p.second;
      const VertexId to = dir == Direction::kForward ? p.second : p.first;
      auto [free, restricted] = lookup(from, to);
      if (!direction_ok(free, restricted)) {
        report.blocked.push_back({p, dir, free, restricted});
      }
    }
  }
  finish(report);
  return report;
}

namespace kernel {

StandardChecker::StandardChecker(const Digraph& graph)
    : graph_(graph), mask_(graph.vertex_count(), 0) {}

bool StandardChecker::is_valid(std::span<const VertexId> set) {
  for (VertexId v : set) mask_[v] = 1;
  bool ok = true;
  for (VertexId s : set) {
    free_.run(graph_, s, {});
    restricted_.run(graph_, s, mask_);
    const DistanceVector& d = free_.distances();
    const DistanceVector& r = restricted_.distances();
    for (VertexId t : set) {
      if (t != s && !direction_ok(d[t], r[t])) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
  }
  for (VertexId v : set) mask_[v] = 0;
  return ok;
}

}  // namespace kernel
}  // namespace mvd
