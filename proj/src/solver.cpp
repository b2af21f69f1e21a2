#include "mvd/solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mvd/error.hpp"
#include "mvd/structure.hpp"

namespace mvd {

std::string_view to_string(Shortcut shortcut) {
  switch (shortcut) {
    case Shortcut::kNone: return "none";
    case Shortcut::kDag: return "dag";
    case Shortcut::kCycle: return "cycle";
    case Shortcut::kComplete: return "complete";
  }
  return "?";
}

namespace {

// Branch and bound inside one strongly connected component (given as its
// induced subgraph). Vertex ids here are local to the subgraph.
class ComponentSearch {
 public:
  explicit ComponentSearch(const Digraph& sub) : sub_(sub), checker_(sub) {}

  MuResult run() {
    const std::size_t k = sub_.vertex_count();
    std::vector<VertexId> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
      return sub_.in_degree(a) + sub_.out_degree(a) > sub_.in_degree(b) + sub_.out_degree(b);
    });

    // Greedy incumbent: always a valid set.
    std::vector<VertexId> greedy;
    for (VertexId v : order) {
      greedy.push_back(v);
      if (!checker_.is_valid(greedy)) greedy.pop_back();
    }
    best_ = greedy.size();

    chosen_.clear();
    maximize(order, 0);

    // The maximum is known; the first set of that size met by an
    // include-first walk in index order is the lexicographically smallest.
    std::vector<VertexId> by_index(k);
    std::iota(by_index.begin(), by_index.end(), 0);
    chosen_.clear();
    witness_.clear();
    if (!find_first(by_index, 0)) throw std::logic_error("component search lost its maximum");

    MuResult result;
    result.mu = best_;
    result.witness = witness_;
    result.nodes_explored = nodes_;
    return result;
  }

 private:
  void maximize(const std::vector<VertexId>& order, std::size_t pos) {
    ++nodes_;
    if (chosen_.size() + (order.size() - pos) <= best_) return;
    if (pos == order.size()) {
      best_ = chosen_.size();
      return;
    }
    chosen_.push_back(order[pos]);
    if (checker_.is_valid(chosen_)) maximize(order, pos + 1);
    chosen_.pop_back();
    maximize(order, pos + 1);
  }

  bool find_first(const std::vector<VertexId>& order, std::size_t pos) {
    ++nodes_;
    if (chosen_.size() == best_) {
      witness_ = chosen_;
      return true;
    }
    if (chosen_.size() + (order.size() - pos) < best_) return false;
    chosen_.push_back(order[pos]);
    if (checker_.is_valid(chosen_) && find_first(order, pos + 1)) return true;
    chosen_.pop_back();
    return find_first(order, pos + 1);
  }

  const Digraph& sub_;
  kernel::StandardChecker checker_;
  std::vector<VertexId> chosen_;
  std::vector<VertexId> witness_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
};

bool is_complete(const Digraph& g) {
  const std::size_t k = g.vertex_count();
  return g.arc_count() == k * (k - 1);
}

bool is_cycle(const Digraph& g) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.in_degree(v) != 1 || g.out_degree(v) != 1) return false;
  }
  return true;
}

// Larger mu wins; ties go to the lexicographically smaller witness.
bool better(const MuResult& a, const MuResult& b) {
  if (a.mu != b.mu) return a.mu > b.mu;
  return a.witness < b.witness;
}

}  // namespace

MuResult mu(const Digraph& graph, SolveOptions options) {
  if (graph.vertex_count() == 0) throw DomainError("mu of the empty graph is undefined");
  const SccDecomposition d = scc(graph);

  if (d.components.size() == graph.vertex_count()) {
    MuResult r;
    r.mu = 1;
    r.witness = {0};
    r.shortcut = Shortcut::kDag;
    return r;
  }

  std::vector<const std::vector<VertexId>*> nontrivial;
  for (const auto& comp : d.components) {
    if (comp.size() >= 2) nontrivial.push_back(&comp);
  }

  std::vector<Digraph> subgraphs;
  std::size_t worst = 0;
  for (const auto* comp : nontrivial) {
    subgraphs.push_back(graph.induced(*comp));
    const Digraph& sub = subgraphs.back();
    if (!is_complete(sub) && !is_cycle(sub)) worst = std::max(worst, comp->size());
  }
  if (worst > options.budget) {
    throw RefusalError(worst, options.budget, "exact search refused for strongly connected component");
  }

  std::vector<MuResult> per_component(nontrivial.size());
  const auto count = static_cast<std::ptrdiff_t>(nontrivial.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      const Digraph& sub = subgraphs[i];
      MuResult r;
      if (is_complete(sub)) {
        r.mu = sub.vertex_count();
        r.witness.resize(r.mu);
        std::iota(r.witness.begin(), r.witness.end(), 0);
        r.shortcut = Shortcut::kComplete;
      } else if (is_cycle(sub)) {
        r.mu = 2;
        r.witness = {0, 1};
        r.shortcut = Shortcut::kCycle;
      } else {
        r = ComponentSearch(sub).run();
      }
      // Component vertices are sorted, so local order is global order.
      for (VertexId& v : r.witness) v = (*nontrivial[i])[v];
      per_component[i] = std::move(r);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  MuResult best = per_component.front();
  std::uint64_t nodes = 0;
  for (const MuResult& r : per_component) {
    nodes += r.nodes_explored;
    if (better(r, best)) best = r;
  }
  best.nodes_explored = nodes;
  return best;
}

namespace {

void check_cap(std::size_t n, const BruteForceOptions& options, const char* what) {
  if (n > options.max_vertices) throw RefusalError(n, options.max_vertices, what);
}

// Largest accepted subset, trying sizes from `n` down to `min_size` and
// subsets of one size in lexicographic order.
template <typename Accept>
MuResult enumerate_descending(std::size_t n, std::size_t min_size, Accept&& accept) {
  MuResult result;
  for (std::size_t size = n + 1; size-- > min_size;) {
    std::vector<VertexId> subset(size);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
      ++result.nodes_explored;
      if (accept(subset)) {
        result.mu = size;
        result.witness = subset;
        return result;
      }
      // Advance to the next combination.
      std::size_t i = size;
      while (i > 0 && subset[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++subset[i - 1];
      for (std::size_t j = i; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  result.feasible = false;
  return result;
}

}  // namespace

MuResult mu_bruteforce(const Digraph& graph, BruteForceOptions options) {
  if (graph.vertex_count() == 0) throw DomainError("mu of the empty graph is undefined");
  check_cap(graph.vertex_count(), options, "brute-force mu refused");
  const kernel::NaiveOracle oracle(graph, {options.max_vertices});
  return enumerate_descending(graph.vertex_count(), 1, [&](const std::vector<VertexId>& s) {
    return oracle.is_valid(s, Variant::kStandard);
  });
}

MuResult mu_variant(const Digraph& graph, Variant variant, BruteForceOptions options) {
  if (variant == Variant::kStandard) return mu_bruteforce(graph, options);
  check_cap(graph.vertex_count(), options, "brute-force variant refused");
  const kernel::NaiveOracle oracle(graph, {options.max_vertices});
  return enumerate_descending(graph.vertex_count(), 0, [&](const std::vector<VertexId>& s) {
    return oracle.is_valid(s, variant);
  });
}

MuResult mu_undirected_bruteforce(const UndirectedGraph& graph, BruteForceOptions options) {
  if (graph.vertex_count == 0) throw DomainError("mu of the empty graph is undefined");
  check_cap(graph.vertex_count, options, "undirected brute force refused");
  return enumerate_descending(graph.vertex_count, 1, [&](const std::vector<VertexId>& s) {
    return is_undirected_mv_set(graph, s);
  });
}

}  // namespace mvd
