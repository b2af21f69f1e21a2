#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mvd/digraph.hpp"
#include "mvd/undirected.hpp"
#include "mvd/visibility.hpp"

namespace mvd {

/// Graph class that let the solver skip search for the component holding
/// the witness.
enum class Shortcut { kNone, kDag, kCycle, kComplete };

std::string_view to_string(Shortcut shortcut);

struct MuResult {
  std::size_t mu = 0;
  /// Lexicographically smallest maximum set, sorted.
  std::vector<VertexId> witness;
  std::uint64_t nodes_explored = 0;
  Shortcut shortcut = Shortcut::kNone;
  /// False only for variants where no set at all (not even the empty set)
  /// qualifies; mu is then 0.
  bool feasible = true;
};

struct SolveOptions {
  /// Largest strongly connected component the exact search will take on.
  /// Components settled by a shortcut are not subject to it.
  std::size_t budget = 25;
};

/// Exact mutual-visibility number. The maximum is taken over strongly
/// connected components; cycles and complete components are answered
/// directly, the rest by branch and bound (a set that fails verification is
/// dropped together with all its supersets). Components are searched in
/// parallel. Throws DomainError on an empty graph and RefusalError when a
/// component needing search exceeds `options.budget`.
MuResult mu(const Digraph& graph, SolveOptions options = {});

struct BruteForceOptions {
  std::size_t max_vertices = 15;
};

/// Oracle: tries subsets from largest to smallest, lexicographically within
/// a size, and returns the first one naive_verify accepts.
MuResult mu_bruteforce(const Digraph& graph, BruteForceOptions options = {});

/// Same enumeration for any variant. The non-standard variants are not
/// closed under subsets, so nothing is pruned; the empty set is a candidate.
MuResult mu_variant(const Digraph& graph, Variant variant, BruteForceOptions options = {});

/// Maximum undirected mutual-visibility set by exhaustive enumeration with
/// is_undirected_mv_set.
MuResult mu_undirected_bruteforce(const UndirectedGraph& graph, BruteForceOptions options = {});

}  // namespace mvd
