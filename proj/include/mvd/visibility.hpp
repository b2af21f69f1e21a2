#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mvd/bfs.hpp"
#include "mvd/digraph.hpp"

namespace mvd {

/// Which vertex pairs must be mutually visible for a set S.
///   standard: pairs inside S
///   total:    all pairs of V
///   outer:    pairs inside S, and pairs with one end in S and one outside
///   dual:     pairs inside S, and pairs inside V \ S
enum class Variant { kStandard, kTotal, kOuter, kDual };

std::string_view to_string(Variant variant);
std::optional<Variant> parse_variant(std::string_view name);

/// Unordered vertex pair, first < second.
struct VertexPair {
  VertexId first = 0;
  VertexId second = 0;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Required pairs for `set` (sorted, distinct ids below n), in
/// lexicographic order.
std::vector<VertexPair> required_pairs(Variant variant,
                                       std::span<const VertexId> set,
                                       std::size_t vertex_count);

enum class Direction {
  kForward,   // first -> second
  kBackward,  // second -> first
};

std::string_view to_string(Direction direction);

/// One direction of a required pair that has no shortest path free of set
/// vertices. `restricted` is the shortest length among paths whose internal
/// vertices avoid the set; it exceeds `free` or is unreachable.
struct BlockedPair {
  VertexPair pair;
  Direction direction = Direction::kForward;
  Distance free;
  Distance restricted;

  friend bool operator==(const BlockedPair&, const BlockedPair&) = default;
};

struct VisibilityReport {
  bool valid = true;
  Variant variant = Variant::kStandard;
  std::vector<VertexId> set;
  /// Sorted by (pair, direction).
  std::vector<BlockedPair> blocked;
  std::size_t pairs_checked = 0;
};

/// True iff both x -> y and y -> x have a shortest path whose internal
/// vertices avoid `set`. Throws DomainError when x == y.
bool pair_visible(const Digraph& graph, std::span<const VertexId> set,
                  VertexId x, VertexId y);

/// Verification by free and restricted BFS per source (one pair of BFS runs
/// per set vertex for standard; forward and reverse runs per set vertex for
/// outer; every vertex for total and dual). Sources run in parallel; the
/// report does not depend on scheduling. Throws DomainError when the set is
/// not a subset of V. Duplicate set entries are ignored.
VisibilityReport verify(const Digraph& graph, std::vector<VertexId> set,
                        Variant variant = Variant::kStandard);

/// Single-threaded reference: all distance rows first, then the pairwise
/// comparison.
VisibilityReport verify_serial(const Digraph& graph, std::vector<VertexId> set,
                               Variant variant = Variant::kStandard);

struct NaiveOptions {
  std::size_t max_vertices = 12;
};

/// Test oracle. Distances come from Floyd-Warshall (restricted distances from
/// Floyd-Warshall over intermediate vertices outside the set) and the verdict
/// for each direction from enumerating shortest paths until one avoids the
/// set. Throws RefusalError above `options.max_vertices`.
VisibilityReport naive_verify(const Digraph& graph, std::vector<VertexId> set,
                              Variant variant = Variant::kStandard,
                              NaiveOptions options = {});

/// Early-exit form of naive_verify, for brute-force search.
bool naive_is_valid(const Digraph& graph, std::span<const VertexId> set,
                    Variant variant, NaiveOptions options = {});

namespace kernel {

/// naive_is_valid with the all-pairs distance table computed once, for
/// checking many sets against one graph.
class NaiveOracle {
 public:
  NaiveOracle(const Digraph& graph, NaiveOptions options = {});

  bool is_valid(std::span<const VertexId> set, Variant variant) const;

 private:
  const Digraph& graph_;
  std::vector<std::vector<Distance>> dist_;
};

/// Early-exit standard-variant check with reusable buffers; the solver's inner
/// loop. Not thread-safe; use one per thread.
class StandardChecker {
 public:
  explicit StandardChecker(const Digraph& graph);

  /// `set` must be distinct valid ids.
  bool is_valid(std::span<const VertexId> set);

 private:
  const Digraph& graph_;
  std::vector<char> mask_;
  BfsWorkspace free_;
  BfsWorkspace restricted_;
};

}  // namespace kernel
}  // namespace mvd
