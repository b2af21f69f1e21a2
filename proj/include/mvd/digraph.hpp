#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvd {

using VertexId = std::uint32_t;

struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Shortest-path length, or the unreachable sentinel. Unreachable never
/// compares equal to a finite value and has no numeric value.
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t hops) : hops_(hops) {}

  static constexpr Distance unreachable() { return Distance{}; }

  constexpr bool reachable() const { return hops_ != kSentinel; }
  /// Throws std::logic_error when unreachable.
  std::uint32_t hops() const;

  /// Finite distances order by length; unreachable is greater than all of them.
  friend constexpr auto operator<=>(const Distance&, const Distance&) = default;

 private:
  static constexpr std::uint32_t kSentinel =
      std::numeric_limits<std::uint32_t>::max();
  std::uint32_t hops_ = kSentinel;
};

using DistanceVector = std::vector<Distance>;

/// Immutable simple digraph over dense vertex ids [0, n).
///
/// Out- and in-adjacency are stored in CSR form and sorted by neighbor id, so
/// iteration order is canonical. Optional labels give display names.
class Digraph {
 public:
  Digraph() = default;

  /// Builds a canonical digraph. Duplicate arcs collapse; self-loops and
  /// out-of-range endpoints throw DomainError. `labels` is empty or has
  /// exactly n entries.
  Digraph(std::size_t n, std::vector<Arc> arcs,
          std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t arc_count() const { return out_targets_.size(); }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  bool has_arc(VertexId tail, VertexId head) const;
  bool contains(VertexId v) const { return v < vertex_count(); }

  /// All arcs in lexicographic (tail, head) order.
  std::vector<Arc> arcs() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The label of v, or its decimal index when the graph is unlabeled.
  std::string label(VertexId v) const;
  /// Inverse of label(); returns false when no vertex carries `name`.
  bool find_label(const std::string& name, VertexId& out) const;

  /// Same vertex set with one arc removed. Throws DomainError if absent.
  Digraph without_arc(Arc arc) const;
  /// Same vertices, every arc reversed.
  Digraph reversed() const;
  /// Subgraph induced by `vertices` (sorted, distinct); vertex i of the
  /// result is vertices[i]. Labels carry over.
  Digraph induced(std::span<const VertexId> vertices) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<std::size_t> out_offsets_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_;
  std::vector<VertexId> in_sources_;
  std::vector<std::string> labels_;
};

/// Membership mask over the vertices of a graph, built from a vertex list.
std::vector<char> make_mask(std::size_t n, std::span<const VertexId> vertices);

/// Sorts and deduplicates; throws DomainError if any id is >= n.
std::vector<VertexId> normalize_set(std::size_t n, std::vector<VertexId> vertices);

}  // namespace mvd
