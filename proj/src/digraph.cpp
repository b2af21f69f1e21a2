#include "mvd/digraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "mvd/error.hpp"

namespace mvd {

std::uint32_t Distance::hops() const {
  if (!reachable()) throw std::logic_error("hops() on unreachable distance");
  return hops_;
}

Digraph::Digraph(std::size_t n, std::vector<Arc> arcs,
                 std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n) {
    throw DomainError("label count " + std::to_string(labels_.size()) +
                      " does not match vertex count " + std::to_string(n));
  }
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) {
      throw DomainError("arc (" + std::to_string(a.tail) + "," +
                        std::to_string(a.head) + ") out of range for n=" +
                        std::to_string(n));
    }
    if (a.tail == a.head) {
      throw DomainError("self-loop at vertex " + std::to_string(a.tail));
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_targets_.resize(arcs.size());
  in_sources_.resize(arcs.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // Arcs are sorted by (tail, head), so each out-list comes out sorted and
  // each in-list receives tails in increasing order.
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out_targets_[i] = arcs[i].head;
    in_sources_[in_fill[arcs[i].head]++] = arcs[i].tail;
  }
  if (n == 0) {
    out_offsets_.clear();
    in_offsets_.clear();
  }
}

bool Digraph::has_arc(VertexId tail, VertexId head) const {
  if (!contains(tail) || !contains(head)) return false;
  auto nbrs = out_neighbors(tail);
  return std::binary_search(nbrs.begin(), nbrs.end(), head);
}

std::vector<Arc> Digraph::arcs() const {
  std::vector<Arc> result;
  result.reserve(arc_count());
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : out_neighbors(u)) result.push_back({u, v});
  }
  return result;
}

std::string Digraph::label(VertexId v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool Digraph::find_label(const std::string& name, VertexId& out) const {
  if (labels_.empty()) {
    if (name.empty() ||
        !std::all_of(name.begin(), name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return false;
    }
    try {
      unsigned long long id = std::stoull(name);
      if (id >= vertex_count()) return false;
      out = static_cast<VertexId>(id);
      return true;
    } catch (const std::out_of_range&) {
      return false;
    }
  }
  auto it = std::find(labels_.begin(), labels_.end(), name);
  if (it == labels_.end()) return false;
  out = static_cast<VertexId>(it - labels_.begin());
  return true;
}

Digraph Digraph::without_arc(Arc arc) const {
  if (!has_arc(arc.tail, arc.head)) {
    throw DomainError("arc (" + std::to_string(arc.tail) + "," +
                      std::to_string(arc.head) + ") not in graph");
  }
  std::vector<Arc> rest = arcs();
  rest.erase(std::find(rest.begin(), rest.end(), arc));
  return Digraph(vertex_count(), std::move(rest), labels_);
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arc_count());
  for (const Arc& a : arcs()) rev.push_back({a.head, a.tail});
  return Digraph(vertex_count(), std::move(rev), labels_);
}

Digraph Digraph::induced(std::span<const VertexId> vertices) const {
  std::vector<VertexId> index(vertex_count(), static_cast<VertexId>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!contains(vertices[i])) throw DomainError("induced: vertex out of range");
    index[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<Arc> sub;
  std::vector<std::string> sub_labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : out_neighbors(vertices[i])) {
      if (index[w] != static_cast<VertexId>(-1)) {
        sub.push_back({static_cast<VertexId>(i), index[w]});
      }
    }
    if (has_labels()) sub_labels.push_back(labels_[vertices[i]]);
  }
  return Digraph(vertices.size(), std::move(sub), std::move(sub_labels));
}

std::vector<char> make_mask(std::size_t n, std::span<const VertexId> vertices) {
  std::vector<char> mask(n, 0);
  for (VertexId v : vertices) {
    if (v >= n) throw DomainError("vertex " + std::to_string(v) + " out of range");
    mask[v] = 1;
  }
  return mask;
}

std::vector<VertexId> normalize_set(std::size_t n, std::vector<VertexId> vertices) {
  for (VertexId v : vertices) {
    if (v >= n) {
      throw DomainError("vertex " + std::to_string(v) +
                        " not in graph with " + std::to_string(n) + " vertices");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace mvd
