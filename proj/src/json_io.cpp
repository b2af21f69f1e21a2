#include "mvd/json_io.hpp"

#include "mvd/structure.hpp"

namespace mvd {

using nlohmann::json;

json distance_to_json(Distance d) {
  return d.reachable() ? json(d.hops()) : json(nullptr);
}

namespace {
json labels_of(const Digraph& graph, const std::vector<VertexId>& vertices) {
  json out = json::array();
  for (VertexId v : vertices) out.push_back(graph.label(v));
  return out;
}
}  // namespace

json report_to_json(const Digraph& graph, const VisibilityReport& report) {
  json blocked = json::array();
  for (const BlockedPair& b : report.blocked) {
    blocked.push_back({
        {"x", graph.label(b.pair.first)},
        {"y", graph.label(b.pair.second)},
        {"direction", b.direction == Direction::kForward ? "x->y" : "y->x"},
        {"d_free", distance_to_json(b.free)},
        {"d_restricted", distance_to_json(b.restricted)},
    });
  }
  return {
      {"valid", report.valid},
      {"variant", std::string(to_string(report.variant))},
      {"set", labels_of(graph, report.set)},
      {"pairs_checked", report.pairs_checked},
      {"blocked", std::move(blocked)},
  };
}

json mu_to_json(const Digraph& graph, const MuResult& result, Variant variant) {
  return {
      {"mu", result.mu},
      {"witness", labels_of(graph, result.witness)},
      {"shortcut", std::string(to_string(result.shortcut))},
      {"nodes_explored", result.nodes_explored},
      {"feasible", result.feasible},
      {"variant", std::string(to_string(variant))},
  };
}

json analysis_to_json(const Digraph& graph) {
  const SccDecomposition d = scc(graph);
  json components = json::array();
  for (const auto& comp : d.components) components.push_back(labels_of(graph, comp));
  json condensation = json::array();
  for (const Arc& a : d.condensation.arcs()) condensation.push_back({a.tail, a.head});
  json bridges = json::array();
  const std::vector<Arc> found = strong_bridges(graph);
  for (const Arc& a : found) bridges.push_back({graph.label(a.tail), graph.label(a.head)});
  return {
      {"vertices", graph.vertex_count()},
      {"arcs", graph.arc_count()},
      {"components", std::move(components)},
      {"condensation", std::move(condensation)},
      {"bridges", std::move(bridges)},
      {"beta", found.size()},
      {"is_dag", d.components.size() == graph.vertex_count()},
      {"strongly_connected", d.components.size() == 1},
  };
}

}  // namespace mvd
