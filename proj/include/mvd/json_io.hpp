#pragma once

#include <json.hpp>

#include "mvd/digraph.hpp"
#include "mvd/solver.hpp"
#include "mvd/visibility.hpp"

namespace mvd {

// JSON documents use std::map-backed objects, so keys come out sorted and
// dumps are byte-stable. Vertices are written by label.

/// {valid, variant, set, pairs_checked, blocked: [{x, y, direction, d_free,
/// d_restricted}]}; unreachable distances are null, direction is "x->y" or
/// "y->x".
nlohmann::json report_to_json(const Digraph& graph, const VisibilityReport& report);

/// {mu, witness, shortcut, nodes_explored, feasible, variant}
nlohmann::json mu_to_json(const Digraph& graph, const MuResult& result, Variant variant);

/// {vertices, arcs, components, condensation, bridges, beta, is_dag,
/// strongly_connected}
nlohmann::json analysis_to_json(const Digraph& graph);

nlohmann::json distance_to_json(Distance d);

}  // namespace mvd
