#pragma once

#include <filesystem>
#include <string>

#include "wmn/mmcg.hpp"

namespace wmn::mmcg {

/// Conflict-graph file schema:
///   {"variant": "classical"|"enhanced",
///    "vertices": [[[node, radio], [node, radio]], ...],
///    "edges": [[i, j], ...], "tid": n}
std::string conflict_graph_to_json(const ConflictGraph& cg);
void save_conflict_graph(const ConflictGraph& cg, const std::filesystem::path& path);

/// Per-vertex interference degree, CSV with header
/// a_node,a_radio,b_node,b_radio,degree.
std::string degrees_to_csv(const ConflictGraph& cg);
void save_degrees_csv(const ConflictGraph& cg, const std::filesystem::path& path);

}  // namespace wmn::mmcg
