#pragma once

#include <filesystem>
#include <string>

#include "wmn/core.hpp"

namespace wmn {

/// Topology file schema:
///   {"tx_range_m": f, "nodes": [{"id": i, "x_m": f, "y_m": f, "radios": i}],
///    "edges": [[i, j], ...]}
/// "edges" is optional; when absent, every node pair within range is linked.
std::string topology_to_json(const WmnGraph& g);
WmnGraph topology_from_json(const std::string& text);

void save_topology(const WmnGraph& g, const std::filesystem::path& path);
WmnGraph load_topology(const std::filesystem::path& path);

}  // namespace wmn
