#pragma once

#include <filesystem>
#include <string>

#include "wmn/ca.hpp"

namespace wmn::ca {

/// Assignment file: CSV `node_id,radio_index,channel`, sorted by (node, radio).
/// Scheme, seed, channel set and variant context go into a JSON sidecar
/// (`<path>.meta.json`).
std::string assignment_to_csv(const ChannelAssignment& ca);
void save_assignment(const ChannelAssignment& ca, const std::filesystem::path& csv_path,
                     const std::string& variant_context = "",
                     const std::string& config_hash = "");

/// Reads the CSV (and the sidecar when present) back into an assignment.
ChannelAssignment load_assignment(const std::filesystem::path& csv_path);

}  // namespace wmn::ca
