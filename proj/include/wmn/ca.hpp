#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wmn/mmcg.hpp"

namespace wmn::ca {

using mmcg::ChannelAssignment;
using mmcg::ChannelId;
using mmcg::ConflictGraph;
using mmcg::RadioGraph;
using mmcg::Variant;

struct CaConfig {
    std::vector<ChannelId> channels = {1, 2, 3};
    std::optional<NodeId> gateway;  // BFS-CA only
    std::uint64_t seed = 0;
};

/// Breadth-first scan of the conflict graph from the gateway outwards: each
/// vertex gets a channel orthogonal to its already-colored neighbors when one
/// exists, otherwise a seeded random pick. First channel fix per radio wins.
ChannelAssignment bfs_ca(const RadioGraph& rg, const ConflictGraph& mmcg, const CaConfig& cfg);

/// Repeatedly peels a greedy (minimum-degree) maximal independent set off the
/// conflict graph, giving each set the next channel round-robin.
ChannelAssignment mais_ca(const RadioGraph& rg, const ConflictGraph& mmcg, const CaConfig& cfg);

/// Local search from the all-default assignment: scan links in canonical
/// order, adopt the per-link channel move with the largest strict TID
/// decrease, stop when a full pass yields no improvement. The optional trace
/// records the TID after every accepted move (strictly decreasing).
ChannelAssignment cen_ca(const RadioGraph& rg, const CaConfig& cfg,
                         const ConflictPredicate& model, Variant variant,
                         std::vector<std::size_t>* tid_trace = nullptr);

/// Greedy maximal-clique channel spreading: find a maximal clique by maximum-
/// degree extension, spread the channel set round-robin across it, drop the
/// handled edges and repeat on the residual graph.
ChannelAssignment clq_ca(const RadioGraph& rg, const ConflictGraph& mmcg, const CaConfig& cfg);

/// True iff the node-level graph induced by operational links is connected.
bool preserves_connectivity(const RadioGraph& rg, const ChannelAssignment& ca);

}  // namespace wmn::ca
