#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wmn/errors.hpp"

namespace wmn {

using NodeId = std::int32_t;

/// One radio interface, addressed as (owning node, local radio index).
struct RadioId {
    NodeId node = 0;
    int radio = 0;

    auto operator<=>(const RadioId&) const = default;
};

std::string to_string(const RadioId& r);

/// Mesh router with planar coordinates and a radio count.
struct Node {
    NodeId id = 0;
    double x = 0.0;  // meters
    double y = 0.0;  // meters
    int radios = 1;
};

using NodeEdge = std::pair<NodeId, NodeId>;

/// Node-level mesh topology. Immutable after construction; validity
/// (connectivity, range, edge sanity) is checked separately by validate().
class WmnGraph {
  public:
    WmnGraph() = default;
    WmnGraph(std::vector<Node> nodes, std::vector<NodeEdge> edges, double tx_range_m);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<NodeEdge>& edges() const { return edges_; }
    double tx_range() const { return tx_range_; }

    bool has_node(NodeId id) const;
    const Node& node(NodeId id) const;  // throws UnknownNode

    double dist(NodeId a, NodeId b) const;
    double dist_sq(NodeId a, NodeId b) const;

    /// Neighbor ids, sorted ascending, duplicates collapsed.
    const std::vector<NodeId>& neighbors(NodeId id) const;

  private:
    std::vector<Node> nodes_;
    std::vector<NodeEdge> edges_;
    double tx_range_ = 0.0;
    std::unordered_map<NodeId, std::size_t> index_;
    std::vector<std::vector<NodeId>> adjacency_;

    std::size_t index_of(NodeId id) const;
};

/// Undirected link between two radios on distinct nodes.
/// Stored in canonical order: a < b lexicographically.
struct RadioLink {
    RadioId a;
    RadioId b;

    RadioLink() = default;
    RadioLink(RadioId x, RadioId y);

    bool contains(const RadioId& r) const { return a == r || b == r; }
    bool touches_node(NodeId n) const { return a.node == n || b.node == n; }
    bool shares_radio(const RadioLink& o) const {
        return contains(o.a) || contains(o.b);
    }
    bool shares_node(const RadioLink& o) const {
        return touches_node(o.a.node) || touches_node(o.b.node);
    }

    auto operator<=>(const RadioLink&) const = default;
};

std::string to_string(const RadioLink& l);

/// Parameters of the protocol interference model: an interferer within
/// (1 + delta) times the link length blocks reception.
struct ProtocolModelParams {
    double delta = 1.0;       // interference-to-communication margin
    double tx_range = 250.0;  // meters
};

/// Square-lattice topology generator. Nodes are numbered row-major from 1;
/// node (r, c) sits at (c * spacing, r * spacing). Every node pair within
/// tx_range is connected.
WmnGraph build_grid(int rows, int cols, double spacing_m, int radios_per_node,
                    double tx_range_m);

/// Checks all WmnGraph invariants; throws a ValidationError subclass on the
/// first violation found.
void validate(const WmnGraph& g);

}  // namespace wmn
