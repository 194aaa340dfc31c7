#include "wmn/core.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>

namespace wmn {

std::string to_string(const RadioId& r) {
    return "n" + std::to_string(r.node) + "r" + std::to_string(r.radio);
}

std::string to_string(const RadioLink& l) {
    return to_string(l.a) + "-" + to_string(l.b);
}

WmnGraph::WmnGraph(std::vector<Node> nodes, std::vector<NodeEdge> edges, double tx_range_m)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), tx_range_(tx_range_m) {
    index_.reserve(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        index_.emplace(nodes_[i].id, i);
    }
    adjacency_.assign(nodes_.size(), {});
    for (const auto& [u, v] : edges_) {
        auto iu = index_.find(u);
        auto iv = index_.find(v);
        if (iu == index_.end() || iv == index_.end() || u == v) {
            continue;  // validate() reports the malformed edge
        }
        adjacency_[iu->second].push_back(v);
        adjacency_[iv->second].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
        adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    }
}

bool WmnGraph::has_node(NodeId id) const {
    return index_.count(id) != 0;
}

std::size_t WmnGraph::index_of(NodeId id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw UnknownNode("unknown node id " + std::to_string(id));
    }
    return it->second;
}

const Node& WmnGraph::node(NodeId id) const {
    return nodes_[index_of(id)];
}

double WmnGraph::dist_sq(NodeId a, NodeId b) const {
    const Node& na = node(a);
    const Node& nb = node(b);
    const double dx = na.x - nb.x;
    const double dy = na.y - nb.y;
    return dx * dx + dy * dy;
}

double WmnGraph::dist(NodeId a, NodeId b) const {
    return std::sqrt(dist_sq(a, b));
}

const std::vector<NodeId>& WmnGraph::neighbors(NodeId id) const {
    return adjacency_[index_of(id)];
}

RadioLink::RadioLink(RadioId x, RadioId y) {
    if (x.node == y.node) {
        throw InvalidParameter("radio link endpoints must be on distinct nodes: " +
                               to_string(x) + ", " + to_string(y));
    }
    if (y < x) std::swap(x, y);
    a = x;
    b = y;
}

WmnGraph build_grid(int rows, int cols, double spacing_m, int radios_per_node,
                    double tx_range_m) {
    if (rows < 1 || cols < 1) {
        throw InvalidParameter("grid dimensions must be at least 1x1");
    }
    if (spacing_m <= 0.0) {
        throw InvalidParameter("grid spacing must be positive");
    }
    if (radios_per_node < 1) {
        throw InvalidParameter("nodes need at least one radio");
    }
    if (tx_range_m <= 0.0) {
        throw InvalidParameter("transmission range must be positive");
    }
    if (spacing_m > tx_range_m) {
        throw InvalidParameter("grid spacing exceeds transmission range; lattice would be disconnected");
    }

    std::vector<Node> nodes;
    nodes.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            Node n;
            n.id = r * cols + c + 1;  // row-major, 1-based
            n.x = c * spacing_m;
            n.y = r * spacing_m;
            n.radios = radios_per_node;
            nodes.push_back(n);
        }
    }

    std::vector<NodeEdge> edges;
    const double range_sq = tx_range_m * tx_range_m;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            const double dx = nodes[i].x - nodes[j].x;
            const double dy = nodes[i].y - nodes[j].y;
            if (dx * dx + dy * dy <= range_sq) {
                edges.emplace_back(nodes[i].id, nodes[j].id);
            }
        }
    }
    return WmnGraph(std::move(nodes), std::move(edges), tx_range_m);
}

void validate(const WmnGraph& g) {
    if (g.nodes().empty()) {
        throw InvalidTopology("topology has no nodes");
    }
    if (g.tx_range() <= 0.0) {
        throw InvalidTopology("transmission range must be positive");
    }
    std::set<NodeId> ids;
    for (const Node& n : g.nodes()) {
        if (!ids.insert(n.id).second) {
            throw InvalidTopology("duplicate node id " + std::to_string(n.id));
        }
        if (n.radios < 1) {
            throw InvalidTopology("node " + std::to_string(n.id) + " has no radios");
        }
    }

    std::set<NodeEdge> seen;
    const double range_sq = g.tx_range() * g.tx_range();
    for (const auto& [u, v] : g.edges()) {
        if (u == v) {
            throw InvalidEdge("self-loop at node " + std::to_string(u));
        }
        if (!g.has_node(u) || !g.has_node(v)) {
            throw InvalidEdge("edge references unknown node: " + std::to_string(u) +
                              "-" + std::to_string(v));
        }
        NodeEdge canon{std::min(u, v), std::max(u, v)};
        if (!seen.insert(canon).second) {
            throw DuplicateEdge("duplicate edge " + std::to_string(canon.first) + "-" +
                                std::to_string(canon.second));
        }
        if (g.dist_sq(u, v) > range_sq) {
            throw RangeViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " is longer than the transmission range");
        }
    }

    // BFS reachability from the first node.
    std::set<NodeId> visited;
    std::queue<NodeId> frontier;
    frontier.push(g.nodes().front().id);
    visited.insert(g.nodes().front().id);
    while (!frontier.empty()) {
        NodeId cur = frontier.front();
        frontier.pop();
        for (NodeId next : g.neighbors(cur)) {
            if (visited.insert(next).second) {
                frontier.push(next);
            }
        }
    }
    if (visited.size() != g.nodes().size()) {
        throw DisconnectedTopology("topology is not connected (" +
                                   std::to_string(visited.size()) + " of " +
                                   std::to_string(g.nodes().size()) + " nodes reachable)");
    }
}

}  // namespace wmn
