#include "wmn/ca.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "wmn/rng.hpp"

namespace wmn::ca {

namespace {

void check_channels(const CaConfig& cfg) {
    if (cfg.channels.empty()) {
        throw InvalidParameter("channel assignment needs a non-empty channel set");
    }
}

// Radio 0 of every node stays on the default channel. The reserved layer
// keeps the node-level topology connected no matter what the scan does with
// the remaining radios.
std::map<RadioId, ChannelId> reserved_defaults(const RadioGraph& rg, const CaConfig& cfg) {
    std::map<RadioId, ChannelId> fixed;
    for (const Node& n : rg.topology().nodes()) {
        fixed.emplace(RadioId{n.id, 0}, cfg.channels.front());
    }
    return fixed;
}

// Completes a partial radio->channel map: untouched radios fall back to the
// first channel.
ChannelAssignment finish(const RadioGraph& rg, std::map<RadioId, ChannelId> fixed,
                         const CaConfig& cfg, std::string scheme,
                         std::optional<std::uint64_t> seed) {
    for (const RadioId& r : rg.radios()) {
        fixed.emplace(r, cfg.channels.front());
    }
    return ChannelAssignment(std::move(fixed), cfg.channels, std::move(scheme), seed);
}

// Hop distance of every node from the start node over the full topology.
std::map<NodeId, int> hop_distances(const WmnGraph& g, NodeId start) {
    std::map<NodeId, int> dist;
    dist[start] = 0;
    std::queue<NodeId> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
        NodeId cur = frontier.front();
        frontier.pop();
        for (NodeId next : g.neighbors(cur)) {
            if (dist.emplace(next, dist[cur] + 1).second) {
                frontier.push(next);
            }
        }
    }
    return dist;
}

}  // namespace

ChannelAssignment bfs_ca(const RadioGraph& rg, const ConflictGraph& mmcg,
                         const CaConfig& cfg) {
    check_channels(cfg);
    if (!cfg.gateway) {
        throw GatewayMissing("bfs-ca requires a gateway node");
    }
    if (!rg.topology().has_node(*cfg.gateway)) {
        throw GatewayMissing("gateway node " + std::to_string(*cfg.gateway) +
                             " is not in the topology");
    }

    const auto hops = hop_distances(rg.topology(), *cfg.gateway);

    // Visit vertices by average gateway distance of their endpoints,
    // ties in canonical vertex order.
    const int n = static_cast<int>(mmcg.vertices().size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<double> avg(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const RadioLink& l = mmcg.vertices()[i];
        avg[i] = (hops.at(l.a.node) + hops.at(l.b.node)) / 2.0;
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (avg[a] != avg[b]) return avg[a] < avg[b];
        return a < b;
    });

    Rng rng(cfg.seed);
    std::map<RadioId, ChannelId> fixed = reserved_defaults(rg, cfg);
    for (int v : order) {
        // Channels already fixed on the neighbors' radios are taken.
        std::set<ChannelId> taken;
        for (int u : mmcg.neighbors(v)) {
            const RadioLink& lu = mmcg.vertices()[u];
            if (auto it = fixed.find(lu.a); it != fixed.end()) taken.insert(it->second);
            if (auto it = fixed.find(lu.b); it != fixed.end()) taken.insert(it->second);
        }
        ChannelId chosen = 0;
        bool found = false;
        for (ChannelId c : cfg.channels) {
            if (!taken.count(c)) {
                chosen = c;
                found = true;
                break;
            }
        }
        if (!found) {
            chosen = cfg.channels[rng.bounded(cfg.channels.size())];
        }
        const RadioLink& l = mmcg.vertices()[v];
        fixed.emplace(l.a, chosen);  // no-op when the radio is already fixed
        fixed.emplace(l.b, chosen);
    }
    return finish(rg, std::move(fixed), cfg, "bfs-ca", cfg.seed);
}

ChannelAssignment mais_ca(const RadioGraph& rg, const ConflictGraph& mmcg,
                          const CaConfig& cfg) {
    check_channels(cfg);
    const int n = static_cast<int>(mmcg.vertices().size());
    std::vector<bool> assigned(n, false);
    std::map<RadioId, ChannelId> fixed = reserved_defaults(rg, cfg);
    int remaining = n;

    // Channel a vertex is known to operate on given the radios fixed so far;
    // empty while undecided or when its radios disagree (non-operational).
    auto live_channel = [&](int v) -> std::optional<ChannelId> {
        const RadioLink& l = mmcg.vertices()[v];
        auto a = fixed.find(l.a);
        auto b = fixed.find(l.b);
        if (a == fixed.end() || b == fixed.end()) return std::nullopt;
        if (a->second != b->second) return std::nullopt;
        return a->second;
    };

    while (remaining > 0) {
        // Greedy minimum-degree maximal independent set of the graph induced
        // by the unassigned vertices.
        std::vector<bool> candidate(n);
        std::vector<int> degree(n, 0);
        for (int v = 0; v < n; ++v) candidate[v] = !assigned[v];
        for (int v = 0; v < n; ++v) {
            if (!candidate[v]) continue;
            for (int u : mmcg.neighbors(v)) {
                if (candidate[u]) ++degree[v];
            }
        }
        std::vector<int> mis;
        int left = remaining;
        while (left > 0) {
            int best = -1;
            for (int v = 0; v < n; ++v) {
                if (candidate[v] && (best == -1 || degree[v] < degree[best])) {
                    best = v;
                }
            }
            mis.push_back(best);
            // Remove the pick and its neighbors from the candidate pool.
            auto drop = [&](int v) {
                candidate[v] = false;
                --left;
                for (int u : mmcg.neighbors(v)) {
                    if (candidate[u]) --degree[u];
                }
            };
            drop(best);
            for (int u : mmcg.neighbors(best)) {
                if (candidate[u]) drop(u);
            }
        }
        std::sort(mis.begin(), mis.end());
        // Give the set the channel with the smallest conflict increment
        // against links whose channel is already decided (ties fall back to
        // channel order).
        ChannelId c = cfg.channels.front();
        long best_cost = -1;
        for (ChannelId cand : cfg.channels) {
            long cost = 0;
            for (int v : mis) {
                for (int u : mmcg.neighbors(v)) {
                    if (live_channel(u) == cand) ++cost;
                }
            }
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                c = cand;
            }
        }
        for (int v : mis) {
            assigned[v] = true;
            --remaining;
            const RadioLink& l = mmcg.vertices()[v];
            fixed.emplace(l.a, c);
            fixed.emplace(l.b, c);
        }
    }
    return finish(rg, std::move(fixed), cfg, "mais-ca", std::nullopt);
}

ChannelAssignment cen_ca(const RadioGraph& rg, const CaConfig& cfg,
                         const ConflictPredicate& model, Variant variant,
                         std::vector<std::size_t>* tid_trace) {
    check_channels(cfg);
    const mmcg::LinkConflictCache cache(rg, model);

    std::map<RadioId, ChannelId> map;
    for (const RadioId& r : rg.radios()) map.emplace(r, cfg.channels.front());
    const std::map<RadioId, ChannelId> reserved = reserved_defaults(rg, cfg);
    auto as_assignment = [&](const std::map<RadioId, ChannelId>& m) {
        return ChannelAssignment(m, cfg.channels, "cen-ca", std::nullopt);
    };
    // A move retunes the link's unreserved radios; reserved radios never leave
    // the default channel.
    auto movable = [&](const RadioId& r) { return reserved.find(r) == reserved.end(); };

    std::size_t current = mmcg::tid_under(cache, rg, as_assignment(map), variant);
    if (tid_trace) {
        tid_trace->clear();
        tid_trace->push_back(current);
    }

    bool improved = true;
    while (improved) {
        improved = false;
        for (const RadioLink& link : rg.links()) {
            const bool move_a = movable(link.a);
            const bool move_b = movable(link.b);
            if (!move_a && !move_b) continue;
            const ChannelId old_a = map.at(link.a);
            const ChannelId old_b = map.at(link.b);
            ChannelId best_channel = 0;
            std::size_t best_tid = current;
            bool found = false;
            for (ChannelId c : cfg.channels) {
                const ChannelId next_a = move_a ? c : old_a;
                const ChannelId next_b = move_b ? c : old_b;
                if (next_a == old_a && next_b == old_b) continue;
                map[link.a] = next_a;
                map[link.b] = next_b;
                const std::size_t t = mmcg::tid_under(cache, rg, as_assignment(map), variant);
                if (t < best_tid) {
                    best_tid = t;
                    best_channel = c;
                    found = true;
                }
            }
            if (found) {
                map[link.a] = move_a ? best_channel : old_a;
                map[link.b] = move_b ? best_channel : old_b;
                assert(best_tid < current);
                current = best_tid;
                if (tid_trace) tid_trace->push_back(current);
                improved = true;
            } else {
                map[link.a] = old_a;
                map[link.b] = old_b;
            }
        }
    }
    return ChannelAssignment(std::move(map), cfg.channels, "cen-ca", std::nullopt);
}

ChannelAssignment clq_ca(const RadioGraph& rg, const ConflictGraph& mmcg,
                         const CaConfig& cfg) {
    check_channels(cfg);
    const int n = static_cast<int>(mmcg.vertices().size());

    // Working copy of the edge set as adjacency sets.
    std::vector<std::set<int>> adj(n);
    for (const auto& [u, v] : mmcg.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::size_t remaining_edges = mmcg.edges().size();

    std::map<RadioId, ChannelId> fixed = reserved_defaults(rg, cfg);
    while (remaining_edges > 0) {
        // Greedy maximal clique: seed with the highest-degree vertex, extend
        // with the highest-degree common neighbor.
        int seed = -1;
        for (int v = 0; v < n; ++v) {
            if (!adj[v].empty() &&
                (seed == -1 || adj[v].size() > adj[seed].size())) {
                seed = v;
            }
        }
        std::vector<int> clique{seed};
        std::vector<int> common(adj[seed].begin(), adj[seed].end());
        while (!common.empty()) {
            int best = common.front();
            for (int v : common) {
                if (adj[v].size() > adj[best].size()) best = v;
            }
            clique.push_back(best);
            std::vector<int> next;
            for (int v : common) {
                if (v != best && adj[best].count(v)) next.push_back(v);
            }
            common = std::move(next);
        }
        std::sort(clique.begin(), clique.end());

        // Spread channels across the clique round-robin; first fix per radio
        // wins, later clashes stay best-effort.
        for (std::size_t k = 0; k < clique.size(); ++k) {
            const ChannelId c = cfg.channels[k % cfg.channels.size()];
            const RadioLink& l = mmcg.vertices()[clique[k]];
            fixed.emplace(l.a, c);
            fixed.emplace(l.b, c);
        }

        // The clique's internal conflicts have been handled this round.
        for (std::size_t i = 0; i < clique.size(); ++i) {
            for (std::size_t j = i + 1; j < clique.size(); ++j) {
                if (adj[clique[i]].erase(clique[j])) {
                    adj[clique[j]].erase(clique[i]);
                    --remaining_edges;
                }
            }
        }
    }
    return finish(rg, std::move(fixed), cfg, "clq-ca", std::nullopt);
}

bool preserves_connectivity(const RadioGraph& rg, const ChannelAssignment& ca) {
    const WmnGraph& g = rg.topology();
    if (g.nodes().size() <= 1) return true;

    std::map<NodeId, std::set<NodeId>> adj;
    for (const RadioLink& l : rg.links()) {
        if (channel_of_link(ca, l)) {
            adj[l.a.node].insert(l.b.node);
            adj[l.b.node].insert(l.a.node);
        }
    }

    std::set<NodeId> visited;
    std::queue<NodeId> frontier;
    const NodeId start = g.nodes().front().id;
    visited.insert(start);
    frontier.push(start);
    while (!frontier.empty()) {
        NodeId cur = frontier.front();
        frontier.pop();
        auto it = adj.find(cur);
        if (it == adj.end()) continue;
        for (NodeId next : it->second) {
            if (visited.insert(next).second) frontier.push(next);
        }
    }
    return visited.size() == g.nodes().size();
}

}  // namespace wmn::ca
