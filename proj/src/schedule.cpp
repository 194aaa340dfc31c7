#include "wmn/schedule.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <set>

namespace wmn::evalsim {

namespace {

constexpr double kSaturationEps = 1e-12;

// Operational node-level adjacency and the operational links per node pair.
struct OperationalView {
    std::map<NodeId, std::vector<NodeId>> adjacency;
    std::map<NodeEdge, std::vector<RadioLink>> links;
};

OperationalView operational_view(const RadioGraph& rg, const ChannelAssignment& ca) {
    OperationalView view;
    for (const RadioLink& l : rg.links()) {
        if (!channel_of_link(ca, l)) continue;
        NodeEdge e{std::min(l.a.node, l.b.node), std::max(l.a.node, l.b.node)};
        view.links[e].push_back(l);
    }
    for (const auto& [edge, links] : view.links) {
        view.adjacency[edge.first].push_back(edge.second);
        view.adjacency[edge.second].push_back(edge.first);
    }
    for (auto& [node, neigh] : view.adjacency) {
        std::sort(neigh.begin(), neigh.end());
        neigh.erase(std::unique(neigh.begin(), neigh.end()), neigh.end());
    }
    return view;
}

}  // namespace

std::vector<RoutedFlow> route(const WmnGraph& g, const ChannelAssignment& ca,
                              const ConflictGraph& cg, const std::vector<FlowSpec>& flows) {
    RadioGraph rg = mmcg::expand(g);
    const OperationalView view = operational_view(rg, ca);

    std::vector<RoutedFlow> out;
    out.reserve(flows.size());
    for (const FlowSpec& flow : flows) {
        if (!g.has_node(flow.src) || !g.has_node(flow.dst)) {
            throw UnknownNode("flow " + flow.label + " references a node outside the topology");
        }
        // Hop counts towards the destination; walking greedily to the
        // smallest-id neighbor that makes progress yields the
        // lexicographically smallest shortest path.
        std::map<NodeId, int> dist;
        dist[flow.dst] = 0;
        std::vector<NodeId> frontier{flow.dst};
        while (!frontier.empty()) {
            std::vector<NodeId> next;
            for (NodeId cur : frontier) {
                auto it = view.adjacency.find(cur);
                if (it == view.adjacency.end()) continue;
                for (NodeId n : it->second) {
                    if (dist.emplace(n, dist[cur] + 1).second) next.push_back(n);
                }
            }
            frontier = std::move(next);
        }
        if (!dist.count(flow.src)) {
            throw NoRoute("no operational route for flow " + flow.label);
        }

        RoutedFlow routed;
        routed.flow = flow;
        routed.node_path.push_back(flow.src);
        NodeId cur = flow.src;
        while (cur != flow.dst) {
            const int want = dist.at(cur) - 1;
            NodeId step = cur;
            for (NodeId n : view.adjacency.at(cur)) {  // sorted: first hit is smallest id
                auto it = dist.find(n);
                if (it != dist.end() && it->second == want) {
                    step = n;
                    break;
                }
            }
            if (step == cur) {
                throw Error("routing walk stalled for flow " + flow.label);
            }

            // Carry the hop on the least-conflicted operational radio link.
            NodeEdge e{std::min(cur, step), std::max(cur, step)};
            const auto& candidates = view.links.at(e);  // canonical order
            const RadioLink* best = nullptr;
            int best_degree = std::numeric_limits<int>::max();
            for (const RadioLink& l : candidates) {
                auto idx = cg.index_of(l);
                if (!idx) {
                    throw InvalidParameter("routed link " + to_string(l) +
                                           " is missing from the conflict graph");
                }
                const int d = cg.degree(*idx);
                if (d < best_degree) {
                    best_degree = d;
                    best = &l;
                }
            }
            routed.link_path.push_back(*best);
            routed.node_path.push_back(step);
            cur = step;
        }
        out.push_back(std::move(routed));
    }
    return out;
}

namespace {

void bron_kerbosch(std::vector<int>& R, std::vector<int> P, std::vector<int> X,
                   const std::vector<std::vector<int>>& adj, std::size_t max_cliques,
                   std::vector<std::vector<int>>& out) {
    if (P.empty() && X.empty()) {
        if (out.size() >= max_cliques) {
            throw BudgetExceeded("maximal-clique enumeration exceeded its budget of " +
                                 std::to_string(max_cliques) + " cliques");
        }
        out.push_back(R);
        return;
    }
    // Pivot on the vertex covering most of P.
    int pivot = -1;
    std::size_t best_cover = 0;
    auto cover = [&](int u) {
        std::size_t c = 0;
        for (int v : P) {
            if (std::binary_search(adj[u].begin(), adj[u].end(), v)) ++c;
        }
        return c;
    };
    for (int u : P) {
        const std::size_t c = cover(u);
        if (pivot == -1 || c > best_cover) {
            pivot = u;
            best_cover = c;
        }
    }
    for (int u : X) {
        const std::size_t c = cover(u);
        if (pivot == -1 || c > best_cover) {
            pivot = u;
            best_cover = c;
        }
    }

    std::vector<int> candidates;
    for (int v : P) {
        if (pivot == -1 || !std::binary_search(adj[pivot].begin(), adj[pivot].end(), v)) {
            candidates.push_back(v);
        }
    }
    for (int v : candidates) {
        std::vector<int> Pn, Xn;
        for (int w : P) {
            if (std::binary_search(adj[v].begin(), adj[v].end(), w)) Pn.push_back(w);
        }
        for (int w : X) {
            if (std::binary_search(adj[v].begin(), adj[v].end(), w)) Xn.push_back(w);
        }
        R.push_back(v);
        bron_kerbosch(R, std::move(Pn), std::move(Xn), adj, max_cliques, out);
        R.pop_back();
        P.erase(std::find(P.begin(), P.end(), v));
        X.insert(std::lower_bound(X.begin(), X.end(), v), v);
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_maximal_cliques(
    const std::vector<std::vector<int>>& adjacency, std::size_t max_cliques) {
    std::vector<int> R, P(adjacency.size()), X;
    for (std::size_t i = 0; i < adjacency.size(); ++i) P[i] = static_cast<int>(i);
    std::vector<std::vector<int>> out;
    bron_kerbosch(R, std::move(P), std::move(X), adjacency, max_cliques, out);
    for (auto& clique : out) std::sort(clique.begin(), clique.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> maxmin_fair_rates(const std::vector<std::vector<int>>& cliques,
                                      const std::vector<std::vector<int>>& flow_links,
                                      double phy_rate_mbps) {
    const std::size_t flows = flow_links.size();
    std::vector<double> rates(flows, 0.0);
    std::vector<bool> frozen(flows, false);

    // Flows crossing each link.
    std::map<int, std::vector<std::size_t>> link_flows;
    for (std::size_t f = 0; f < flows; ++f) {
        assert(!flow_links[f].empty());
        for (int l : flow_links[f]) link_flows[l].push_back(f);
    }

    std::size_t remaining = flows;
    while (remaining > 0) {
        // Headroom per clique under a uniform raise of all unfrozen flows.
        double step = std::numeric_limits<double>::infinity();
        for (const auto& clique : cliques) {
            double load = 0.0;
            std::size_t raising = 0;
            for (int l : clique) {
                auto it = link_flows.find(l);
                if (it == link_flows.end()) continue;
                for (std::size_t f : it->second) {
                    load += rates[f] / phy_rate_mbps;
                    if (!frozen[f]) ++raising;
                }
            }
            if (raising > 0) {
                step = std::min(step, (1.0 - load) * phy_rate_mbps / raising);
            }
        }
        if (!std::isfinite(step)) break;  // nothing constrains the rest
        step = std::max(step, 0.0);
        for (std::size_t f = 0; f < flows; ++f) {
            if (!frozen[f]) rates[f] += step;
        }
        // Freeze every flow that crosses a saturated clique.
        bool any_frozen = false;
        for (const auto& clique : cliques) {
            double load = 0.0;
            for (int l : clique) {
                auto it = link_flows.find(l);
                if (it == link_flows.end()) continue;
                for (std::size_t f : it->second) load += rates[f] / phy_rate_mbps;
            }
            if (load >= 1.0 - kSaturationEps) {
                for (int l : clique) {
                    auto it = link_flows.find(l);
                    if (it == link_flows.end()) continue;
                    for (std::size_t f : it->second) {
                        if (!frozen[f]) {
                            frozen[f] = true;
                            --remaining;
                            any_frozen = true;
                        }
                    }
                }
            }
        }
        if (!any_frozen) break;  // numerical guard; should not trigger
    }
    return rates;
}

ScheduleResult schedule(const ConflictGraph& cg, const std::vector<RoutedFlow>& flows,
                        const ScheduleOptions& options) {
    ScheduleResult result;
    result.routed = flows;
    result.per_flow_mbps.assign(flows.size(), 0.0);
    if (flows.empty()) return result;

    // Active links: the union of all routed paths.
    std::set<RadioLink> active_set;
    for (const RoutedFlow& f : flows) {
        active_set.insert(f.link_path.begin(), f.link_path.end());
    }
    result.active_links.assign(active_set.begin(), active_set.end());
    if (result.active_links.size() > options.max_active_links) {
        throw BudgetExceeded("conflict graph restriction has " +
                             std::to_string(result.active_links.size()) +
                             " active links, above the clique-enumeration guard of " +
                             std::to_string(options.max_active_links));
    }

    std::map<RadioLink, int> active_index;
    std::vector<int> cg_index(result.active_links.size());
    for (std::size_t i = 0; i < result.active_links.size(); ++i) {
        active_index[result.active_links[i]] = static_cast<int>(i);
        auto idx = cg.index_of(result.active_links[i]);
        if (!idx) {
            throw InvalidParameter("active link " + to_string(result.active_links[i]) +
                                   " is missing from the conflict graph");
        }
        cg_index[i] = *idx;
    }

    // Conflict adjacency restricted to active links.
    const std::size_t n = result.active_links.size();
    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (cg.has_edge(cg_index[i], cg_index[j])) {
                adj[i].push_back(static_cast<int>(j));
                adj[j].push_back(static_cast<int>(i));
            }
        }
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    const auto cliques = enumerate_maximal_cliques(adj, options.max_cliques);

    std::vector<std::vector<int>> flow_links(flows.size());
    for (std::size_t f = 0; f < flows.size(); ++f) {
        for (const RadioLink& l : flows[f].link_path) {
            flow_links[f].push_back(active_index.at(l));
        }
    }
    result.per_flow_mbps = maxmin_fair_rates(cliques, flow_links, options.phy_rate_mbps);

    result.link_airtime.assign(n, 0.0);
    for (std::size_t f = 0; f < flows.size(); ++f) {
        result.aggregate_mbps += result.per_flow_mbps[f];
        for (int l : flow_links[f]) {
            result.link_airtime[l] += result.per_flow_mbps[f] / options.phy_rate_mbps;
        }
    }
    return result;
}

CaseResult evaluate(const WmnGraph& g, const ChannelAssignment& ca,
                    const ConflictPredicate& model, int test_class, int case_index,
                    const ScheduleOptions& options) {
    // The flow suites are defined on the grid layout; recover its shape.
    std::set<double> xs, ys;
    for (const Node& n : g.nodes()) {
        xs.insert(n.x);
        ys.insert(n.y);
    }
    const int rows = static_cast<int>(ys.size());
    const int cols = static_cast<int>(xs.size());
    if (static_cast<std::size_t>(rows) * cols != g.nodes().size()) {
        throw InvalidParameter("evaluate expects a rectangular grid topology");
    }

    RadioGraph rg = mmcg::expand(g);
    // Scheduling always sees the enhanced graph: radio co-location interferes
    // physically regardless of which variant informed the assignment.
    const ConflictGraph emmcg = mmcg::build_emmcg(rg, ca, model);

    FlowSuite suite = flow_suite(rows, cols, test_class, case_index);
    CaseResult out;
    out.test_class = test_class;
    out.case_name = suite.case_name;
    double sum = 0.0;
    for (const auto& flows : suite.combinations) {
        auto routed = route(g, ca, emmcg, flows);
        out.runs.push_back(schedule(emmcg, routed, options));
        sum += out.runs.back().aggregate_mbps;
    }
    out.mean_aggregate_mbps = suite.combinations.empty() ? 0.0 : sum / suite.combinations.size();
    return out;
}

}  // namespace wmn::evalsim
