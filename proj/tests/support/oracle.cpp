#include "oracle.hpp"

#include <algorithm>

namespace testsupport {

namespace {

long double sq_dist(const wmn::Node& a, const wmn::Node& b) {
    const long double dx = static_cast<long double>(a.x) - b.x;
    const long double dy = static_cast<long double>(a.y) - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

bool oracle_links_conflict(const wmn::WmnGraph& g, const wmn::RadioLink& x,
                           const wmn::RadioLink& l, double delta) {
    // Rule 1: a common radio cannot serve two links at once.
    if (x.a == l.a || x.a == l.b || x.b == l.a || x.b == l.b) return true;

    // Rule 2: same mesh node, different radios.
    const wmn::NodeId xn[2] = {x.a.node, x.b.node};
    const wmn::NodeId ln[2] = {l.a.node, l.b.node};
    for (wmn::NodeId u : xn) {
        for (wmn::NodeId v : ln) {
            if (u == v) return false;
        }
    }

    // Rule 3: geometry, strict at the boundary.
    const long double factor = (1.0L + delta) * (1.0L + delta);
    const long double len_x = sq_dist(g.node(x.a.node), g.node(x.b.node));
    const long double len_l = sq_dist(g.node(l.a.node), g.node(l.b.node));
    for (wmn::NodeId u : xn) {
        for (wmn::NodeId v : ln) {
            const long double d = sq_dist(g.node(u), g.node(v));
            if (d < factor * len_x) return true;
            if (d < factor * len_l) return true;
        }
    }
    return false;
}

OracleGraph oracle_conflict_graph(const wmn::WmnGraph& g,
                                  const std::map<wmn::RadioId, int>& radio_channels,
                                  double delta, bool enhanced) {
    OracleGraph out;

    // Enumerate radio links directly from the node edges.
    std::vector<std::pair<wmn::RadioLink, int>> links;  // link, channel
    for (const auto& [u, v] : g.edges()) {
        for (int ru = 0; ru < g.node(u).radios; ++ru) {
            for (int rv = 0; rv < g.node(v).radios; ++rv) {
                const wmn::RadioLink link(wmn::RadioId{u, ru}, wmn::RadioId{v, rv});
                const int cu = radio_channels.at(link.a);
                const int cv = radio_channels.at(link.b);
                if (cu == cv) links.emplace_back(link, cu);
            }
        }
    }
    std::sort(links.begin(), links.end());
    for (const auto& [link, chan] : links) out.vertices.push_back(link);

    for (std::size_t i = 0; i < links.size(); ++i) {
        for (std::size_t j = i + 1; j < links.size(); ++j) {
            const auto& [lu, cu] = links[i];
            const auto& [lv, cv] = links[j];
            if (cu != cv) continue;
            bool conflict = oracle_links_conflict(g, lu, lv, delta);
            if (!conflict && enhanced) {
                // Co-location rule: same node, same channel.
                const wmn::NodeId un[2] = {lu.a.node, lu.b.node};
                const wmn::NodeId vn[2] = {lv.a.node, lv.b.node};
                for (wmn::NodeId a : un) {
                    for (wmn::NodeId b : vn) {
                        if (a == b) conflict = true;
                    }
                }
            }
            if (conflict) out.edges.insert({lu, lv});
        }
    }
    return out;
}

std::set<LinkPair> edge_set(const wmn::mmcg::ConflictGraph& cg) {
    std::set<LinkPair> out;
    for (const auto& [u, v] : cg.edges()) {
        wmn::RadioLink a = cg.vertices()[u];
        wmn::RadioLink b = cg.vertices()[v];
        if (b < a) std::swap(a, b);
        out.insert({a, b});
    }
    return out;
}

}  // namespace testsupport
