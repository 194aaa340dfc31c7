#include "wmn/mmcg.hpp"

#include <algorithm>
#include <cassert>

namespace wmn::mmcg {

RadioGraph::RadioGraph(WmnGraph topology, std::vector<RadioId> radios,
                       std::vector<RadioLink> links)
    : topology_(std::move(topology)), radios_(std::move(radios)), links_(std::move(links)) {
    std::sort(radios_.begin(), radios_.end());
    std::sort(links_.begin(), links_.end());
}

std::optional<std::size_t> RadioGraph::link_index(const RadioLink& l) const {
    auto it = std::lower_bound(links_.begin(), links_.end(), l);
    if (it == links_.end() || *it != l) return std::nullopt;
    return static_cast<std::size_t>(it - links_.begin());
}

RadioGraph expand(const WmnGraph& g) {
    validate(g);

    std::vector<RadioId> radios;
    for (const Node& n : g.nodes()) {
        for (int r = 0; r < n.radios; ++r) {
            radios.push_back({n.id, r});
        }
    }

    std::vector<RadioLink> links;
    for (const auto& [u, v] : g.edges()) {
        const Node& nu = g.node(u);
        const Node& nv = g.node(v);
        for (int x = 0; x < nu.radios; ++x) {
            for (int y = 0; y < nv.radios; ++y) {
                links.emplace_back(RadioId{u, x}, RadioId{v, y});
            }
        }
    }
    return RadioGraph(g, std::move(radios), std::move(links));
}

ChannelAssignment::ChannelAssignment(std::map<RadioId, ChannelId> radio_channels,
                                     std::vector<ChannelId> channel_set, std::string scheme,
                                     std::optional<std::uint64_t> seed)
    : radio_channels_(std::move(radio_channels)),
      channel_set_(std::move(channel_set)),
      scheme_(std::move(scheme)),
      seed_(seed) {
    if (channel_set_.empty()) {
        throw InvalidParameter("channel set must not be empty");
    }
    for (const auto& [radio, chan] : radio_channels_) {
        if (std::find(channel_set_.begin(), channel_set_.end(), chan) == channel_set_.end()) {
            throw InvalidParameter("radio " + to_string(radio) +
                                   " assigned a channel outside the channel set");
        }
    }
}

ChannelAssignment ChannelAssignment::all_default(const RadioGraph& rg,
                                                 std::vector<ChannelId> channel_set) {
    if (channel_set.empty()) {
        throw InvalidParameter("channel set must not be empty");
    }
    std::map<RadioId, ChannelId> map;
    for (const RadioId& r : rg.radios()) {
        map.emplace(r, channel_set.front());
    }
    return ChannelAssignment(std::move(map), std::move(channel_set), "all-default",
                             std::nullopt);
}

ChannelId ChannelAssignment::channel(const RadioId& r) const {
    auto it = radio_channels_.find(r);
    if (it == radio_channels_.end()) {
        throw UnknownRadio("no channel assigned to radio " + to_string(r));
    }
    return it->second;
}

bool ChannelAssignment::has_radio(const RadioId& r) const {
    return radio_channels_.count(r) != 0;
}

std::optional<ChannelId> channel_of_link(const ChannelAssignment& ca, const RadioLink& v) {
    const ChannelId a = ca.channel(v.a);
    const ChannelId b = ca.channel(v.b);
    if (a != b) return std::nullopt;
    return a;
}

std::string to_string(Variant v) {
    return v == Variant::classical ? "classical" : "enhanced";
}

Variant variant_from_string(const std::string& s) {
    if (s == "classical") return Variant::classical;
    if (s == "enhanced") return Variant::enhanced;
    throw InvalidParameter("unknown conflict-graph variant: " + s);
}

ConflictGraph::ConflictGraph(Variant variant, std::string channel_context,
                             std::vector<RadioLink> vertices,
                             std::vector<std::pair<int, int>> edges)
    : variant_(variant),
      channel_context_(std::move(channel_context)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)) {
    assert(std::is_sorted(vertices_.begin(), vertices_.end()));
    const int n = static_cast<int>(vertices_.size());
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) {
            throw InvalidParameter("conflict edge references invalid vertex index");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adjacency_.assign(vertices_.size(), {});
    for (const auto& [u, v] : edges_) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) {
        std::sort(adj.begin(), adj.end());
    }
}

void ConflictGraph::check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= vertices_.size()) {
        throw UnknownVertex("conflict-graph vertex " + std::to_string(v) + " out of range");
    }
}

int ConflictGraph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
}

const std::vector<int>& ConflictGraph::neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
}

bool ConflictGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<int> ConflictGraph::index_of(const RadioLink& l) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), l);
    if (it == vertices_.end() || *it != l) return std::nullopt;
    return static_cast<int>(it - vertices_.begin());
}

namespace {

struct LinkGeometry {
    double ax, ay, bx, by;
    double reach2;  // ((1 + delta) * length)^2
};

// Adds an edge for every same-channel pair of links meeting at a node.
void add_colocation_edges(const std::vector<RadioLink>& verts,
                          const std::vector<ChannelId>& chan,
                          std::vector<std::pair<int, int>>& edges) {
    std::map<NodeId, std::vector<int>> incident;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        incident[verts[i].a.node].push_back(static_cast<int>(i));
        incident[verts[i].b.node].push_back(static_cast<int>(i));
    }
    for (const auto& [node, list] : incident) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (std::size_t j = i + 1; j < list.size(); ++j) {
                const int u = list[i];
                const int v = list[j];
                if (chan[u] == chan[v]) {
                    edges.emplace_back(u, v);
                }
            }
        }
    }
}

}  // namespace

ConflictGraph build_mmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                         const ConflictPredicate& model, Variant variant) {
    // Vertex set: operational links only (both radios on a common channel).
    std::vector<RadioLink> verts;
    std::vector<ChannelId> chan;
    verts.reserve(rg.links().size());
    for (const RadioLink& l : rg.links()) {
        if (auto c = channel_of_link(ca, l)) {
            verts.push_back(l);
            chan.push_back(*c);
        }
    }

    const WmnGraph& g = rg.topology();
    std::vector<std::pair<int, int>> edges;

    const auto* protocol = dynamic_cast<const ProtocolModel*>(&model);
    if (protocol != nullptr) {
        // Hot path: precompute endpoint coordinates and interference radii so
        // the pair scan stays cheap on sweep-sized grids.
        const double k2 =
            (1.0 + protocol->params().delta) * (1.0 + protocol->params().delta);
        std::vector<LinkGeometry> geo(verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) {
            const Node& na = g.node(verts[i].a.node);
            const Node& nb = g.node(verts[i].b.node);
            const double dx = na.x - nb.x;
            const double dy = na.y - nb.y;
            geo[i] = {na.x, na.y, nb.x, nb.y, k2 * (dx * dx + dy * dy)};
        }
        const int n = static_cast<int>(verts.size());
        for (int u = 0; u < n; ++u) {
            const RadioLink& lu = verts[u];
            const LinkGeometry& gu = geo[u];
            for (int v = u + 1; v < n; ++v) {
                if (chan[u] != chan[v]) continue;
                const RadioLink& lv = verts[v];
                if (lu.shares_radio(lv)) {
                    edges.emplace_back(u, v);
                    continue;
                }
                if (lu.shares_node(lv)) continue;
                const LinkGeometry& gv = geo[v];
                const double reach = std::max(gu.reach2, gv.reach2);
                const double d00x = gu.ax - gv.ax, d00y = gu.ay - gv.ay;
                const double d01x = gu.ax - gv.bx, d01y = gu.ay - gv.by;
                const double d10x = gu.bx - gv.ax, d10y = gu.by - gv.ay;
                const double d11x = gu.bx - gv.bx, d11y = gu.by - gv.by;
                if (d00x * d00x + d00y * d00y < reach || d01x * d01x + d01y * d01y < reach ||
                    d10x * d10x + d10y * d10y < reach || d11x * d11x + d11y * d11y < reach) {
                    edges.emplace_back(u, v);
                }
            }
        }
    } else {
        const int n = static_cast<int>(verts.size());
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (chan[u] != chan[v]) continue;
                if (model.conflicts(g, verts[u], verts[v])) {
                    edges.emplace_back(u, v);
                }
            }
        }
    }

    if (variant == Variant::enhanced) {
        add_colocation_edges(verts, chan, edges);
    }
    return ConflictGraph(variant, ca.scheme(), std::move(verts), std::move(edges));
}

ConflictGraph build_cmmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                          const ConflictPredicate& model) {
    return build_mmcg(rg, ca, model, Variant::classical);
}

ConflictGraph build_emmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                          const ConflictPredicate& model) {
    return build_mmcg(rg, ca, model, Variant::enhanced);
}

int interference_degree(const ConflictGraph& cg, int v) {
    return cg.degree(v);
}

std::size_t total_interference_degree(const ConflictGraph& cg) {
    return cg.tid();
}

LinkConflictCache::LinkConflictCache(const RadioGraph& rg, const ConflictPredicate& model)
    : n_(rg.links().size()) {
    model_.assign(n_ * n_, false);
    node_.assign(n_ * n_, false);
    const WmnGraph& g = rg.topology();
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) {
            const RadioLink& lu = rg.links()[u];
            const RadioLink& lv = rg.links()[v];
            const bool m = model.conflicts(g, lu, lv);
            const bool s = lu.shares_node(lv);
            model_[u * n_ + v] = model_[v * n_ + u] = m;
            node_[u * n_ + v] = node_[v * n_ + u] = s;
        }
    }
}

std::size_t LinkConflictCache::at(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) {
        throw InvalidParameter("link index out of range in conflict cache");
    }
    return u * n_ + v;
}

bool LinkConflictCache::model_conflict(std::size_t u, std::size_t v) const {
    return model_[at(u, v)];
}

bool LinkConflictCache::shares_node(std::size_t u, std::size_t v) const {
    return node_[at(u, v)];
}

std::size_t tid_under(const LinkConflictCache& cache, const RadioGraph& rg,
                      const ChannelAssignment& ca, Variant variant) {
    const auto& links = rg.links();
    std::vector<ChannelId> chan(links.size(), 0);
    std::vector<bool> operational(links.size(), false);
    for (std::size_t i = 0; i < links.size(); ++i) {
        if (auto c = channel_of_link(ca, links[i])) {
            operational[i] = true;
            chan[i] = *c;
        }
    }
    std::size_t tid = 0;
    for (std::size_t u = 0; u < links.size(); ++u) {
        if (!operational[u]) continue;
        for (std::size_t v = u + 1; v < links.size(); ++v) {
            if (!operational[v] || chan[u] != chan[v]) continue;
            if (cache.model_conflict(u, v) ||
                (variant == Variant::enhanced && cache.shares_node(u, v))) {
                ++tid;
            }
        }
    }
    return tid;
}

}  // namespace wmn::mmcg
