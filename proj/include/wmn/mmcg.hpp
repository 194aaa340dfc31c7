#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wmn/core.hpp"
#include "wmn/protocol_model.hpp"

namespace wmn::mmcg {

/// Per-radio view of the mesh: every node split into its radios, every
/// node-level edge expanded into all radio pairs across it.
class RadioGraph {
  public:
    RadioGraph(WmnGraph topology, std::vector<RadioId> radios, std::vector<RadioLink> links);

    const WmnGraph& topology() const { return topology_; }
    const std::vector<RadioId>& radios() const { return radios_; }
    const std::vector<RadioLink>& links() const { return links_; }

    std::optional<std::size_t> link_index(const RadioLink& l) const;

  private:
    WmnGraph topology_;
    std::vector<RadioId> radios_;  // sorted
    std::vector<RadioLink> links_;  // sorted canonically
};

/// Splits a validated topology into its radio-level intermediate graph.
RadioGraph expand(const WmnGraph& g);

using ChannelId = int;

/// Radio -> channel map plus provenance. A radio link is operational only
/// when both endpoint radios agree on a channel.
class ChannelAssignment {
  public:
    ChannelAssignment(std::map<RadioId, ChannelId> radio_channels,
                      std::vector<ChannelId> channel_set, std::string scheme,
                      std::optional<std::uint64_t> seed);

    /// Every radio of the graph on channel_set.front().
    static ChannelAssignment all_default(const RadioGraph& rg,
                                         std::vector<ChannelId> channel_set = {1});

    ChannelId channel(const RadioId& r) const;  // throws UnknownRadio
    bool has_radio(const RadioId& r) const;

    const std::map<RadioId, ChannelId>& radio_channels() const { return radio_channels_; }
    const std::vector<ChannelId>& channel_set() const { return channel_set_; }
    const std::string& scheme() const { return scheme_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    bool operator==(const ChannelAssignment&) const = default;

  private:
    std::map<RadioId, ChannelId> radio_channels_;
    std::vector<ChannelId> channel_set_;
    std::string scheme_;
    std::optional<std::uint64_t> seed_;
};

/// Common channel of the link's endpoint radios, or nullopt when they
/// disagree (the link is then non-operational and carries no traffic).
std::optional<ChannelId> channel_of_link(const ChannelAssignment& ca, const RadioLink& v);

enum class Variant { classical, enhanced };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// Conflict graph: vertices are operational radio links, edges join links
/// that interfere on a common channel.
class ConflictGraph {
  public:
    ConflictGraph(Variant variant, std::string channel_context,
                  std::vector<RadioLink> vertices, std::vector<std::pair<int, int>> edges);

    Variant variant() const { return variant_; }
    const std::string& channel_context() const { return channel_context_; }
    const std::vector<RadioLink>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::size_t tid() const { return edges_.size(); }
    int degree(int v) const;  // throws UnknownVertex
    const std::vector<int>& neighbors(int v) const;
    bool has_edge(int u, int v) const;
    std::optional<int> index_of(const RadioLink& l) const;

  private:
    Variant variant_;
    std::string channel_context_;
    std::vector<RadioLink> vertices_;           // sorted canonically
    std::vector<std::pair<int, int>> edges_;    // i < j, sorted lexicographically
    std::vector<std::vector<int>> adjacency_;

    void check_vertex(int v) const;
};

/// Classical builder: conflicts come from the interference model alone,
/// gated on channel equality.
ConflictGraph build_cmmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                          const ConflictPredicate& model);

/// Co-location-aware builder: classical edges plus an edge for every pair of
/// same-channel links that originate or terminate at a common node.
ConflictGraph build_emmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                          const ConflictPredicate& model);

ConflictGraph build_mmcg(const RadioGraph& rg, const ChannelAssignment& ca,
                         const ConflictPredicate& model, Variant variant);

/// Number of conflict-graph neighbors of vertex v.
int interference_degree(const ConflictGraph& cg, int v);

/// Edge count of the conflict graph (half the degree sum).
std::size_t total_interference_degree(const ConflictGraph& cg);

/// Pairwise model verdicts for one radio graph, precomputed so that local
/// search (CEN-CA) can re-score candidate assignments without rebuilding.
/// Quadratic in link count; intended for desk-scale graphs.
class LinkConflictCache {
  public:
    LinkConflictCache(const RadioGraph& rg, const ConflictPredicate& model);

    std::size_t link_count() const { return n_; }
    bool model_conflict(std::size_t u, std::size_t v) const;
    bool shares_node(std::size_t u, std::size_t v) const;

  private:
    std::size_t n_;
    std::vector<bool> model_;
    std::vector<bool> node_;

    std::size_t at(std::size_t u, std::size_t v) const;
};

/// TID of the MMCG that build_mmcg would produce, without materializing it.
std::size_t tid_under(const LinkConflictCache& cache, const RadioGraph& rg,
                      const ChannelAssignment& ca, Variant variant);

}  // namespace wmn::mmcg
