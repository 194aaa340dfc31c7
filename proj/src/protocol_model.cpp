#include "wmn/protocol_model.hpp"

#include <algorithm>

namespace wmn {

namespace {

void require_radio(const WmnGraph& g, const RadioId& r) {
    if (!g.has_node(r.node)) {
        throw UnknownRadio("radio " + to_string(r) + " references an unknown node");
    }
    const Node& n = g.node(r.node);
    if (r.radio < 0 || r.radio >= n.radios) {
        throw UnknownRadio("radio " + to_string(r) + " is out of range for node " +
                           std::to_string(r.node) + " (" + std::to_string(n.radios) +
                           " radios)");
    }
}

}  // namespace

ProtocolModel::ProtocolModel(ProtocolModelParams params) : params_(params) {
    if (params_.delta < 0.0) {
        throw InvalidParameter("protocol model delta must be non-negative");
    }
    if (params_.tx_range <= 0.0) {
        throw InvalidParameter("protocol model tx_range must be positive");
    }
}

bool links_conflict_protocol(const WmnGraph& g, const RadioLink& x, const RadioLink& l,
                             const ProtocolModelParams& params) {
    if (params.delta < 0.0 || params.tx_range <= 0.0) {
        throw InvalidParameter("protocol model requires delta >= 0 and a positive tx_range");
    }
    if (x == l) {
        throw InvalidParameter("conflict predicate requires two distinct links");
    }
    require_radio(g, x.a);
    require_radio(g, x.b);
    require_radio(g, l.a);
    require_radio(g, l.b);

    // Shared radio: the radio cannot transmit and receive concurrently.
    if (x.shares_radio(l)) return true;

    // Shared node, distinct radios: the classical predicate is blind to
    // co-located radios.
    if (x.shares_node(l)) return false;

    // Geometric test, squared to keep boundary cases exact. Equality with the
    // interference radius means successful reception, hence no conflict.
    const double k2 = (1.0 + params.delta) * (1.0 + params.delta);
    const double reach_x = k2 * g.dist_sq(x.a.node, x.b.node);
    const double reach_l = k2 * g.dist_sq(l.a.node, l.b.node);
    const NodeId xs[2] = {x.a.node, x.b.node};
    const NodeId ls[2] = {l.a.node, l.b.node};
    for (NodeId u : xs) {
        for (NodeId v : ls) {
            const double d2 = g.dist_sq(u, v);
            if (d2 < reach_x || d2 < reach_l) return true;
        }
    }
    return false;
}

}  // namespace wmn
