#pragma once

#include "wmn/core.hpp"

namespace wmn {

/// Pluggable binary interference predicate: does concurrent activity on two
/// radio links interfere?
class ConflictPredicate {
  public:
    virtual ~ConflictPredicate() = default;
    virtual bool conflicts(const WmnGraph& g, const RadioLink& x, const RadioLink& l) const = 0;
};

/// Decides whether two radio links are potential interference links under the
/// bidirectional protocol model:
///   - links sharing a radio always conflict;
///   - links sharing only a mesh node never conflict here (the co-location
///     blind spot; the enhanced conflict-graph builder covers it);
///   - otherwise they conflict iff some endpoint of one lies strictly within
///     (1 + delta) times either link's length of an endpoint of the other.
bool links_conflict_protocol(const WmnGraph& g, const RadioLink& x, const RadioLink& l,
                             const ProtocolModelParams& params);

class ProtocolModel final : public ConflictPredicate {
  public:
    explicit ProtocolModel(ProtocolModelParams params);

    bool conflicts(const WmnGraph& g, const RadioLink& x, const RadioLink& l) const override {
        return links_conflict_protocol(g, x, l, params_);
    }

    const ProtocolModelParams& params() const { return params_; }

  private:
    ProtocolModelParams params_;
};

}  // namespace wmn
