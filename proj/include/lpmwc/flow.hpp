#pragma once

#include "lpmwc/graph.hpp"

namespace lpmwc {

/// Minimum s-t cut: source_side is the residual-reachable set, value its
/// cut weight in the original graph.
struct StCut {
    VertexSet source_side;
    double value = 0.0;
};

/// Minimum-weight cut separating all sources from all sinks. Deterministic:
/// the returned side is the set of vertices reachable from the sources in
/// the final residual network. Multiple sources/sinks are reduced to the
/// single-pair case through a super source/sink joined by edges of capacity
/// 1 + total edge weight.
StCut min_st_cut(const Graph& g, const VertexSet& sources, const VertexSet& sinks);

StCut min_st_cut(const Graph& g, int source, const VertexSet& sinks);

}  // namespace lpmwc
