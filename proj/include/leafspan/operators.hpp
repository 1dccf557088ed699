#pragma once

#include <map>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Result of gluing `first` and `second` at one vertex each.
///
/// Ids of `first` are kept (the merged vertex keeps the id of x1). Every vertex
/// of `second` other than x2 is renumbered above first.max_id(), in increasing
/// id order, so the two vertex sets never collide.
struct Gluing {
    Graph graph;
    VertexId merged = 0;
    std::map<VertexId, VertexId> from_first;
    std::map<VertexId, VertexId> from_second;
};

Gluing glue(const Graph& first, VertexId x1, const Graph& second, VertexId x2);

/// Result of contracting one edge. The merged vertex keeps the smaller id;
/// the larger id disappears and every other id is unchanged.
struct Contraction {
    Graph graph;
    Edge edge;
    VertexId merged = 0;
    VertexId removed = 0;

    VertexId map(VertexId x) const { return x == removed ? merged : x; }
};

/// Loops are dropped and parallel edges merged, so the result stays simple.
/// Throws Error{EdgeNotFound}.
Contraction contract_edge(const Graph& g, Edge e);

}  // namespace leafspan
