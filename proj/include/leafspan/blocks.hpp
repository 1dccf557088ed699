#pragma once

#include <vector>

#include "leafspan/graph.hpp"

namespace leafspan {

struct Block {
    std::vector<VertexId> vertices;  // sorted
    std::vector<Edge> edges;         // sorted
    std::vector<VertexId> boundary;  // cutpoints of the whole graph lying in this block
    std::vector<VertexId> interior;  // the remaining vertices
    bool is_large = false;           // |interior| > |boundary|
    bool is_empty = false;           // interior is empty
};

struct BlockDecomposition {
    std::vector<Block> blocks;  // ordered by smallest edge, then smallest vertex
    std::vector<VertexId> cutpoints;
    std::vector<Edge> bridges;

    bool has_large_block() const;
};

/// Throws Error{NotConnected}.
BlockDecomposition decompose_blocks(const Graph& g);

/// A pendant path hanging off `base`. `path` starts at the neighbour of the
/// base and ends at the pendant vertex.
struct Spine {
    std::vector<VertexId> path;
    VertexId base = 0;
};

/// All maximal spines, one per pendant vertex. Empty when g is itself a path.
std::vector<Spine> find_spines(const Graph& g);

/// True when `component` (a vertex set of g - base) is a spine with the given
/// base: a path joined to `base` by a single edge at one of its ends.
bool is_spine_component(const Graph& g, VertexId base, std::span<const VertexId> component);

/// Cutpoints whose removal does not just split off a single spine.
/// Throws Error{NotConnected}.
std::vector<VertexId> essential_cutpoints(const Graph& g);

}  // namespace leafspan
