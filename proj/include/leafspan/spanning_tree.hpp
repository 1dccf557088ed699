#pragma once

#include <functional>
#include <string>
#include <vector>

#include "leafspan/graph.hpp"
#include "leafspan/operators.hpp"

namespace leafspan {

/// Spanning-tree certificate over `host`. Build with make_tree(); check with
/// validate().
struct SpanningTree {
    Graph host;
    std::vector<Edge> tree_edges;  // sorted
    std::size_t leaf_count = 0;
};

/// Sorts the edges and counts tree-degree-1 vertices. Does not validate.
SpanningTree make_tree(Graph host, std::vector<Edge> edges);

std::vector<std::size_t> tree_degrees(const SpanningTree& t);  // indexed like host
bool is_tree_leaf(const SpanningTree& t, VertexId x);

struct TreeValidation {
    bool ok = true;
    std::string violation;  // "subset", "acyclic", "spanning", "edge-count", "leaf_count"
    std::string detail;
    std::size_t leaf_count = 0;  // recomputed

    explicit operator bool() const { return ok; }
};

TreeValidation validate(const SpanningTree& t);

/// Breadth-first tree from `root`, neighbours visited in increasing id order.
/// Throws Error{NotConnected}.
SpanningTree bfs_tree(const Graph& g, VertexId root);
SpanningTree bfs_tree(const Graph& g);

/// Joins t1 and t2 at their leaves x1 and x2, giving a tree of `glued.graph`
/// with leaf_count(t1) + leaf_count(t2) - 2 leaves. Throws Error{NotALeaf}.
SpanningTree glue_trees(const SpanningTree& t1, VertexId x1, const SpanningTree& t2, VertexId x2,
                        const Gluing& glued);

/// Given a tree of G' (the component of g - a containing b, with b a cutpoint
/// of G'), attach a to b and every other component of g - a to a. The result
/// has at least one more leaf than t_prime. Throws Error{PreconditionViolated}.
SpanningTree extend_tree_lemma3(const SpanningTree& t_prime, VertexId a, VertexId b, const Graph& g);

/// Pushes a tree of c's source graph through the contraction. The contracted
/// edge must be a tree edge.
SpanningTree contract_tree(const SpanningTree& t, const Contraction& c);

/// Pulls a tree of c.graph back to `original` by re-inserting the contracted
/// edge. Never loses leaves.
SpanningTree lift_tree(const SpanningTree& t, const Graph& original, const Contraction& c);

/// Re-expresses t over `host` through an id mapping.
SpanningTree relabel_tree(const SpanningTree& t, const Graph& host,
                          const std::function<VertexId(VertexId)>& map);

}  // namespace leafspan
