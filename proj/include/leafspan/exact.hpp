#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <vector>

#include "leafspan/spanning_tree.hpp"

namespace leafspan {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct ExactResult {
    std::size_t u_value = 0;
    SpanningTree witness;
    std::uint64_t nodes_explored = 0;
    std::chrono::nanoseconds elapsed{0};
    /// False when the node budget ran out: u_value is then only a lower bound.
    bool exhaustive = true;
};

struct ExactOptions {
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool prune = true;
};

/// Maximum-leaf spanning tree by branch and bound.
///
/// For v >= 3 the internal vertices of any spanning tree form a connected
/// dominating set and vice versa, so u(G) = v - (minimum connected dominating
/// set). The search decides vertices as internal or leaf; cutpoints are forced
/// internal, pendant vertices forced leaves, and a vertex with a single
/// possible dominator forces that dominator internal.
///
/// Throws Error{NotConnected} and Error{PreconditionViolated} when v < 2.
ExactResult exact_mlst(const Graph& g, ExactOptions options = {});

/// Calls `visit` once per spanning tree (edge-set identity). Throws
/// Error{CapExceeded} as soon as more than `cap` trees exist.
void for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit);

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t cap);

/// Grows a tree from a maximum-degree vertex, always expanding the tree vertex
/// with the most neighbours outside the tree. No optimality guarantee.
SpanningTree greedy_leafy(const Graph& g);

}  // namespace leafspan
