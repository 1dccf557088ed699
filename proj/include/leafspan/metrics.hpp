#pragma once

#include <cstddef>
#include <optional>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Shortest cycle length; std::nullopt marks an acyclic graph (forest).
using Girth = std::optional<std::size_t>;

Girth girth(const Graph& g);

/// Largest number of vertices in a maximal run of successively adjacent
/// degree-2 vertices. A graph that is a single cycle counts as one run of
/// v(G) vertices.
std::size_t chain_metric(const Graph& g);

/// Number of vertices whose degree is not 2.
std::size_t s_count(const Graph& g);

struct GraphMetrics {
    Girth girth;
    std::size_t chain_metric_ell = 0;
    std::size_t s_count = 0;
    std::size_t min_degree = 0;
};

GraphMetrics measure(const Graph& g);

}  // namespace leafspan
