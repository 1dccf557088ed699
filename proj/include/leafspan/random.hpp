#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "leafspan/graph.hpp"

namespace leafspan {

/// Uniform random recursive tree on 0..v-1 plus every other pair with
/// probability p.
Graph random_connected_graph(std::size_t v, double p, std::mt19937_64& rng);

struct GraphConstraints {
    std::size_t v = 8;
    std::size_t min_degree = 1;
    std::optional<std::size_t> girth_at_least;  // nullopt: no constraint
    std::optional<std::size_t> ell_at_most;
};

/// Connected graph meeting all constraints, or Error{Infeasible} after
/// `attempts` rejected samples. Each attempt starts from a random tree and adds
/// girth-safe edges, lowest degree first, then breaks long chains.
Graph random_constrained_graph(const GraphConstraints& c, std::uint64_t seed, std::size_t attempts = 200);

/// True when g meets every constraint (rechecked through the metrics module).
bool satisfies(const Graph& g, const GraphConstraints& c);

}  // namespace leafspan
