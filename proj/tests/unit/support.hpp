#pragma once

#include <doctest.h>

#include <deque>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "leafspan/graph.hpp"
#include "leafspan/random.hpp"

namespace testing {

using leafspan::Edge;
using leafspan::Graph;
using leafspan::VertexId;

inline Graph graph_of(std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
    std::vector<Edge> edges;
    for (auto [a, b] : pairs) edges.emplace_back(a, b);
    return Graph::from_edges(std::move(edges));
}

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(std::move(edges), {0});
}

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(std::move(edges));
}

inline Graph star(int leaves) {
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(std::move(edges));
}

inline Graph complete(int n) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    }
    return Graph::from_edges(std::move(edges));
}

inline Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edges(std::move(edges));
}

/// Seeded stream of random connected graphs with v in [vmin, vmax].
class GraphStream {
public:
    GraphStream(std::uint64_t seed, std::size_t vmin, std::size_t vmax, double pmax = 0.6)
        : rng_(seed), vmin_(vmin), vmax_(vmax), pmax_(pmax) {}

    Graph next() {
        auto v = std::uniform_int_distribution<std::size_t>(vmin_, vmax_)(rng_);
        auto p = std::uniform_real_distribution<double>(0.0, pmax_)(rng_);
        return leafspan::random_connected_graph(v, p, rng_);
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::size_t vmin_, vmax_;
    double pmax_;
};

/// Number of connected components, by plain BFS over the edge list.
inline std::size_t count_components(const Graph& g) {
    std::size_t count = 0;
    std::vector<bool> seen(g.order(), false);
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        ++count;
        std::deque<std::size_t> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            auto x = queue.front();
            queue.pop_front();
            for (auto y : g.adjacency(x)) {
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
    }
    return count;
}

}  // namespace testing
