#include "leafspan/metrics.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace leafspan {

Girth girth(const Graph& g) {
    const std::size_t n = g.order();
    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::size_t best = inf;
    std::vector<std::size_t> dist(n), parent(n);

    // BFS from every root; a non-tree edge (x,y) closes a walk of length
    // dist[x]+dist[y]+1 through the root, and the minimum over roots is exact.
    for (std::size_t root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[root] = 0;
        parent[root] = inf;
        std::queue<std::size_t> q;
        q.push(root);
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            if (2 * dist[x] >= best) break;
            for (auto y : g.adjacency(x)) {
                if (dist[y] == inf) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == inf) return std::nullopt;
    return best;
}

std::size_t chain_metric(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<char> seen(n, 0);
    std::size_t best = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (seen[s] || g.adjacency(s).size() != 2) continue;
        std::size_t count = 0;
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++count;
            for (auto y : g.adjacency(x)) {
                if (!seen[y] && g.adjacency(y).size() == 2) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        best = std::max(best, count);
    }
    return best;
}

std::size_t s_count(const Graph& g) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.adjacency(i).size() != 2) ++count;
    }
    return count;
}

GraphMetrics measure(const Graph& g) {
    return GraphMetrics{girth(g), chain_metric(g), s_count(g), g.min_degree()};
}

}  // namespace leafspan
