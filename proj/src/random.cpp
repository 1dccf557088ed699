#include "leafspan/random.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "leafspan/error.hpp"
#include "leafspan/metrics.hpp"

namespace leafspan {

namespace {

using Adj = std::vector<std::set<std::size_t>>;

Adj random_tree(std::size_t v, std::mt19937_64& rng) {
    std::vector<std::size_t> label(v);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    Adj adj(v);
    for (std::size_t i = 1; i < v; ++i) {
        auto j = std::uniform_int_distribution<std::size_t>(0, i - 1)(rng);
        adj[label[i]].insert(label[j]);
        adj[label[j]].insert(label[i]);
    }
    return adj;
}

Graph to_graph(const Adj& adj) {
    std::vector<Edge> edges;
    std::vector<VertexId> ids(adj.size());
    std::iota(ids.begin(), ids.end(), 0);
    for (std::size_t a = 0; a < adj.size(); ++a) {
        for (auto b : adj[a]) {
            if (a < b) edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
        }
    }
    return Graph(std::move(ids), std::move(edges));
}

// Vertices within `radius` of x.
std::vector<bool> ball(const Adj& adj, std::size_t x, std::size_t radius) {
    std::vector<std::size_t> dist(adj.size(), SIZE_MAX);
    std::vector<bool> in(adj.size(), false);
    std::deque<std::size_t> queue{x};
    dist[x] = 0;
    in[x] = true;
    while (!queue.empty()) {
        auto y = queue.front();
        queue.pop_front();
        if (dist[y] == radius) continue;
        for (auto z : adj[y]) {
            if (dist[z] == SIZE_MAX) {
                dist[z] = dist[y] + 1;
                in[z] = true;
                queue.push_back(z);
            }
        }
    }
    return in;
}

// Partners y for x such that adding xy keeps every cycle at least `girth` long.
std::vector<std::size_t> safe_partners(const Adj& adj, std::size_t x, std::optional<std::size_t> girth) {
    const std::size_t radius = girth && *girth >= 3 ? *girth - 2 : 1;
    auto near = ball(adj, x, radius);
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < adj.size(); ++y) {
        if (!near[y]) out.push_back(y);
    }
    return out;
}

bool try_add(Adj& adj, std::size_t x, const GraphConstraints& c, std::mt19937_64& rng, bool avoid_two) {
    auto partners = safe_partners(adj, x, c.girth_at_least);
    if (partners.empty()) return false;
    // Prefer partners still below the minimum degree, then low degree overall.
    std::shuffle(partners.begin(), partners.end(), rng);
    std::stable_sort(partners.begin(), partners.end(), [&](std::size_t a, std::size_t b) {
        auto key = [&](std::size_t y) {
            const auto d = adj[y].size();
            const int shape = avoid_two && d == 1 ? 1 : 0;  // a pendant would become a chain vertex
            return std::pair{shape, d < c.min_degree ? 0 : 1};
        };
        return key(a) < key(b);
    });
    auto y = partners.front();
    adj[x].insert(y);
    adj[y].insert(x);
    return true;
}

std::optional<Graph> attempt(const GraphConstraints& c, std::mt19937_64& rng) {
    auto adj = random_tree(c.v, rng);
    const std::size_t v = c.v;

    for (std::size_t guard = 0; guard < v * v; ++guard) {
        std::vector<std::size_t> low;
        for (std::size_t x = 0; x < v; ++x) {
            if (adj[x].size() < c.min_degree) low.push_back(x);
        }
        if (low.empty()) break;
        auto x = low[std::uniform_int_distribution<std::size_t>(0, low.size() - 1)(rng)];
        if (!try_add(adj, x, c, rng, false)) return std::nullopt;
    }

    // Sprinkle a few extra edges so the corpus is not all minimum-degree graphs.
    const auto extra = std::uniform_int_distribution<std::size_t>(0, v / 3)(rng);
    for (std::size_t i = 0; i < extra; ++i) {
        auto x = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
        auto before = adj;
        if (!try_add(adj, x, c, rng, c.ell_at_most.has_value())) break;
        if (c.ell_at_most && chain_metric(to_graph(adj)) > *c.ell_at_most && chain_metric(to_graph(before)) <= *c.ell_at_most) {
            adj = std::move(before);
        }
    }

    if (c.ell_at_most) {
        for (std::size_t guard = 0; guard < v * v; ++guard) {
            auto g = to_graph(adj);
            if (chain_metric(g) <= *c.ell_at_most) break;
            std::vector<std::size_t> twos;
            for (std::size_t x = 0; x < v; ++x) {
                if (adj[x].size() == 2) twos.push_back(x);
            }
            auto x = twos[std::uniform_int_distribution<std::size_t>(0, twos.size() - 1)(rng)];
            if (!try_add(adj, x, c, rng, true)) return std::nullopt;
        }
    }

    auto g = to_graph(adj);
    if (!satisfies(g, c)) return std::nullopt;
    return g;
}

}  // namespace

Graph random_connected_graph(std::size_t v, double p, std::mt19937_64& rng) {
    if (v == 0) throw Error(Errc::InvalidParams, "v must be positive");
    auto adj = random_tree(v, rng);
    std::bernoulli_distribution coin(std::clamp(p, 0.0, 1.0));
    for (std::size_t a = 0; a < v; ++a) {
        for (std::size_t b = a + 1; b < v; ++b) {
            if (adj[a].count(b)) continue;
            if (coin(rng)) {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
    }
    return to_graph(adj);
}

bool satisfies(const Graph& g, const GraphConstraints& c) {
    if (g.order() != c.v || !g.is_connected()) return false;
    if (g.min_degree() < c.min_degree) return false;
    if (c.girth_at_least) {
        auto gi = girth(g);
        if (gi && *gi < *c.girth_at_least) return false;
    }
    if (c.ell_at_most && chain_metric(g) > *c.ell_at_most) return false;
    return true;
}

Graph random_constrained_graph(const GraphConstraints& c, std::uint64_t seed, std::size_t attempts) {
    if (c.v == 0) throw Error(Errc::InvalidParams, "v must be positive");
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < attempts; ++i) {
        if (auto g = attempt(c, rng)) return *g;
    }
    throw Error(Errc::Infeasible, "no graph found in " + std::to_string(attempts) + " attempts");
}

}  // namespace leafspan
