#include "leafspan/spanning_tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "leafspan/blocks.hpp"

namespace leafspan {

namespace {

struct DisjointSets {
    std::vector<std::size_t> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

SpanningTree make_tree(Graph host, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    SpanningTree t{std::move(host), std::move(edges), 0};
    for (auto d : tree_degrees(t)) {
        if (d == 1) ++t.leaf_count;
    }
    return t;
}

std::vector<std::size_t> tree_degrees(const SpanningTree& t) {
    std::vector<std::size_t> deg(t.host.order(), 0);
    for (const auto& e : t.tree_edges) {
        ++deg[t.host.index_of(e.u)];
        ++deg[t.host.index_of(e.v)];
    }
    return deg;
}

bool is_tree_leaf(const SpanningTree& t, VertexId x) {
    std::size_t d = 0;
    for (const auto& e : t.tree_edges) {
        if (e.has(x)) ++d;
    }
    return d == 1;
}

TreeValidation validate(const SpanningTree& t) {
    TreeValidation out;
    auto fail = [&](std::string what, std::string detail) {
        out.ok = false;
        out.violation = std::move(what);
        out.detail = std::move(detail);
        return out;
    };
    const auto& g = t.host;
    for (const auto& e : t.tree_edges) {
        if (!g.has_edge(e)) return fail("subset", "edge " + edge_str(e) + " is not a host edge");
    }
    DisjointSets sets(g.order());
    for (const auto& e : t.tree_edges) {
        if (!sets.unite(g.index_of(e.u), g.index_of(e.v))) {
            return fail("acyclic", "edge " + edge_str(e) + " closes a cycle");
        }
    }
    for (std::size_t i = 1; i < g.order(); ++i) {
        if (sets.find(i) != sets.find(0)) {
            return fail("spanning", "vertex " + std::to_string(g.id_at(i)) + " is not reached");
        }
    }
    if (t.tree_edges.size() + 1 != g.order()) return fail("edge-count", "");
    for (auto d : tree_degrees(t)) {
        if (d == 1) ++out.leaf_count;
    }
    if (out.leaf_count != t.leaf_count) {
        return fail("leaf_count", "stored " + std::to_string(t.leaf_count) + ", actual " +
                                      std::to_string(out.leaf_count));
    }
    return out;
}

SpanningTree bfs_tree(const Graph& g, VertexId root) {
    std::vector<char> seen(g.order(), 0);
    std::vector<Edge> edges;
    std::queue<std::size_t> q;
    auto r = g.index_of(root);
    seen[r] = 1;
    q.push(r);
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        for (auto y : g.adjacency(x)) {
            if (!seen[y]) {
                seen[y] = 1;
                edges.emplace_back(g.id_at(x), g.id_at(y));
                q.push(y);
            }
        }
    }
    if (edges.size() + 1 != g.order()) throw Error(Errc::NotConnected, "bfs_tree");
    return make_tree(g, std::move(edges));
}

SpanningTree bfs_tree(const Graph& g) {
    if (g.order() == 0) throw Error(Errc::InvalidGraph, "empty graph");
    return bfs_tree(g, g.id_at(0));
}

SpanningTree glue_trees(const SpanningTree& t1, VertexId x1, const SpanningTree& t2, VertexId x2,
                        const Gluing& glued) {
    if (!is_tree_leaf(t1, x1)) throw Error(Errc::NotALeaf, std::to_string(x1) + " in first tree");
    if (!is_tree_leaf(t2, x2)) throw Error(Errc::NotALeaf, std::to_string(x2) + " in second tree");
    if (glued.from_first.at(x1) != glued.merged || glued.from_second.at(x2) != glued.merged) {
        throw Error(Errc::PreconditionViolated, "gluing was not made at the given leaves");
    }
    std::vector<Edge> edges;
    for (const auto& e : t1.tree_edges) {
        edges.emplace_back(glued.from_first.at(e.u), glued.from_first.at(e.v));
    }
    for (const auto& e : t2.tree_edges) {
        edges.emplace_back(glued.from_second.at(e.u), glued.from_second.at(e.v));
    }
    return make_tree(glued.graph, std::move(edges));
}

SpanningTree extend_tree_lemma3(const SpanningTree& t_prime, VertexId a, VertexId b, const Graph& g) {
    if (!g.has_vertex(a) || !g.has_vertex(b) || !g.adjacent(a, b)) {
        throw Error(Errc::PreconditionViolated, "adjacent: a and b must be adjacent in g");
    }
    const VertexId removed[] = {a};
    auto rest = g.without_vertices(removed);
    auto comps = rest.components();
    auto home = std::find_if(comps.begin(), comps.end(), [&](const auto& c) {
        return std::binary_search(c.begin(), c.end(), b);
    });
    if (!(t_prime.host == rest.induced(*home))) {
        throw Error(Errc::PreconditionViolated, "component: tree host is not the component of g - a containing b");
    }
    auto cut = decompose_blocks(t_prime.host).cutpoints;
    if (!std::binary_search(cut.begin(), cut.end(), b)) {
        throw Error(Errc::PreconditionViolated, "cutpoint: b is not a cutpoint of G'");
    }

    std::vector<Edge> edges = t_prime.tree_edges;
    edges.emplace_back(a, b);
    for (auto it = comps.begin(); it != comps.end(); ++it) {
        if (it == home) continue;
        VertexId anchor = -1;
        for (auto y : g.neighbors(a)) {
            if (std::binary_search(it->begin(), it->end(), y)) {
                anchor = y;
                break;
            }
        }
        auto sub = bfs_tree(rest.induced(*it), anchor);
        edges.insert(edges.end(), sub.tree_edges.begin(), sub.tree_edges.end());
        edges.emplace_back(a, anchor);
    }
    return make_tree(g, std::move(edges));
}

SpanningTree contract_tree(const SpanningTree& t, const Contraction& c) {
    if (!std::binary_search(t.tree_edges.begin(), t.tree_edges.end(), c.edge)) {
        throw Error(Errc::PreconditionViolated, "contracted edge " + edge_str(c.edge) + " is not a tree edge");
    }
    std::vector<Edge> edges;
    for (const auto& e : t.tree_edges) {
        if (e == c.edge) continue;
        edges.emplace_back(c.map(e.u), c.map(e.v));
    }
    return make_tree(c.graph, std::move(edges));
}

SpanningTree lift_tree(const SpanningTree& t, const Graph& original, const Contraction& c) {
    std::vector<Edge> edges{c.edge};
    auto expand = [&](VertexId other) {
        return original.adjacent(c.edge.u, other) ? Edge(c.edge.u, other) : Edge(c.edge.v, other);
    };
    for (const auto& e : t.tree_edges) {
        if (e.u == c.merged) {
            edges.push_back(expand(e.v));
        } else if (e.v == c.merged) {
            edges.push_back(expand(e.u));
        } else {
            edges.push_back(e);
        }
    }
    return make_tree(original, std::move(edges));
}

SpanningTree relabel_tree(const SpanningTree& t, const Graph& host,
                          const std::function<VertexId(VertexId)>& map) {
    std::vector<Edge> edges;
    for (const auto& e : t.tree_edges) edges.emplace_back(map(e.u), map(e.v));
    return make_tree(host, std::move(edges));
}

}  // namespace leafspan
