#include "leafspan/blocks.hpp"

#include <algorithm>
#include <utility>

namespace leafspan {

bool BlockDecomposition::has_large_block() const {
    return std::any_of(blocks.begin(), blocks.end(), [](const Block& b) { return b.is_large; });
}

BlockDecomposition decompose_blocks(const Graph& g) {
    if (!g.is_connected()) throw Error(Errc::NotConnected, "decompose_blocks");
    const std::size_t n = g.order();
    BlockDecomposition out;

    if (n == 1) {
        Block b;
        b.vertices = {g.id_at(0)};
        b.interior = b.vertices;
        b.is_large = true;
        out.blocks.push_back(std::move(b));
        return out;
    }

    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> disc(n, unvisited), low(n, 0), parent(n, unvisited);
    std::vector<char> is_cut(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
    std::vector<std::vector<Edge>> raw_blocks;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::size_t timer = 0;
    std::size_t root_children = 0;
    std::vector<Frame> stack;
    disc[0] = low[0] = timer++;
    stack.push_back({0, 0});

    while (!stack.empty()) {
        auto& frame = stack.back();
        const auto v = frame.v;
        auto adj = g.adjacency(v);
        if (frame.next < adj.size()) {
            const auto w = adj[frame.next++];
            if (disc[w] == unvisited) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                edge_stack.emplace_back(v, w);
                if (v == 0) ++root_children;
                stack.push_back({w, 0});
            } else if (w != parent[v] && disc[w] < disc[v]) {
                edge_stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        if (stack.empty()) break;
        const auto u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
            if (u != 0) is_cut[u] = 1;
            std::vector<Edge> block;
            while (true) {
                auto [a, b] = edge_stack.back();
                edge_stack.pop_back();
                block.emplace_back(g.id_at(a), g.id_at(b));
                if (a == u && b == v) break;
            }
            raw_blocks.push_back(std::move(block));
        }
    }
    if (root_children >= 2) is_cut[0] = 1;

    for (std::size_t i = 0; i < n; ++i) {
        if (is_cut[i]) out.cutpoints.push_back(g.id_at(i));
    }
    for (auto& edges : raw_blocks) {
        Block b;
        std::sort(edges.begin(), edges.end());
        for (const auto& e : edges) {
            b.vertices.push_back(e.u);
            b.vertices.push_back(e.v);
        }
        std::sort(b.vertices.begin(), b.vertices.end());
        b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
        for (auto x : b.vertices) {
            if (std::binary_search(out.cutpoints.begin(), out.cutpoints.end(), x)) {
                b.boundary.push_back(x);
            } else {
                b.interior.push_back(x);
            }
        }
        b.is_large = b.interior.size() > b.boundary.size();
        b.is_empty = b.interior.empty();
        if (edges.size() == 1) out.bridges.push_back(edges.front());
        b.edges = std::move(edges);
        out.blocks.push_back(std::move(b));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& a, const Block& b) { return a.edges.front() < b.edges.front(); });
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

bool is_spine_component(const Graph& g, VertexId base, std::span<const VertexId> component) {
    if (component.empty()) return false;
    std::vector<VertexId> comp(component.begin(), component.end());
    std::sort(comp.begin(), comp.end());
    auto inside = [&](VertexId x) { return std::binary_search(comp.begin(), comp.end(), x); };

    std::size_t links_to_base = 0;
    std::size_t internal_edges = 0;
    VertexId attach = 0;
    for (auto x : comp) {
        std::size_t inner_degree = 0;
        for (auto y : g.neighbors(x)) {
            if (y == base) {
                ++links_to_base;
                attach = x;
            } else if (inside(y)) {
                ++inner_degree;
            } else {
                return false;  // not a component of g - base
            }
        }
        if (inner_degree > 2) return false;
        internal_edges += inner_degree;
    }
    internal_edges /= 2;
    if (links_to_base != 1 || internal_edges + 1 != comp.size()) return false;
    // A connected component with |C|-1 edges and degrees <= 2 is a path; the
    // base must hang off one of its ends.
    std::size_t attach_inner = 0;
    for (auto y : g.neighbors(attach)) {
        if (y != base) ++attach_inner;
    }
    return attach_inner <= 1;
}

std::vector<Spine> find_spines(const Graph& g) {
    std::vector<Spine> out;
    for (auto p : g.vertices()) {
        if (g.degree(p) != 1) continue;
        std::vector<VertexId> walk{p};
        VertexId prev = p;
        VertexId cur = g.neighbors(p).front();
        bool is_path = false;
        while (true) {
            auto d = g.degree(cur);
            if (d == 1) {
                is_path = true;
                break;
            }
            if (d >= 3) break;
            auto nb = g.neighbors(cur);
            VertexId next = nb[0] == prev ? nb[1] : nb[0];
            walk.push_back(cur);
            prev = cur;
            cur = next;
        }
        if (is_path) return {};
        std::reverse(walk.begin(), walk.end());
        out.push_back(Spine{std::move(walk), cur});
    }
    std::sort(out.begin(), out.end(), [](const Spine& a, const Spine& b) {
        return std::pair(a.base, a.path.front()) < std::pair(b.base, b.path.front());
    });
    return out;
}

std::vector<VertexId> essential_cutpoints(const Graph& g) {
    auto blocks = decompose_blocks(g);
    std::vector<VertexId> out;
    for (auto a : blocks.cutpoints) {
        const VertexId removed[] = {a};
        auto comps = g.without_vertices(removed).components();
        bool inessential = comps.size() == 2 &&
                           (is_spine_component(g, a, comps[0]) || is_spine_component(g, a, comps[1]));
        if (!inessential) out.push_back(a);
    }
    return out;
}

}  // namespace leafspan
