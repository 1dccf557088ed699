#include "leafspan/extremal.hpp"

#include <algorithm>

#include "leafspan/blocks.hpp"
#include "leafspan/bounds.hpp"
#include "leafspan/operators.hpp"

namespace leafspan {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::InvalidParams, what);
}

VertexId last_pendant(const Graph& g) {
    VertexId out = -1;
    for (auto x : g.vertices()) {
        if (g.degree(x) == 1) out = x;
    }
    return out;
}

}  // namespace

const char* family_kind_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::TriangleTree: return "triangle-tree";
    case FamilyKind::CycleSpineSparse: return "cycle-spine-sparse";
    case FamilyKind::CycleSpineDense: return "cycle-spine-dense";
    }
    return "unknown";
}

FamilySpec FamilySpec::triangle_tree(std::int64_t n, std::int64_t copies) {
    FamilySpec s;
    s.kind = FamilyKind::TriangleTree;
    s.n = n;
    s.chain_count = copies;
    s.check();
    return s;
}

FamilySpec FamilySpec::cycle_spine(std::int64_t g, std::int64_t k, std::int64_t copies) {
    require(g >= 3 && k >= 1, "cycle-spine needs g >= 3 and k >= 1");
    FamilySpec s;
    s.g = g;
    s.k = k;
    s.chain_count = copies;
    if (k < g - 2) {
        s.kind = FamilyKind::CycleSpineSparse;
        s.n = alpha_n(g);
    } else {
        s.kind = FamilyKind::CycleSpineDense;
    }
    s.check();
    return s;
}

void FamilySpec::check() const {
    require(chain_count >= 1, "chain_count must be at least 1");
    switch (kind) {
    case FamilyKind::TriangleTree:
        require(n >= 1, "triangle-tree needs n >= 1");
        break;
    case FamilyKind::CycleSpineSparse:
        require(g >= 3 && k >= 1, "cycle-spine needs g >= 3 and k >= 1");
        require(k < g - 2, "sparse regime needs k < g - 2");
        require(n == alpha_n(g), "sparse regime needs n = ceil(g/2) - 1");
        break;
    case FamilyKind::CycleSpineDense:
        require(g >= 3 && k >= 1, "cycle-spine needs g >= 3 and k >= 1");
        require(k >= g - 2, "dense regime needs k >= g - 2");
        break;
    }
}

std::int64_t FamilySpec::base_vertices() const {
    switch (kind) {
    case FamilyKind::TriangleTree: return 4 * n + 2;
    case FamilyKind::CycleSpineSparse: return 2 * n + 2 + (n + 1) * (k + 1);
    case FamilyKind::CycleSpineDense: return g * (k + 2);
    }
    return 0;
}

std::int64_t FamilySpec::junction_loss() const {
    return kind == FamilyKind::TriangleTree ? 2 : k + 2;
}

std::int64_t FamilySpec::expected_vertices() const {
    return base_vertices() + (chain_count - 1) * (base_vertices() - junction_loss());
}

Graph gen_triangle_tree(std::int64_t n) {
    require(n >= 1, "triangle-tree needs n >= 1");
    std::vector<Edge> edges;
    VertexId next_pendant = 3 * n;
    for (std::int64_t i = 0; i < n; ++i) {
        const VertexId left = 3 * i, mid = 3 * i + 1, right = 3 * i + 2;
        edges.emplace_back(left, mid);
        edges.emplace_back(mid, right);
        edges.emplace_back(left, right);
        edges.emplace_back(mid, next_pendant++);
        if (i == 0) edges.emplace_back(left, next_pendant++);
        if (i + 1 < n) {
            edges.emplace_back(right, 3 * (i + 1));
        } else {
            edges.emplace_back(right, next_pendant++);
        }
    }
    return Graph::from_edges(std::move(edges));
}

Graph gen_cycle_spine(std::int64_t g, std::int64_t k) {
    auto spec = FamilySpec::cycle_spine(g, k);
    const bool sparse = spec.kind == FamilyKind::CycleSpineSparse;
    const std::int64_t cycle = sparse ? 2 * spec.n + 2 : g;
    const std::int64_t stride = sparse ? 2 : 1;

    std::vector<Edge> edges;
    for (std::int64_t i = 0; i < cycle; ++i) edges.emplace_back(i, (i + 1) % cycle);
    VertexId next = cycle;
    for (std::int64_t base = 0; base < cycle; base += stride) {
        VertexId prev = base;
        for (std::int64_t j = 0; j <= k; ++j) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(std::move(edges));
}

Graph generate(const FamilySpec& spec) {
    spec.check();
    if (spec.kind == FamilyKind::TriangleTree) return gen_triangle_tree(spec.n);
    return gen_cycle_spine(spec.g, spec.k);
}

Graph glue_extremal_chain(const FamilySpec& base, std::int64_t copies) {
    require(copies >= 1, "copies must be at least 1");
    FamilySpec one = base;
    one.chain_count = 1;
    const Graph piece = generate(one);
    Graph chain = piece;

    for (std::int64_t c = 1; c < copies; ++c) {
        const VertexId a = last_pendant(chain);
        if (base.kind == FamilyKind::TriangleTree) {
            const VertexId p = [&] {
                for (auto x : piece.vertices()) {
                    if (piece.degree(x) == 1) return x;
                }
                return VertexId{-1};
            }();
            const VertexId q = piece.neighbors(p).front();
            auto glued = glue(chain, a, piece, p);
            chain = contract_edge(glued.graph, Edge(a, glued.from_second.at(q))).graph;
            continue;
        }
        // Spine hanging off the lowest-id base; glue its free end to a, then
        // contract the k + 1 spine edges so a takes the base's place.
        const auto spines = find_spines(piece);
        const Spine& spine = spines.front();
        auto glued = glue(chain, a, piece, spine.path.back());
        std::vector<VertexId> walk;
        for (auto it = spine.path.rbegin() + 1; it != spine.path.rend(); ++it) {
            walk.push_back(glued.from_second.at(*it));
        }
        walk.push_back(glued.from_second.at(spine.base));
        Graph g = glued.graph;
        for (auto x : walk) g = contract_edge(g, Edge(a, x)).graph;
        chain = g;
    }
    return chain;
}

}  // namespace leafspan
