#include "leafspan/constructive.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "leafspan/blocks.hpp"
#include "leafspan/bounds.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/metrics.hpp"
#include "leafspan/operators.hpp"

namespace leafspan {

namespace {

constexpr int kMaxDepth = 4096;

using Child = std::function<SpanningTree(const Graph&)>;

bool contains(std::span<const VertexId> sorted, VertexId x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

std::vector<VertexId> component_of(const Graph& g, VertexId x) {
    for (auto& comp : g.components()) {
        if (contains(comp, x)) return comp;
    }
    throw Error(Errc::UnknownVertex, std::to_string(x));
}

bool is_cutpoint_of(const Graph& g, VertexId x) {
    auto comp = component_of(g, x);
    if (comp.size() < 3) return false;
    auto d = decompose_blocks(g.induced(comp));
    return contains(d.cutpoints, x);
}

void check_tree(const SpanningTree& t, const char* where) {
    auto v = validate(t);
    if (!v.ok) throw Error(Errc::PreconditionViolated, std::string(where) + ": " + v.violation + " " + v.detail);
}

std::vector<VertexId> edge_args(std::span<const Edge> edges) {
    std::vector<VertexId> out;
    for (const auto& e : edges) {
        out.push_back(e.u);
        out.push_back(e.v);
    }
    return out;
}

std::vector<Edge> args_edges(std::span<const VertexId> args) {
    if (args.size() % 2 != 0) throw Error(Errc::PreconditionViolated, "odd edge argument list");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < args.size(); i += 2) out.emplace_back(args[i], args[i + 1]);
    return out;
}

// ---- reductions shared by construction and replay ----

SpanningTree exec_contract(const Graph& g, Edge e, const Child& child) {
    auto c = contract_edge(g, e);
    return lift_tree(child(c.graph), g, c);
}

SpanningTree exec_delete(const Graph& g, std::span<const Edge> edges, const Child& child) {
    auto sub = g.without_edges(edges);
    if (!sub.is_connected()) throw Error(Errc::PreconditionViolated, "edge deletion disconnects the graph");
    return make_tree(g, child(sub).tree_edges);
}

SpanningTree exec_extend(const Graph& g, VertexId a, VertexId b, const Child& child) {
    if (!g.adjacent(a, b)) throw Error(Errc::PreconditionViolated, "extend: vertices not adjacent");
    const VertexId drop[] = {a};
    auto rest = g.without_vertices(drop);
    auto sub = rest.induced(component_of(rest, b));
    return extend_tree_lemma3(child(sub), a, b, g);
}

SpanningTree exec_extend_cut(const Graph& g, VertexId a, VertexId x, VertexId w, VertexId x2, const Child& child) {
    const Edge cut[] = {Edge(x2, w)};
    auto star = g.without_edges(cut);
    return make_tree(g, exec_extend(star, a, x, child).tree_edges);
}

struct Piece {
    Graph graph;
    VertexId pendant = 0;
    std::vector<VertexId> path;  // a, then the added vertices out to the pendant
};

// spine_len new vertices hang off a; when `always` is false this only happens
// if a has degree at least 2 in gi, otherwise a itself is the glue point.
Piece pad(const Graph& gi, VertexId a, std::int64_t spine_len, bool always, VertexId fresh) {
    Piece p{gi, a, {a}};
    if (!always && gi.degree(a) < 2) return p;
    std::vector<Edge> edges;
    std::vector<VertexId> added;
    VertexId prev = a;
    for (std::int64_t j = 0; j < spine_len; ++j) {
        edges.emplace_back(prev, fresh + j);
        added.push_back(fresh + j);
        prev = fresh + j;
    }
    p.graph = gi.with_edges(edges, added);
    p.pendant = prev;
    p.path.insert(p.path.end(), added.begin(), added.end());
    return p;
}

SpanningTree exec_split(const Graph& g, VertexId a, std::vector<VertexId> side, std::int64_t spine_len,
                        bool always, const Child& child) {
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    if (!g.has_vertex(a) || contains(side, a) || side.empty()) {
        throw Error(Errc::PreconditionViolated, "split: bad side");
    }
    std::vector<VertexId> first = side;
    first.push_back(a);
    std::sort(first.begin(), first.end());
    auto g1 = g.induced(first);
    auto g2 = g.without_vertices(side);
    for (const auto& e : g.edges()) {
        if (contains(side, e.u) != contains(side, e.v) && !e.has(a)) {
            throw Error(Errc::PreconditionViolated, "split: side is not separated by the cutpoint");
        }
    }
    if (!g1.is_connected() || !g2.is_connected() || g2.order() < 2) {
        throw Error(Errc::PreconditionViolated, "split: parts must be connected");
    }

    const VertexId fresh = g.max_id() + 1;
    auto p1 = pad(g1, a, spine_len, always, fresh);
    auto p2 = pad(g2, a, spine_len, always, fresh);
    auto t1 = child(p1.graph);
    auto t2 = child(p2.graph);

    auto glued = glue(p1.graph, p1.pendant, p2.graph, p2.pendant);
    auto t = glue_trees(t1, p1.pendant, t2, p2.pendant, glued);

    std::vector<VertexId> walk = p1.path;
    for (auto it = p2.path.rbegin() + 1; it != p2.path.rend(); ++it) walk.push_back(glued.from_second.at(*it));
    Graph cur = glued.graph;
    for (std::size_t i = 1; i < walk.size(); ++i) {
        auto c = contract_edge(cur, Edge(a, walk[i]));
        t = contract_tree(t, c);
        cur = c.graph;
    }

    std::map<VertexId, VertexId> back;
    const std::set<VertexId> gone(walk.begin(), walk.end());
    for (auto [old_id, new_id] : glued.from_second) {
        if (!gone.count(new_id)) back[new_id] = old_id;
    }
    auto map = [&](VertexId x) {
        auto it = back.find(x);
        return it == back.end() ? x : it->second;
    };
    std::vector<Edge> mapped;
    for (const auto& e : cur.edges()) mapped.emplace_back(map(e.u), map(e.v));
    std::sort(mapped.begin(), mapped.end());
    if (cur.order() != g.order() || !std::equal(mapped.begin(), mapped.end(), g.edges().begin(), g.edges().end())) {
        throw Error(Errc::PreconditionViolated, "split: recombined graph differs from the input");
    }
    return relabel_tree(t, g, map);
}

SpanningTree exec_base(const Graph& g, std::span<const VertexId> args) {
    auto t = make_tree(g, args_edges(args));
    check_tree(t, "base");
    return t;
}

// ---- descent bookkeeping ----

class Descent {
public:
    Descent(int theorem, std::int64_t k, DescentObserver observer)
        : observer_(std::move(observer)) {
        trace_.theorem = theorem;
        trace_.k = k;
    }

    ConstructionTrace& trace() { return trace_; }

protected:
    std::size_t record(std::string case_id, TraceOp op, std::vector<VertexId> args) {
        trace_.steps.push_back({std::move(case_id), op, std::move(args)});
        if (op == TraceOp::Base) trace_.base_kind = trace_.steps.back().case_id;
        return trace_.steps.size() - 1;
    }

    Child recurse(const Graph& parent, std::string case_id, const std::function<SpanningTree(const Graph&)>& solve) {
        return [this, &parent, case_id = std::move(case_id), &solve](const Graph& child) {
            if (observer_) observer_(parent, child, case_id);
            if (++depth_ > kMaxDepth) throw Error(Errc::PreconditionViolated, "descent too deep");
            auto t = solve(child);
            --depth_;
            return t;
        };
    }

    DescentObserver observer_;
    ConstructionTrace trace_;
    int depth_ = 0;
};

// ---- pendant-count descent ----

class Theorem1Descent : public Descent {
public:
    Theorem1Descent(const Theorem1Options& opt) : Descent(1, 0, opt.observer), exact_limit_(opt.exact_limit) {}

    SpanningTree solve(const Graph& g) {
        auto t = step(g);
        check_tree(t, "pendant-count descent");
        auto need = bound_theorem1(static_cast<std::int64_t>(s_count(g)));
        if (Rational(static_cast<std::int64_t>(t.leaf_count)) < need) {
            throw Error(Errc::BoundNotMet, "pendant-count descent: " + std::to_string(t.leaf_count) + " leaves, need " + to_string(need));
        }
        return t;
    }

private:
    SpanningTree step(const Graph& g) {
        const std::function<SpanningTree(const Graph&)> self = [this](const Graph& h) { return solve(h); };
        auto p = partition_uwxy(g);
        const auto& U = p.U;

        if (g.order() - U.size() <= 2) {
            std::vector<Edge> edges(g.edges().begin(), g.edges().end());
            record("H", TraceOp::Base, edge_args(edges));
            return exec_base(g, trace_.steps.back().args);
        }

        for (auto a : g.vertices()) {
            if (g.degree(a) != 2) continue;
            auto nb = g.neighbors(a);
            const VertexId b = nb.front();
            if (is_cutpoint_of(g, a)) {
                record("1", TraceOp::Contract, {a, b});
                return exec_contract(g, Edge(a, b), recurse(g, "1", self));
            }
            record("1", TraceOp::Delete, {a, b});
            const Edge e[] = {Edge(a, b)};
            return exec_delete(g, e, recurse(g, "1", self));
        }

        if (U.empty()) return kw_base(g);

        std::vector<VertexId> hv;
        std::set_difference(g.vertices().begin(), g.vertices().end(), U.begin(), U.end(), std::back_inserter(hv));
        auto H = g.induced(hv);
        auto hd = decompose_blocks(H);
        if (!hd.cutpoints.empty()) {
            const VertexId a = hd.cutpoints.front();
            const VertexId drop[] = {a};
            auto comp = H.without_vertices(drop).components().front();
            std::vector<VertexId> side = comp;
            for (auto u : U) {
                if (contains(comp, g.neighbors(u).front())) side.push_back(u);
            }
            std::sort(side.begin(), side.end());
            std::vector<VertexId> args{a};
            args.insert(args.end(), side.begin(), side.end());
            record("2", TraceOp::Split, std::move(args));
            return exec_split(g, a, side, 1, true, recurse(g, "2", self));
        }

        for (auto a : g.vertices()) {
            if (g.degree(a) > 3) continue;
            const VertexId drop[] = {a};
            auto rest = g.without_vertices(drop);
            for (auto b : g.neighbors(a)) {
                if (is_cutpoint_of(rest, b)) {
                    record("3", TraceOp::Extend, {a, b});
                    return exec_extend(g, a, b, recurse(g, "3", self));
                }
            }
        }

        for (const auto& e : H.edges()) {
            if (g.degree(e.u) >= 4 && g.degree(e.v) >= 4) {
                record("4", TraceOp::Delete, {e.u, e.v});
                const Edge del[] = {e};
                return exec_delete(g, del, recurse(g, "4", self));
            }
        }

        auto check = check_lemma5_structure(g, p);
        if (check.status != Lemma5Check::Status::Ok) {
            throw Error(Errc::BoundNotMet, "pendant-count descent: residual structure violates property " + check.property + ": " + check.detail);
        }
        const VertexId w = p.W.front();
        std::vector<VertexId> xs;
        for (auto y : g.neighbors(w)) {
            if (contains(p.X, y)) xs.push_back(y);
        }
        const VertexId x = xs[0], x2 = xs[1];
        VertexId a = -1;
        for (auto y : g.neighbors(x)) {
            if (y != w) {
                a = y;
                break;
            }
        }
        record("5", TraceOp::Extend, {a, x, w, x2});
        return exec_extend_cut(g, a, x, w, x2, recurse(g, "5", self));
    }

    SpanningTree kw_base(const Graph& g) {
        const auto need = bound_kw(static_cast<std::int64_t>(g.order()));
        SpanningTree t;
        bool ok = false;
        if (g.order() > exact_limit_) {
            t = greedy_leafy(g);
            ok = Rational(static_cast<std::int64_t>(t.leaf_count)) >= need;
        }
        if (!ok) t = exact_mlst(g).witness;
        if (Rational(static_cast<std::int64_t>(t.leaf_count)) < need) {
            throw Error(Errc::BoundNotMet, "minimum degree 3 base: " + std::to_string(t.leaf_count) + " leaves, need " + to_string(need));
        }
        record("KW", TraceOp::Base, edge_args(t.tree_edges));
        return t;
    }

    std::size_t exact_limit_;
};

// ---- chain-bound descent ----

class Theorem2Descent : public Descent {
public:
    Theorem2Descent(std::int64_t k, const Theorem2Options& opt) : Descent(2, k, opt.observer), k_(k) {}

    SpanningTree solve(const Graph& g) {
        const std::function<SpanningTree(const Graph&)> self = [this](const Graph& h) { return solve(h); };
        const auto v = static_cast<std::int64_t>(g.order());

        if (g.is_tree()) {
            std::vector<Edge> edges(g.edges().begin(), g.edges().end());
            record("tree", TraceOp::Base, edge_args(edges));
            return exec_base(g, trace_.steps.back().args);
        }
        if (v - k_ - 2 <= 0) {
            auto t = bfs_tree(g);
            record("small", TraceOp::Base, edge_args(t.tree_edges));
            return t;
        }

        for (auto a : essential_cutpoints(g)) {
            if (g.degree(a) < 3) continue;
            const VertexId drop[] = {a};
            auto comps = g.without_vertices(drop).components();
            std::vector<VertexId> side;
            if (comps.size() == 2) {
                side = comps.front();
            } else {
                for (auto& c : comps) {
                    if (!is_spine_component(g, a, c)) {
                        side = c;
                        break;
                    }
                }
            }
            if (side.empty()) continue;
            std::vector<VertexId> args{a};
            args.insert(args.end(), side.begin(), side.end());
            record("1.1", TraceOp::Split, std::move(args));
            return exec_split(g, a, side, k_ + 1, false, recurse(g, "1.1", self));
        }

        if (decompose_blocks(g).has_large_block()) {
            auto f = remove_large_blocks(g);
            record("1.2", TraceOp::Delete, edge_args(f));
            return exec_delete(g, f, recurse(g, "1.2", self));
        }

        return spine_base(g);
    }

private:
    SpanningTree spine_base(const Graph& g) {
        auto spines = find_spines(g);
        std::set<VertexId> on_spine, bases;
        std::vector<Edge> edges;
        for (const auto& s : spines) {
            bases.insert(s.base);
            VertexId prev = s.base;
            for (auto x : s.path) {
                on_spine.insert(x);
                edges.emplace_back(prev, x);
                prev = x;
            }
        }
        std::vector<VertexId> hv;
        for (auto x : g.vertices()) {
            if (!on_spine.count(x)) hv.push_back(x);
        }
        auto H = g.induced(hv);
        if (!H.is_connected() || !decompose_blocks(H).cutpoints.empty()) {
            throw Error(Errc::PreconditionViolated, "chain-bound base: central block is not biconnected");
        }
        VertexId interior = -1;
        for (auto x : hv) {
            if (!bases.count(x)) {
                interior = x;
                break;
            }
        }
        std::string kind = "2.1";
        if (interior < 0) {
            auto t = bfs_tree(H);
            edges.insert(edges.end(), t.tree_edges.begin(), t.tree_edges.end());
        } else {
            kind = "2.2";
            const VertexId drop[] = {interior};
            auto t = bfs_tree(H.without_vertices(drop));
            edges.insert(edges.end(), t.tree_edges.begin(), t.tree_edges.end());
            edges.emplace_back(interior, H.neighbors(interior).front());
        }
        record(kind, TraceOp::Base, edge_args(edges));
        return exec_base(g, trace_.steps.back().args);
    }

    std::int64_t k_;
};

// ---- replay ----

class Replayer {
public:
    explicit Replayer(const ConstructionTrace& trace) : trace_(trace) {}

    SpanningTree run(const Graph& g) {
        auto t = solve(g);
        if (pos_ != trace_.steps.size()) throw Error(Errc::PreconditionViolated, "trace has unused steps");
        return t;
    }

private:
    SpanningTree solve(const Graph& g) {
        if (pos_ >= trace_.steps.size()) throw Error(Errc::PreconditionViolated, "trace ended early");
        const auto& s = trace_.steps[pos_++];
        const auto& a = s.args;
        const Child self = [this](const Graph& h) { return solve(h); };
        auto need = [&](bool ok) {
            if (!ok) throw Error(Errc::PreconditionViolated, "malformed step: case=" + s.case_id);
        };
        try {
            switch (s.op) {
            case TraceOp::Base: return exec_base(g, a);
            case TraceOp::Contract: need(a.size() == 2); return exec_contract(g, Edge(a[0], a[1]), self);
            case TraceOp::Delete: {
                auto edges = args_edges(a);
                return exec_delete(g, edges, self);
            }
            case TraceOp::Extend:
                need(a.size() == 2 || a.size() == 4);
                if (a.size() == 2) return exec_extend(g, a[0], a[1], self);
                return exec_extend_cut(g, a[0], a[1], a[2], a[3], self);
            case TraceOp::Split: {
                need(a.size() >= 2);
                std::vector<VertexId> side(a.begin() + 1, a.end());
                if (trace_.theorem == 1) return exec_split(g, a[0], side, 1, true, self);
                return exec_split(g, a[0], side, trace_.k + 1, false, self);
            }
            }
        } catch (const Error& e) {
            if (e.code() == Errc::PreconditionViolated) throw;
            throw Error(Errc::PreconditionViolated, "replay failed at case=" + s.case_id + ": " + e.what());
        }
        throw Error(Errc::PreconditionViolated, "unknown trace op");
    }

    const ConstructionTrace& trace_;
    std::size_t pos_ = 0;
};

void require_input(const Graph& g) {
    if (g.order() < 2) throw Error(Errc::PreconditionViolated, "graph needs at least 2 vertices");
    if (!g.is_connected()) throw Error(Errc::NotConnected, "graph is not connected");
}

// ---- large block removal search ----

class LargeBlockSearch {
public:
    explicit LargeBlockSearch(const Graph& g) : g_(g) {}

    std::optional<std::vector<Edge>> run() {
        std::vector<Edge> removed;
        try {
            if (auto f = dfs(g_, removed)) return f;
        } catch (const BudgetSpent&) {
        }
        // A spanning tree on more than 2 vertices has no large block, so any
        // tree without new adjacent degree-2 pairs will do.
        std::vector<SpanningTree> trees{greedy_leafy(g_)};
        for (auto x : g_.vertices()) trees.push_back(bfs_tree(g_, x));
        for (const auto& t : trees) {
            if (bad_pair(t.host.without_edges(complement(t)))) continue;
            return complement(t);
        }
        return std::nullopt;
    }

private:
    struct BudgetSpent {};
    static constexpr std::size_t kNodeBudget = 20000;

    std::vector<Edge> complement(const SpanningTree& t) const {
        std::vector<Edge> out;
        std::set_difference(g_.edges().begin(), g_.edges().end(), t.tree_edges.begin(), t.tree_edges.end(),
                            std::back_inserter(out));
        return out;
    }

    std::optional<std::pair<VertexId, VertexId>> bad_pair(const Graph& h) const {
        for (const auto& e : h.edges()) {
            if (h.degree(e.u) == 2 && h.degree(e.v) == 2 && !(g_.degree(e.u) == 2 && g_.degree(e.v) == 2)) {
                return std::pair{e.u, e.v};
            }
        }
        return std::nullopt;
    }

    std::optional<std::vector<Edge>> dfs(const Graph& h, std::vector<Edge>& removed) {
        std::vector<Edge> key = removed;
        std::sort(key.begin(), key.end());
        if (dead_.count(key)) return std::nullopt;
        if (++nodes_ > kNodeBudget) throw BudgetSpent{};

        auto d = decompose_blocks(h);
        std::vector<Edge> candidates;
        const Block* target = nullptr;
        for (const auto& b : d.blocks) {
            if (b.is_large && (!target || b.interior.size() > target->interior.size())) target = &b;
        }
        if (target) {
            candidates = target->edges;
        } else if (auto bad = bad_pair(h)) {
            for (const auto& e : h.edges()) {
                if (e.has(bad->first) || e.has(bad->second)) candidates.push_back(e);
            }
        } else {
            return key;
        }

        std::erase_if(candidates, [&](const Edge& e) { return std::binary_search(d.bridges.begin(), d.bridges.end(), e); });
        auto rank = [&](const Edge& e) {
            auto lo = std::min(h.degree(e.u), h.degree(e.v));
            return std::pair{lo >= 4 ? 0 : 1, -static_cast<std::int64_t>(lo)};
        };
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](const Edge& x, const Edge& y) { return rank(x) < rank(y); });

        for (const auto& e : candidates) {
            const Edge del[] = {e};
            auto next = h.without_edges(del);
            removed.push_back(e);
            auto found = dfs(next, removed);
            removed.pop_back();
            if (found) return found;
        }
        dead_.insert(std::move(key));
        return std::nullopt;
    }

    const Graph& g_;
    std::set<std::vector<Edge>> dead_;
    std::size_t nodes_ = 0;
};

}  // namespace

const char* trace_op_name(TraceOp op) {
    switch (op) {
    case TraceOp::Contract: return "contract";
    case TraceOp::Delete: return "delete";
    case TraceOp::Split: return "split";
    case TraceOp::Extend: return "extend";
    case TraceOp::Base: return "base";
    }
    return "unknown";
}

std::string serialize_trace(const ConstructionTrace& trace) {
    std::ostringstream out;
    out << "trace theorem=" << trace.theorem << " k=" << trace.k << '\n';
    for (const auto& s : trace.steps) {
        out << "case=" << s.case_id << " op=" << trace_op_name(s.op) << " args=";
        for (std::size_t i = 0; i < s.args.size(); ++i) out << (i ? "," : "") << s.args[i];
        out << '\n';
    }
    return out.str();
}

PartitionUWXY partition_uwxy(const Graph& g) {
    PartitionUWXY p;
    std::set<VertexId> u, w, x;
    for (auto a : g.vertices()) {
        if (g.degree(a) == 1) u.insert(a);
    }
    for (auto a : u) {
        for (auto b : g.neighbors(a)) {
            if (!u.count(b)) w.insert(b);
        }
    }
    for (auto a : w) {
        for (auto b : g.neighbors(a)) {
            if (!u.count(b) && !w.count(b)) x.insert(b);
        }
    }
    for (auto a : g.vertices()) {
        if (u.count(a)) p.U.push_back(a);
        else if (w.count(a)) p.W.push_back(a);
        else if (x.count(a)) p.X.push_back(a);
        else p.Y.push_back(a);
    }
    return p;
}

Lemma5Check check_lemma5_structure(const Graph& g, const PartitionUWXY& p) {
    using S = Lemma5Check::Status;
    if (p.U.empty()) return {S::NotApplicable, "", "no pendant vertices"};
    auto fail = [](std::string prop, std::string detail) { return Lemma5Check{S::Violation, std::move(prop), std::move(detail)}; };
    for (auto w : p.W) {
        for (auto y : g.neighbors(w)) {
            if (contains(p.W, y)) return fail("1", std::to_string(w) + " and " + std::to_string(y) + " are adjacent");
        }
    }
    for (auto w : p.W) {
        if (g.degree(w) != 3) return fail("2", std::to_string(w) + " has degree " + std::to_string(g.degree(w)));
    }
    if (p.X.empty()) return fail("3", "X is empty");
    for (auto x : p.X) {
        if (g.degree(x) <= 3) return fail("3", std::to_string(x) + " has degree " + std::to_string(g.degree(x)));
    }
    for (auto w : p.W) {
        int pendants = 0, xs = 0;
        for (auto y : g.neighbors(w)) {
            pendants += contains(p.U, y);
            xs += contains(p.X, y);
        }
        if (pendants != 1 || xs != 2) return fail("4", std::to_string(w) + " has " + std::to_string(pendants) + " pendant and " + std::to_string(xs) + " X neighbours");
    }
    return {};
}

std::vector<Edge> remove_large_blocks(const Graph& g) {
    if (g.order() <= 2) throw Error(Errc::PreconditionViolated, "remove_large_blocks needs v > 2");
    if (!g.is_connected()) throw Error(Errc::NotConnected, "graph is not connected");
    LargeBlockSearch search(g);
    auto f = search.run();
    if (!f) throw Error(Errc::SearchExhausted, "no admissible edge set");
    return *f;
}

std::int64_t theorem2_girth_parameter(const Graph& g) {
    auto gi = girth(g);
    return gi ? static_cast<std::int64_t>(*gi) : 3;
}

Construction construct_theorem1(const Graph& g, const Theorem1Options& options) {
    require_input(g);
    Theorem1Descent d(options);
    auto t = d.solve(g);
    d.trace().tree = t;
    return {t, d.trace()};
}

Construction construct_theorem2(const Graph& g, std::int64_t k, const Theorem2Options& options) {
    if (k < 1) throw Error(Errc::InvalidParams, "k must be at least 1");
    require_input(g);
    const auto ell = static_cast<std::int64_t>(chain_metric(g));
    if (ell > k) throw Error(Errc::ChainTooLong, "chain metric " + std::to_string(ell) + " exceeds k = " + std::to_string(k));
    std::int64_t gp = theorem2_girth_parameter(g);
    if (options.girth) {
        auto real = girth(g);
        if (*options.girth < 3 || (real && *options.girth > static_cast<std::int64_t>(*real))) {
            throw Error(Errc::InvalidParams, "declared girth exceeds the girth of the graph");
        }
        gp = *options.girth;
    }

    Theorem2Descent d(k, options);
    auto t = d.solve(g);
    check_tree(t, "chain-bound descent");
    auto need = bound_theorem2(static_cast<std::int64_t>(g.order()), gp, k);
    if (Rational(static_cast<std::int64_t>(t.leaf_count)) < need) {
        throw Error(Errc::BoundNotMet, "chain-bound descent: " + std::to_string(t.leaf_count) + " leaves, need " + to_string(need));
    }
    d.trace().tree = t;
    return {t, d.trace()};
}

SpanningTree replay_trace(const Graph& g, const ConstructionTrace& trace) {
    require_input(g);
    Replayer r(trace);
    auto t = r.run(g);
    check_tree(t, "replay");
    return t;
}

}  // namespace leafspan
