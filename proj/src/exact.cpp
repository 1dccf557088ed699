#include "leafspan/exact.hpp"

#include <algorithm>
#include <numeric>

#include "leafspan/blocks.hpp"

namespace leafspan {

namespace {

enum : std::uint8_t { Undecided = 0, Internal = 1, Leaf = 2 };

class CdsSearch {
public:
    CdsSearch(const Graph& g, ExactOptions options) : g_(g), n_(g.order()), options_(options) {}

    ExactResult run() {
        auto start = std::chrono::steady_clock::now();
        best_ = greedy_leafy(g_);

        std::vector<std::uint8_t> status(n_, Undecided);
        for (auto c : decompose_blocks(g_).cutpoints) status[g_.index_of(c)] = Internal;
        for (std::size_t i = 0; i < n_; ++i) {
            if (g_.adjacency(i).size() == 1) status[i] = Leaf;
        }
        search(status);

        ExactResult out;
        out.u_value = best_.leaf_count;
        out.witness = best_;
        out.nodes_explored = nodes_;
        out.exhaustive = !budget_hit_;
        out.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
        return out;
    }

private:
    // Returns false when the partial assignment cannot be completed.
    bool propagate(std::vector<std::uint8_t>& status) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t x = 0; x < n_; ++x) {
                if (status[x] != Leaf) continue;
                std::size_t open = 0;
                std::size_t candidate = 0;
                bool dominated = false;
                for (auto y : g_.adjacency(x)) {
                    if (status[y] == Internal) {
                        dominated = true;
                        break;
                    }
                    if (status[y] == Undecided) {
                        ++open;
                        candidate = y;
                    }
                }
                if (dominated) continue;
                if (open == 0) return false;
                if (open == 1) {
                    status[candidate] = Internal;
                    changed = true;
                }
            }
        }
        return true;
    }

    // Internal vertices must share one component of G[Internal + Undecided].
    bool internal_reachable(const std::vector<std::uint8_t>& status) const {
        std::size_t first = n_;
        std::size_t internal = 0;
        for (std::size_t x = 0; x < n_; ++x) {
            if (status[x] == Internal) {
                if (first == n_) first = x;
                ++internal;
            }
        }
        if (internal <= 1) return true;
        std::vector<char> seen(n_, 0);
        std::vector<std::size_t> stack{first};
        seen[first] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            if (status[x] == Internal) ++reached;
            for (auto y : g_.adjacency(x)) {
                if (!seen[y] && status[y] != Leaf) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return reached == internal;
    }

    // Internal set is connected and dominates everything else.
    bool is_solution(const std::vector<std::uint8_t>& status) const {
        std::size_t first = n_;
        std::size_t internal = 0;
        for (std::size_t x = 0; x < n_; ++x) {
            if (status[x] == Internal) {
                if (first == n_) first = x;
                ++internal;
            }
        }
        if (internal == 0) return false;
        for (std::size_t x = 0; x < n_; ++x) {
            if (status[x] == Internal) continue;
            auto adj = g_.adjacency(x);
            if (std::none_of(adj.begin(), adj.end(), [&](auto y) { return status[y] == Internal; })) return false;
        }
        std::vector<char> seen(n_, 0);
        std::vector<std::size_t> stack{first};
        seen[first] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            ++reached;
            for (auto y : g_.adjacency(x)) {
                if (!seen[y] && status[y] == Internal) {
                    seen[y] = 1;
                    stack.push_back(y);
                }
            }
        }
        return reached == internal;
    }

    SpanningTree witness(const std::vector<std::uint8_t>& status) const {
        std::vector<Edge> edges;
        std::vector<char> seen(n_, 0);
        std::size_t first = 0;
        while (status[first] != Internal) ++first;
        std::vector<std::size_t> queue{first};
        seen[first] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto x = queue[head];
            for (auto y : g_.adjacency(x)) {
                if (!seen[y] && status[y] == Internal) {
                    seen[y] = 1;
                    edges.emplace_back(g_.id_at(x), g_.id_at(y));
                    queue.push_back(y);
                }
            }
        }
        for (std::size_t x = 0; x < n_; ++x) {
            if (status[x] == Internal) continue;
            for (auto y : g_.adjacency(x)) {
                if (status[y] == Internal) {
                    edges.emplace_back(g_.id_at(x), g_.id_at(y));
                    break;
                }
            }
        }
        return make_tree(g_, std::move(edges));
    }

    void search(std::vector<std::uint8_t> status) {
        if (budget_hit_) return;
        if (++nodes_ > options_.node_budget) {
            budget_hit_ = true;
            return;
        }
        if (!propagate(status) || !internal_reachable(status)) return;

        const auto internal = static_cast<std::size_t>(std::count(status.begin(), status.end(), Internal));
        if (options_.prune && n_ - internal <= best_.leaf_count) return;

        if (options_.prune && is_solution(status)) {
            // Every completion only adds internal vertices.
            record(status);
            return;
        }

        std::size_t pick = n_;
        std::size_t pick_score = 0;
        bool pick_touches = false;
        for (std::size_t x = 0; x < n_; ++x) {
            if (status[x] != Undecided) continue;
            auto adj = g_.adjacency(x);
            bool touches = std::any_of(adj.begin(), adj.end(), [&](auto y) { return status[y] == Internal; });
            std::size_t score = adj.size();
            if (pick == n_ || (touches && !pick_touches) || (touches == pick_touches && score > pick_score)) {
                pick = x;
                pick_score = score;
                pick_touches = touches;
            }
        }
        if (pick == n_) {
            if (is_solution(status)) record(status);
            return;
        }
        status[pick] = Internal;
        search(status);
        status[pick] = Leaf;
        search(status);
    }

    void record(const std::vector<std::uint8_t>& status) {
        auto t = witness(status);
        if (t.leaf_count > best_.leaf_count) best_ = std::move(t);
    }

    const Graph& g_;
    std::size_t n_;
    ExactOptions options_;
    SpanningTree best_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

ExactResult exact_mlst(const Graph& g, ExactOptions options) {
    if (!g.is_connected()) throw Error(Errc::NotConnected, "exact_mlst");
    if (g.order() < 2) throw Error(Errc::PreconditionViolated, "exact_mlst needs at least 2 vertices");
    if (g.order() == 2) {
        ExactResult out;
        out.witness = make_tree(g, {g.edges().front()});
        out.u_value = 2;
        out.nodes_explored = 1;
        return out;
    }
    return CdsSearch(g, options).run();
}

void for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                            const std::function<void(const SpanningTree&)>& visit) {
    if (!g.is_connected()) throw Error(Errc::NotConnected, "for_each_spanning_tree");
    const std::size_t n = g.order();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& e : g.edges()) edges.emplace_back(g.index_of(e.u), g.index_of(e.v));

    std::uint64_t count = 0;
    std::vector<std::size_t> chosen;

    auto find = [](std::vector<std::size_t>& parent, std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    // Can chosen edges plus edges[from..] still connect everything?
    auto completable = [&](std::size_t from) {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::size_t parts = n;
        auto join = [&](std::size_t a, std::size_t b) {
            a = find(parent, a);
            b = find(parent, b);
            if (a != b) {
                parent[a] = b;
                --parts;
            }
        };
        for (auto i : chosen) join(edges[i].first, edges[i].second);
        for (auto i = from; i < edges.size(); ++i) join(edges[i].first, edges[i].second);
        return parts == 1;
    };

    std::function<void(std::size_t, std::vector<std::size_t>)> rec = [&](std::size_t i, std::vector<std::size_t> parent) {
        if (chosen.size() + 1 == n) {
            if (++count > cap) throw Error(Errc::CapExceeded, "more than " + std::to_string(cap) + " spanning trees");
            std::vector<Edge> tree;
            for (auto j : chosen) tree.emplace_back(g.id_at(edges[j].first), g.id_at(edges[j].second));
            visit(make_tree(g, std::move(tree)));
            return;
        }
        if (i == edges.size() || edges.size() - i < n - 1 - chosen.size()) return;
        auto a = find(parent, edges[i].first);
        auto b = find(parent, edges[i].second);
        if (a != b) {
            auto next = parent;
            next[a] = b;
            chosen.push_back(i);
            rec(i + 1, std::move(next));
            chosen.pop_back();
        }
        if (completable(i + 1)) rec(i + 1, std::move(parent));
    };

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    if (n == 1) {
        if (cap < 1) throw Error(Errc::CapExceeded, "more than 0 spanning trees");
        visit(make_tree(g, {}));
        return;
    }
    rec(0, std::move(parent));
}

std::vector<SpanningTree> enumerate_spanning_trees(const Graph& g, std::uint64_t cap) {
    std::vector<SpanningTree> out;
    for_each_spanning_tree(g, cap, [&](const SpanningTree& t) { out.push_back(t); });
    return out;
}

SpanningTree greedy_leafy(const Graph& g) {
    if (!g.is_connected()) throw Error(Errc::NotConnected, "greedy_leafy");
    const std::size_t n = g.order();
    std::size_t root = 0;
    for (std::size_t x = 1; x < n; ++x) {
        if (g.adjacency(x).size() > g.adjacency(root).size()) root = x;
    }
    std::vector<char> in_tree(n, 0);
    std::vector<std::size_t> members{root};
    in_tree[root] = 1;
    std::vector<Edge> edges;
    while (members.size() < n) {
        std::size_t best = n;
        std::size_t best_gain = 0;
        for (auto x : members) {
            std::size_t gain = 0;
            for (auto y : g.adjacency(x)) gain += in_tree[y] ? 0 : 1;
            if (gain > best_gain || (gain == best_gain && gain > 0 && x < best)) {
                best = x;
                best_gain = gain;
            }
        }
        for (auto y : g.adjacency(best)) {
            if (!in_tree[y]) {
                in_tree[y] = 1;
                members.push_back(y);
                edges.emplace_back(g.id_at(best), g.id_at(y));
            }
        }
    }
    return make_tree(g, std::move(edges));
}

}  // namespace leafspan
