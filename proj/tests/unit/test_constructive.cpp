#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leafspan/blocks.hpp"
#include "leafspan/bounds.hpp"
#include "leafspan/constructive.hpp"
#include "leafspan/error.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/metrics.hpp"

using namespace leafspan;
using namespace testing;

namespace {

Rational leaves(const SpanningTree& t) { return Rational(static_cast<std::int64_t>(t.leaf_count)); }

Rational t1_bound(const Graph& g) { return bound_theorem1(static_cast<std::int64_t>(s_count(g))); }

Rational t2_bound(const Graph& g, std::int64_t k) {
    return bound_theorem2(static_cast<std::int64_t>(g.order()), theorem2_girth_parameter(g), k);
}

std::int64_t ell_of(const Graph& g) { return std::max<std::int64_t>(1, static_cast<std::int64_t>(chain_metric(g))); }

// Four degree-3 vertices, each with a pendant and both hubs as neighbours.
Graph hub_pair() {
    std::vector<Edge> edges;
    for (int i = 0; i < 4; ++i) {
        const VertexId w = 10 + i, u = 20 + i;
        edges.emplace_back(w, 0);
        edges.emplace_back(w, 1);
        edges.emplace_back(w, u);
    }
    return Graph::from_edges(std::move(edges));
}

Errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InvalidGraph;
}

bool contains(const std::vector<VertexId>& xs, VertexId x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); }

}  // namespace

TEST_CASE("pendant-count construction on the examples") {
    auto e = construct_theorem1(path(2));
    CHECK(e.tree.leaf_count == 2);
    CHECK(validate(e.tree).ok);

    auto tt = gen_triangle_tree(2);
    auto r = construct_theorem1(tt);
    CHECK(validate(r.tree).ok);
    CHECK(r.tree.leaf_count >= 4);
    CHECK(exact_mlst(tt).u_value == 4);

    auto p = construct_theorem1(petersen());
    CHECK(validate(p.tree).ok);
    CHECK(p.tree.leaf_count >= 4);
    CHECK(p.trace.base_kind == "KW");
}

TEST_CASE("the residual hub structure goes through the last case") {
    auto g = hub_pair();
    auto p = partition_uwxy(g);
    CHECK(p.X == std::vector<VertexId>{0, 1});
    CHECK(p.W.size() == 4);
    CHECK(p.Y.empty());
    CHECK(check_lemma5_structure(g, p).status == Lemma5Check::Status::Ok);

    auto r = construct_theorem1(g);
    CHECK(validate(r.tree).ok);
    CHECK(leaves(r.tree) >= t1_bound(g));
    CHECK(std::any_of(r.trace.steps.begin(), r.trace.steps.end(), [](const TraceStep& s) { return s.case_id == "5"; }));
}

TEST_CASE("residual structure violations") {
    auto p4 = path(4);
    auto c = check_lemma5_structure(p4, partition_uwxy(p4));
    CHECK(c.status == Lemma5Check::Status::Violation);
    CHECK(c.property == "1");

    auto k4 = complete(4);
    CHECK(check_lemma5_structure(k4, partition_uwxy(k4)).status == Lemma5Check::Status::NotApplicable);

    // w of degree 4
    auto g = hub_pair().with_edges(std::vector<Edge>{Edge(10, 2), Edge(2, 0)}, std::vector<VertexId>{2});
    auto c2 = check_lemma5_structure(g, partition_uwxy(g));
    CHECK(c2.status == Lemma5Check::Status::Violation);
    CHECK(c2.property == "2");
}

TEST_CASE("partition covers every vertex once") {
    GraphStream stream(101, 2, 14, 0.3);
    for (int i = 0; i < 200; ++i) {
        auto g = stream.next();
        auto p = partition_uwxy(g);
        std::vector<VertexId> all;
        for (const auto* part : {&p.U, &p.W, &p.X, &p.Y}) all.insert(all.end(), part->begin(), part->end());
        std::sort(all.begin(), all.end());
        CHECK(all == std::vector<VertexId>(g.vertices().begin(), g.vertices().end()));
        for (auto u : p.U) CHECK(g.degree(u) == 1);
        for (auto w : p.W) {
            auto nb = g.neighbors(w);
            CHECK(std::any_of(nb.begin(), nb.end(), [&](VertexId y) { return contains(p.U, y); }));
        }
        for (auto x : p.X) {
            auto nb = g.neighbors(x);
            CHECK(std::any_of(nb.begin(), nb.end(), [&](VertexId y) { return contains(p.W, y); }));
        }
    }
}

TEST_CASE("pendant-count construction meets its bound on random graphs") {
    GraphStream stream(103, 2, 14);
    for (int i = 0; i < 400; ++i) {
        auto g = stream.next();
        auto r = construct_theorem1(g);
        CHECK(validate(r.tree).ok);
        CHECK(leaves(r.tree) >= t1_bound(g));
        CHECK(replay_trace(g, r.trace).tree_edges == r.tree.tree_edges);
    }
}

TEST_CASE("pendant-count descent shrinks the graph at every step") {
    GraphStream stream(107, 3, 14);
    std::set<std::string> seen;
    for (int i = 0; i < 400; ++i) {
        auto g = stream.next();
        Theorem1Options opt;
        opt.observer = [&](const Graph& parent, const Graph& child, std::string_view id) {
            seen.emplace(id);
            auto before = std::make_pair(parent.order(), parent.size());
            auto after = std::make_pair(child.order(), child.size());
            CHECK(after < before);
        };
        construct_theorem1(g, opt);
    }
    CHECK(seen.count("1"));
    CHECK(seen.count("2"));
    CHECK(seen.count("3"));
}

TEST_CASE("a split recombines with u = u1 + u2 - 2") {
    GraphStream stream(109, 4, 11);
    int splits = 0;
    for (int i = 0; i < 300; ++i) {
        auto g = stream.next();
        std::vector<std::pair<Graph, Graph>> pairs;
        Theorem1Options opt;
        opt.observer = [&](const Graph& parent, const Graph& child, std::string_view id) {
            if (id == "2") pairs.emplace_back(parent, child);
        };
        construct_theorem1(g, opt);
        // Children of a split arrive in pairs sharing the parent.
        for (std::size_t j = 0; j + 1 < pairs.size(); ++j) {
            if (!(pairs[j].first == pairs[j + 1].first)) continue;
            const auto& parent = pairs[j].first;
            auto u1 = exact_mlst(pairs[j].second).u_value;
            auto u2 = exact_mlst(pairs[j + 1].second).u_value;
            CHECK(exact_mlst(parent).u_value == u1 + u2 - 2);
            ++splits;
            ++j;
        }
    }
    CHECK(splits > 10);
}

TEST_CASE("chain-bound construction on the examples") {
    auto b31 = gen_cycle_spine(3, 1);
    auto r = construct_theorem2(b31, 1);
    CHECK(validate(r.tree).ok);
    CHECK(r.tree.leaf_count == 3);

    auto spider = graph_of({{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}});
    auto rt = construct_theorem2(spider, 2);
    CHECK(rt.tree.tree_edges == std::vector<Edge>(spider.edges().begin(), spider.edges().end()));
    CHECK(leaves(rt.tree) >= t2_bound(spider, 2));
    CHECK(rt.trace.base_kind == "tree");

    auto chain = glue_extremal_chain(FamilySpec::cycle_spine(6, 2), 2);
    Theorem2Options opt;
    opt.girth = 6;
    auto rc = construct_theorem2(chain, 2, opt);
    CHECK(validate(rc.tree).ok);
    CHECK(leaves(rc.tree) == bound_theorem2(static_cast<std::int64_t>(chain.order()), 6, 2));
}

TEST_CASE("chain-bound construction meets its bound on random graphs") {
    GraphStream stream(113, 3, 14, 0.35);
    for (int i = 0; i < 400; ++i) {
        auto g = stream.next();
        auto k = ell_of(g);
        auto r = construct_theorem2(g, k);
        CHECK(validate(r.tree).ok);
        CHECK(leaves(r.tree) >= t2_bound(g, k));
        CHECK(replay_trace(g, r.trace).tree_edges == r.tree.tree_edges);
        // a looser chain parameter only weakens the bound
        auto r2 = construct_theorem2(g, k + 2);
        CHECK(leaves(r2.tree) >= t2_bound(g, k + 2));
    }
}

TEST_CASE("chain-bound descent lowers the optimum, or keeps it and drops edges") {
    GraphStream stream(127, 3, 11, 0.4);
    std::set<std::string> seen;
    for (int i = 0; i < 250; ++i) {
        auto g = stream.next();
        Theorem2Options opt;
        opt.observer = [&](const Graph& parent, const Graph& child, std::string_view id) {
            seen.emplace(id);
            auto up = exact_mlst(parent).u_value, uc = exact_mlst(child).u_value;
            CHECK((uc < up || (uc == up && child.size() < parent.size())));
        };
        construct_theorem2(g, ell_of(g), opt);
    }
    CHECK(seen.count("1.2"));
}

TEST_CASE("large-block removal") {
    auto k4 = complete(4);
    auto f = remove_large_blocks(k4);
    CHECK(f.size() == 3);
    auto rest = k4.without_edges(f);
    CHECK(rest.is_tree());
    CHECK(std::any_of(rest.vertices().begin(), rest.vertices().end(), [&](VertexId x) { return rest.degree(x) == 3; }));

    CHECK(remove_large_blocks(gen_triangle_tree(3)).empty());
    CHECK(remove_large_blocks(path(5)).empty());

    auto tp = graph_of({{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto ft = remove_large_blocks(tp);
    CHECK(ft.size() == 1);

    CHECK(code_of([] { remove_large_blocks(path(2)); }) == Errc::PreconditionViolated);
    CHECK(code_of([] { remove_large_blocks(graph_of({{0, 1}, {2, 3}, {3, 4}})); }) == Errc::NotConnected);
}

TEST_CASE("large-block removal postconditions hold after the fact") {
    GraphStream stream(131, 3, 16);
    for (int i = 0; i < 200; ++i) {
        auto g = stream.next();
        auto f = remove_large_blocks(g);
        auto rest = g.without_edges(f);
        CHECK(rest.is_connected());
        for (const auto& b : decompose_blocks(rest).blocks) CHECK_FALSE(b.is_large);
        for (const auto& e : rest.edges()) {
            if (rest.degree(e.u) == 2 && rest.degree(e.v) == 2) {
                CHECK(g.degree(e.u) == 2);
                CHECK(g.degree(e.v) == 2);
            }
        }
    }
}

TEST_CASE("construction errors") {
    auto split = graph_of({{0, 1}, {2, 3}});
    CHECK(code_of([&] { construct_theorem1(split); }) == Errc::NotConnected);
    CHECK(code_of([&] { construct_theorem2(split, 1); }) == Errc::NotConnected);
    CHECK(code_of([] { construct_theorem1(path(1)); }) == Errc::PreconditionViolated);
    CHECK(code_of([] { construct_theorem2(cycle(5), 0); }) == Errc::InvalidParams);
    CHECK(code_of([] { construct_theorem2(path(6), 2); }) == Errc::ChainTooLong);
    Theorem2Options opt;
    opt.girth = 6;
    CHECK(code_of([&] { construct_theorem2(cycle(5), 5, opt); }) == Errc::InvalidParams);
}

TEST_CASE("a graph beneath the chain bound is reported, not papered over") {
    // Cycle-spine with g = 6, k = 2 plus two extra 3-vertex paths hung off the
    // end of one spine: girth 6, chain 2, 21 vertices.
    auto base = gen_cycle_spine(5, 2);
    VertexId end = -1;
    for (auto x : base.vertices()) {
        if (base.degree(x) == 1) end = x;
    }
    REQUIRE(end >= 0);
    const VertexId n0 = base.max_id() + 1;
    auto g = base.with_edges(std::vector<Edge>{Edge(end, n0), Edge(n0, n0 + 1), Edge(n0 + 1, n0 + 2), Edge(end, n0 + 3),
                                               Edge(n0 + 3, n0 + 4), Edge(n0 + 4, n0 + 5)},
                             std::vector<VertexId>{n0, n0 + 1, n0 + 2, n0 + 3, n0 + 4, n0 + 5});
    REQUIRE(g.order() == 21);
    REQUIRE(chain_metric(g) == 2);
    REQUIRE(*girth(g) == 6);
    auto bound = bound_theorem2(21, 6, 2);
    CHECK(bound == Rational(56, 11));
    CHECK(Rational(static_cast<std::int64_t>(exact_mlst(g).u_value)) < bound);
    CHECK(code_of([&] { construct_theorem2(g, 2); }) == Errc::BoundNotMet);
}

TEST_CASE("trace text and replay") {
    auto g = gen_triangle_tree(2);
    auto r = construct_theorem1(g);
    auto text = serialize_trace(r.trace);
    CHECK(text.rfind("trace theorem=1 k=0\n", 0) == 0);
    CHECK(text.find("case=") != std::string::npos);
    CHECK(text.find(" op=") != std::string::npos);
    CHECK(text.find(" args=") != std::string::npos);

    auto t2 = construct_theorem2(gen_cycle_spine(4, 2), 2);
    CHECK(serialize_trace(t2.trace).rfind("trace theorem=2 k=2\n", 0) == 0);

    auto bad = r.trace;
    REQUIRE_FALSE(bad.steps.empty());
    bad.steps.front().args = {900, 901};
    CHECK_THROWS_AS(replay_trace(g, bad), Error);
    CHECK_THROWS_AS(replay_trace(petersen(), r.trace), Error);
}
