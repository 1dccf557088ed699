#include "support.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "leafspan/blocks.hpp"
#include "leafspan/error.hpp"
#include "leafspan/extremal.hpp"

using namespace leafspan;
using namespace testing;

namespace {

std::vector<VertexId> brute_cutpoints(const Graph& g) {
    std::vector<VertexId> out;
    for (auto x : g.vertices()) {
        const VertexId drop[] = {x};
        if (g.order() > 1 && count_components(g.without_vertices(drop)) > 1) out.push_back(x);
    }
    return out;
}

std::vector<Edge> brute_bridges(const Graph& g) {
    std::vector<Edge> out;
    for (const auto& e : g.edges()) {
        const Edge cut[] = {e};
        if (count_components(g.without_edges(cut)) > 1) out.push_back(e);
    }
    return out;
}

}  // namespace

TEST_CASE("triangle with a pendant") {
    auto g = graph_of({{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    auto d = decompose_blocks(g);
    CHECK(d.cutpoints == std::vector<VertexId>{0});
    CHECK(d.bridges == std::vector<Edge>{Edge(0, 3)});
    REQUIRE(d.blocks.size() == 2);
    const auto& tri = d.blocks[0];
    CHECK(tri.vertices == std::vector<VertexId>{0, 1, 2});
    CHECK(tri.boundary == std::vector<VertexId>{0});
    CHECK(tri.interior.size() == 2);
    CHECK(tri.is_large);
    CHECK(d.has_large_block());
}

TEST_CASE("single edge and complete graph") {
    auto d = decompose_blocks(path(2));
    CHECK(d.blocks.size() == 1);
    CHECK(d.cutpoints.empty());
    CHECK(d.bridges.size() == 1);

    auto k4 = decompose_blocks(complete(4));
    REQUIRE(k4.blocks.size() == 1);
    CHECK(k4.blocks[0].interior.size() == 4);
    CHECK(k4.blocks[0].is_large);
    CHECK_FALSE(k4.blocks[0].is_empty);
}

TEST_CASE("disconnected input is rejected") {
    auto g = Graph::from_edges({Edge(0, 1), Edge(2, 3)});
    try {
        decompose_blocks(g);
        FAIL("expected NotConnected");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotConnected);
    }
}

TEST_CASE("cutpoints and bridges match vertex and edge removal") {
    GraphStream stream(2024, 1, 10, 0.45);
    for (int i = 0; i < 200; ++i) {
        auto g = stream.next();
        auto d = decompose_blocks(g);
        CHECK(d.cutpoints == brute_cutpoints(g));
        CHECK(d.bridges == brute_bridges(g));
    }
}

TEST_CASE("block invariants") {
    GraphStream stream(99, 2, 12, 0.5);
    for (int i = 0; i < 200; ++i) {
        auto g = stream.next();
        auto d = decompose_blocks(g);
        std::map<Edge, int> owner;
        for (const auto& b : d.blocks) {
            for (const auto& e : b.edges) owner[e] += 1;
            std::vector<VertexId> all = b.boundary;
            all.insert(all.end(), b.interior.begin(), b.interior.end());
            std::sort(all.begin(), all.end());
            CHECK(all == b.vertices);
            for (auto x : b.boundary) CHECK(std::count(b.interior.begin(), b.interior.end(), x) == 0);
            CHECK(b.is_large == (b.interior.size() > b.boundary.size()));
            CHECK(b.is_empty == b.interior.empty());
        }
        CHECK(owner.size() == g.size());
        for (auto [e, n] : owner) CHECK(n == 1);

        for (std::size_t a = 0; a < d.blocks.size(); ++a) {
            for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
                std::vector<VertexId> shared;
                std::set_intersection(d.blocks[a].vertices.begin(), d.blocks[a].vertices.end(),
                                      d.blocks[b].vertices.begin(), d.blocks[b].vertices.end(),
                                      std::back_inserter(shared));
                CHECK(shared.size() <= 1);
                for (auto x : shared) CHECK(std::binary_search(d.cutpoints.begin(), d.cutpoints.end(), x));
            }
        }
    }
}

TEST_CASE("spines") {
    auto b31 = gen_cycle_spine(3, 1);
    auto spines = find_spines(b31);
    REQUIRE(spines.size() == 3);
    std::set<VertexId> bases;
    for (const auto& s : spines) {
        CHECK(s.path.size() == 2);
        CHECK(b31.adjacent(s.base, s.path.front()));
        CHECK(b31.degree(s.path.back()) == 1);
        bases.insert(s.base);
    }
    CHECK(bases == std::set<VertexId>{0, 1, 2});

    CHECK(find_spines(cycle(5)).empty());
    CHECK(find_spines(path(6)).empty());

    auto claw = find_spines(star(3));
    REQUIRE(claw.size() == 3);
    for (const auto& s : claw) {
        CHECK(s.path.size() == 1);
        CHECK(s.base == 0);
    }
}

TEST_CASE("essential cutpoints") {
    CHECK(essential_cutpoints(gen_cycle_spine(3, 1)).empty());
    auto bowtie = graph_of({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}});
    CHECK(essential_cutpoints(bowtie) == std::vector<VertexId>{0});
    CHECK(essential_cutpoints(path(5)).empty());
    // a vertex carrying two spines splits into three components
    auto fork = graph_of({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(essential_cutpoints(fork) == std::vector<VertexId>{0});
}

TEST_CASE("spine component test") {
    auto g = graph_of({{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}});
    const VertexId tail[] = {3, 4};
    const VertexId tri[] = {1, 2};
    CHECK(is_spine_component(g, 0, tail));
    CHECK_FALSE(is_spine_component(g, 0, tri));
}
