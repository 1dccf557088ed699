#include "support.hpp"

#include "leafspan/error.hpp"
#include "leafspan/graph.hpp"

using namespace leafspan;
using namespace testing;

TEST_CASE("construction normalizes and rejects malformed input") {
    auto g = Graph::from_edges({Edge(2, 1), Edge(0, 2)});
    CHECK(g.order() == 3);
    CHECK(g.size() == 2);
    CHECK(g.edges()[0] == Edge(0, 2));
    CHECK(g.edges()[1] == Edge(1, 2));
    CHECK(g.has_edge(Edge(2, 0)));
    CHECK_FALSE(g.adjacent(0, 1));

    CHECK_THROWS_AS(Graph::from_edges({Edge(0, 1), Edge(1, 0)}), Error);
    try {
        Graph::from_edges({Edge(3, 3)});
        FAIL("self loop accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SelfLoop);
    }
    try {
        Graph({0, 1}, {Edge(0, 5)});
        FAIL("dangling edge accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownVertex);
    }
}

TEST_CASE("degree and neighbourhood queries") {
    auto g = star(4);
    CHECK(g.degree(0) == 4);
    CHECK(g.degree(3) == 1);
    CHECK(g.neighbors(0) == std::vector<VertexId>{1, 2, 3, 4});
    CHECK(g.min_degree() == 1);
    CHECK(g.max_id() == 4);
    CHECK(g.is_tree());
    CHECK_FALSE(cycle(4).is_tree());
    CHECK_THROWS_AS(g.index_of(17), Error);
}

TEST_CASE("isolated vertices and components") {
    auto g = Graph::from_edges({Edge(0, 1), Edge(5, 6)}, {9});
    CHECK(g.order() == 5);
    CHECK_FALSE(g.is_connected());
    auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<VertexId>{0, 1});
    CHECK(comps[1] == std::vector<VertexId>{5, 6});
    CHECK(comps[2] == std::vector<VertexId>{9});
}

TEST_CASE("derived graphs") {
    auto g = complete(4);
    const Edge cut[] = {Edge(0, 1)};
    auto h = g.without_edges(cut);
    CHECK(h.size() == 5);
    CHECK(h.order() == 4);
    const Edge missing[] = {Edge(0, 9)};
    CHECK_THROWS_AS(g.without_edges(missing), Error);

    const VertexId drop[] = {0};
    CHECK(g.without_vertices(drop) == complete(4).induced(std::vector<VertexId>{1, 2, 3}));
    CHECK(g.without_vertices(drop).size() == 3);

    const Edge extra[] = {Edge(3, 7)};
    const VertexId fresh[] = {7};
    auto k = g.with_edges(extra, fresh);
    CHECK(k.order() == 5);
    CHECK(k.degree(7) == 1);
}

TEST_CASE("equality is structural") {
    CHECK(cycle(5) == graph_of({{4, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK_FALSE(cycle(5) == path(5));
}
