#include "support.hpp"

#include <algorithm>

#include "leafspan/blocks.hpp"
#include "leafspan/bounds.hpp"
#include "leafspan/error.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/metrics.hpp"

using namespace leafspan;

namespace {

std::size_t u_of(const Graph& g) { return exact_mlst(g).u_value; }

}  // namespace

TEST_CASE("triangle trees") {
    auto t1 = gen_triangle_tree(1);
    CHECK(t1.order() == 6);
    CHECK(u_of(t1) == 3);
    CHECK(u_of(gen_triangle_tree(2)) == 4);
    auto t5 = gen_triangle_tree(5);
    CHECK(t5.order() == 22);
    CHECK(s_count(t5) == 22);
    CHECK(u_of(t5) == 7);
    CHECK_THROWS_AS(gen_triangle_tree(0), Error);
}

TEST_CASE("triangle tree shape") {
    for (std::int64_t n = 1; n <= 8; ++n) {
        auto g = gen_triangle_tree(n);
        CHECK(g.order() == static_cast<std::size_t>(4 * n + 2));
        std::size_t pendants = 0;
        auto cuts = decompose_blocks(g).cutpoints;
        for (auto x : g.vertices()) {
            if (g.degree(x) == 1) {
                ++pendants;
            } else {
                CHECK(g.degree(x) == 3);
                CHECK(std::binary_search(cuts.begin(), cuts.end(), x));
            }
        }
        CHECK(pendants == static_cast<std::size_t>(n + 2));
        if (n <= 5) CHECK(Rational(static_cast<std::int64_t>(u_of(g))) == bound_theorem1(s_count(g)));
    }
}

TEST_CASE("cycle-spine examples") {
    auto dense = gen_cycle_spine(5, 4);
    CHECK(dense.order() == 30);
    CHECK(u_of(dense) == 5);
    CHECK(bound_theorem2(30, 5, 4) == Rational(5));

    auto sparse = gen_cycle_spine(5, 2);
    CHECK(sparse.order() == 15);
    CHECK(u_of(sparse) == 4);

    auto s7 = gen_cycle_spine(7, 1);
    CHECK(s7.order() == 16);
    CHECK(u_of(s7) == 5);

    auto b31 = gen_cycle_spine(3, 1);
    CHECK(b31.order() == 9);
    CHECK(u_of(b31) == 3);

    CHECK_THROWS_AS(gen_cycle_spine(2, 1), Error);
    CHECK_THROWS_AS(gen_cycle_spine(5, 0), Error);
}

TEST_CASE("cycle-spine invariants and tightness") {
    for (std::int64_t g = 3; g <= 10; ++g) {
        for (std::int64_t k = 1; k <= 6; ++k) {
            auto spec = FamilySpec::cycle_spine(g, k);
            auto h = generate(spec);
            CAPTURE(g);
            CAPTURE(k);
            CHECK(h.order() == static_cast<std::size_t>(spec.expected_vertices()));
            CHECK(h.is_connected());
            CHECK(chain_metric(h) == static_cast<std::size_t>(k));
            auto gi = girth(h);
            REQUIRE(gi.has_value());
            CHECK(*gi >= static_cast<std::size_t>(g));
            if (spec.kind == FamilyKind::CycleSpineDense) {
                CHECK(k >= g - 2);
                CHECK(h.order() == static_cast<std::size_t>(g * (k + 2)));
            } else {
                auto n = alpha_n(g);
                CHECK(h.order() == static_cast<std::size_t>(2 * n + 2 + (n + 1) * (k + 1)));
            }
            if (h.order() <= 24) {
                auto bound = bound_theorem2(static_cast<std::int64_t>(h.order()), g, k);
                CHECK(Rational(static_cast<std::int64_t>(u_of(h))) == bound);
            }
        }
    }
}

TEST_CASE("chains of extremal pieces") {
    auto b31 = FamilySpec::cycle_spine(3, 1);
    CHECK(glue_extremal_chain(b31, 1) == generate(b31));

    auto c2 = glue_extremal_chain(b31, 2);
    CHECK(c2.order() == 15);
    CHECK(u_of(c2) == 4);
    CHECK(chain_metric(c2) == 1);

    auto b62 = FamilySpec::cycle_spine(6, 2);
    auto s2 = glue_extremal_chain(b62, 2);
    CHECK(s2.order() == 26);
    CHECK(u_of(s2) == 6);
    CHECK(Rational(6) == bound_theorem2(26, 6, 2));

    CHECK_THROWS_AS(glue_extremal_chain(b31, 0), Error);
}

TEST_CASE("chains stay tight") {
    const std::pair<std::int64_t, std::int64_t> params[] = {{3, 1}, {4, 2}, {5, 1}, {6, 2}, {4, 1}, {3, 2}};
    for (auto [g, k] : params) {
        auto spec = FamilySpec::cycle_spine(g, k);
        for (std::int64_t copies = 1; copies <= 3; ++copies) {
            auto c = glue_extremal_chain(spec, copies);
            if (c.order() > 26) continue;
            CAPTURE(g);
            CAPTURE(k);
            CAPTURE(copies);
            auto base = spec.expected_vertices();
            CHECK(c.order() == static_cast<std::size_t>(base + (copies - 1) * (base - k - 2)));
            CHECK(chain_metric(c) == static_cast<std::size_t>(k));
            CHECK(*girth(c) >= static_cast<std::size_t>(g));
            auto bound = bound_theorem2(static_cast<std::int64_t>(c.order()), g, k);
            CHECK(Rational(static_cast<std::int64_t>(u_of(c))) == bound);
        }
    }
}

TEST_CASE("triangle tree chains add the per-copy leaves") {
    auto spec = FamilySpec::triangle_tree(2);
    auto c = glue_extremal_chain(spec, 2);
    CHECK(c.is_connected());
    CHECK(Rational(static_cast<std::int64_t>(u_of(c))) == bound_theorem1(s_count(c)));
}

TEST_CASE("family parameter checks") {
    CHECK(FamilySpec::cycle_spine(5, 4).kind == FamilyKind::CycleSpineDense);
    CHECK(FamilySpec::cycle_spine(6, 2).kind == FamilyKind::CycleSpineSparse);
    FamilySpec bad = FamilySpec::cycle_spine(6, 2);
    bad.kind = FamilyKind::CycleSpineDense;
    CHECK_THROWS_AS(bad.check(), Error);
    CHECK(std::string(family_kind_name(FamilyKind::TriangleTree)).size() > 0);
}
