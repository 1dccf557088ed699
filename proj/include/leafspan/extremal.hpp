#pragma once

#include <cstdint>
#include <string>

#include "leafspan/graph.hpp"

namespace leafspan {

enum class FamilyKind {
    TriangleTree,      // cubic tree with every branch vertex blown up into a triangle
    CycleSpineSparse,  // even cycle, spines on alternate vertices (k < g-2)
    CycleSpineDense,   // g-cycle, a spine on every vertex (k >= g-2)
};

const char* family_kind_name(FamilyKind kind);

struct FamilySpec {
    FamilyKind kind = FamilyKind::TriangleTree;
    std::int64_t n = 0;  // triangle count, or cycle half-parameter for the sparse regime
    std::int64_t g = 0;
    std::int64_t k = 0;
    std::int64_t chain_count = 1;

    static FamilySpec triangle_tree(std::int64_t n, std::int64_t copies = 1);
    /// Picks the sparse or dense regime from (g, k).
    static FamilySpec cycle_spine(std::int64_t g, std::int64_t k, std::int64_t copies = 1);

    /// Throws Error{InvalidParams}.
    void check() const;

    /// Vertices of one copy.
    std::int64_t base_vertices() const;
    /// Vertices merged away per junction when chaining copies.
    std::int64_t junction_loss() const;
    std::int64_t expected_vertices() const;
};

/// n triangles strung along a caterpillar, n + 2 pendant vertices, 4n + 2
/// vertices in total. Triangle i uses ids 3i (left port), 3i+1 (pendant
/// port), 3i+2 (right port); pendant vertices follow.
Graph gen_triangle_tree(std::int64_t n);

/// Cycle with spines of k + 1 vertices. Cycle vertices take ids 0..L-1, then
/// each spine's vertices in order from its base outward.
Graph gen_cycle_spine(std::int64_t g, std::int64_t k);

Graph generate(const FamilySpec& spec);

/// `copies` instances chained pendant-to-spine-end (pendant-to-pendant for
/// the triangle family), contracting the glued spine after each junction.
Graph glue_extremal_chain(const FamilySpec& base, std::int64_t copies);

}  // namespace leafspan
