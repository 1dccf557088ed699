#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leafspan/spanning_tree.hpp"

namespace leafspan {

/// U: pendant vertices; W: their neighbours; X: other neighbours of W;
/// Y: everything else.
struct PartitionUWXY {
    std::vector<VertexId> U, W, X, Y;
};

PartitionUWXY partition_uwxy(const Graph& g);

enum class TraceOp { Contract, Delete, Split, Extend, Base };

const char* trace_op_name(TraceOp op);

/// One applied reduction. Steps are stored in pre-order: a Split is followed
/// by the steps of its first part, then those of its second part.
///
///   contract  args = u, v                 (the contracted edge)
///   delete    args = u1, v1, u2, v2, ...  (removed edges)
///   split     args = a, side...           (cutpoint, vertices of the first part)
///   extend    args = a, b                 (vertex removed, cutpoint it reattaches to)
///             args = a, x, w, x2          (also removes edge x2-w first)
///   base      args = u1, v1, ...          (tree edges)
struct TraceStep {
    std::string case_id;
    TraceOp op = TraceOp::Base;
    std::vector<VertexId> args;
};

struct ConstructionTrace {
    int theorem = 1;
    std::int64_t k = 0;  // spine length parameter, chain-bound runs only
    std::vector<TraceStep> steps;
    std::string base_kind;  // last base case reached
    SpanningTree tree;
};

/// "trace theorem=<t> k=<k>" then one "case=<id> op=<op> args=<ids>" line per step.
std::string serialize_trace(const ConstructionTrace& trace);

struct Construction {
    SpanningTree tree;
    ConstructionTrace trace;
};

/// Receives every (graph, subgraph) pair the descent recurses on.
using DescentObserver = std::function<void(const Graph& parent, const Graph& child, std::string_view case_id)>;

struct Theorem1Options {
    std::size_t exact_limit = 18;  // minimum-degree-3 base: exact oracle up to this order, greedy above
    DescentObserver observer;
};

/// Spanning tree with at least (s - 2)/4 + 2 leaves, built by the five-case
/// descent on pendant vertices. Throws Error{NotConnected},
/// Error{PreconditionViolated} for v < 2 and Error{BoundNotMet} if any level
/// of the descent falls short (an implementation bug).
Construction construct_theorem1(const Graph& g, const Theorem1Options& options = {});

struct Lemma5Check {
    enum class Status { Ok, Violation, NotApplicable };
    Status status = Status::Ok;
    std::string property;  // "1", "2", "3" or "4" when violated
    std::string detail;
};

/// Structure left once no earlier reduction applies: W independent, every w
/// of degree 3 with one pendant and two X neighbours, X non-empty with
/// degrees above 3.
Lemma5Check check_lemma5_structure(const Graph& g, const PartitionUWXY& p);

/// Edge set F with g - F connected, without large blocks, and where any two
/// adjacent degree-2 vertices of g - F already had degree 2 in g.
/// Depth-first search over removals with memoised dead ends.
/// Throws Error{PreconditionViolated} for v <= 2, Error{NotConnected},
/// Error{SearchExhausted}.
std::vector<Edge> remove_large_blocks(const Graph& g);

/// Girth parameter used for the chain bound: the girth, or 3 for a tree.
std::int64_t theorem2_girth_parameter(const Graph& g);

struct Theorem2Options {
    std::optional<std::int64_t> girth;  // declared girth bound; defaults to theorem2_girth_parameter
    DescentObserver observer;
};

/// Spanning tree with at least alpha(g,k)(v - k - 2) + 2 leaves via the
/// essential-cutpoint / large-block descent. Throws Error{NotConnected},
/// Error{InvalidParams} (k < 1, or a declared girth above the real one),
/// Error{ChainTooLong} and Error{BoundNotMet}.
Construction construct_theorem2(const Graph& g, std::int64_t k, const Theorem2Options& options = {});

/// Re-executes the recorded reductions on g and returns the resulting tree.
/// Throws Error{PreconditionViolated} when the trace does not fit g.
SpanningTree replay_trace(const Graph& g, const ConstructionTrace& trace);

}  // namespace leafspan
