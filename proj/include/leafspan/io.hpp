#pragma once

#include <string>
#include <string_view>

#include "leafspan/graph.hpp"
#include "leafspan/spanning_tree.hpp"

namespace leafspan {

/// Edge-list text: one "u v" pair per line, "v <id>" declares a vertex,
/// '#' starts a comment, blank lines are skipped.
///
/// Throws Error{ParseError} (message carries the line number),
/// Error{SelfLoop} or Error{DuplicateEdge}.
Graph parse_graph(std::string_view text);

/// Normalized edge list: sorted edges, then "v <id>" for isolated vertices.
std::string serialize_graph(const Graph& g);

std::string to_dot(const Graph& g, const SpanningTree* highlight = nullptr);

/// FNV-1a over the normalized edge list, as 16 hex digits.
std::string graph_hash(const Graph& g);

/// "tree <host-hash> <leaf_count>" followed by the tree edges.
std::string serialize_tree(const SpanningTree& t);

}  // namespace leafspan
