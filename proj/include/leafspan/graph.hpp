#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "leafspan/error.hpp"

namespace leafspan {

using VertexId = std::int64_t;

/// Undirected edge, always stored with u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool has(VertexId x) const { return u == x || v == x; }
    VertexId other(VertexId x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph over stable integer vertex ids.
///
/// Vertices are kept sorted by id; algorithms that need dense indexing use
/// `index_of` / `id_at` and the index-based adjacency lists. Copies share the
/// underlying storage, so passing graphs by value is cheap.
class Graph {
public:
    /// Empty graph; only useful as a placeholder.
    Graph();

    /// Throws Error{SelfLoop|DuplicateEdge|UnknownVertex} on malformed input.
    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

    /// Vertex set is the union of edge endpoints and `extra_vertices`.
    static Graph from_edges(std::vector<Edge> edges, std::vector<VertexId> extra_vertices = {});

    std::size_t order() const { return data_->ids.size(); }
    std::size_t size() const { return data_->edges.size(); }

    std::span<const VertexId> vertices() const { return data_->ids; }
    std::span<const Edge> edges() const { return data_->edges; }

    bool has_vertex(VertexId x) const;
    bool has_edge(Edge e) const;
    bool adjacent(VertexId a, VertexId b) const { return has_edge(Edge(a, b)); }

    /// Throws Error{UnknownVertex}.
    std::size_t index_of(VertexId x) const;
    VertexId id_at(std::size_t i) const { return data_->ids[i]; }
    std::span<const std::size_t> adjacency(std::size_t i) const { return data_->adj[i]; }

    std::size_t degree(VertexId x) const { return data_->adj[index_of(x)].size(); }
    std::vector<VertexId> neighbors(VertexId x) const;
    VertexId max_id() const { return data_->ids.empty() ? -1 : data_->ids.back(); }

    std::size_t min_degree() const;
    bool is_connected() const;
    bool is_tree() const { return order() >= 1 && size() + 1 == order() && is_connected(); }

    /// Connected components as sorted id lists, ordered by smallest id.
    std::vector<std::vector<VertexId>> components() const;

    Graph without_edges(std::span<const Edge> removed) const;
    Graph without_vertices(std::span<const VertexId> removed) const;
    Graph induced(std::span<const VertexId> kept) const;
    Graph with_edges(std::span<const Edge> added, std::span<const VertexId> new_vertices = {}) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.data_ == b.data_ ||
               (a.data_->ids == b.data_->ids && a.data_->edges == b.data_->edges);
    }

private:
    struct Data {
        std::vector<VertexId> ids;
        std::vector<Edge> edges;
        std::vector<std::vector<std::size_t>> adj;
    };
    std::shared_ptr<const Data> data_;
};

}  // namespace leafspan
