#include "leafspan/operators.hpp"

#include <algorithm>
#include <string>

namespace leafspan {

Gluing glue(const Graph& first, VertexId x1, const Graph& second, VertexId x2) {
    first.index_of(x1);
    second.index_of(x2);

    Gluing out;
    out.merged = x1;
    for (auto x : first.vertices()) out.from_first[x] = x;
    VertexId next = first.max_id() + 1;
    for (auto x : second.vertices()) {
        out.from_second[x] = x == x2 ? x1 : next++;
    }

    std::vector<VertexId> ids(first.vertices().begin(), first.vertices().end());
    for (const auto& [old_id, new_id] : out.from_second) {
        if (old_id != x2) ids.push_back(new_id);
    }
    std::vector<Edge> edges(first.edges().begin(), first.edges().end());
    for (const auto& e : second.edges()) {
        edges.emplace_back(out.from_second.at(e.u), out.from_second.at(e.v));
    }
    out.graph = Graph(std::move(ids), std::move(edges));
    return out;
}

Contraction contract_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) {
        throw Error(Errc::EdgeNotFound, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    Contraction out;
    out.edge = e;
    out.merged = e.u;
    out.removed = e.v;

    std::vector<VertexId> ids;
    for (auto x : g.vertices()) {
        if (x != e.v) ids.push_back(x);
    }
    std::vector<Edge> edges;
    for (const auto& f : g.edges()) {
        auto a = out.map(f.u);
        auto b = out.map(f.v);
        if (a != b) edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    out.graph = Graph(std::move(ids), std::move(edges));
    return out;
}

}  // namespace leafspan
