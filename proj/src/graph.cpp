#include "leafspan/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace leafspan {

const char* errc_name(Errc code) noexcept {
    switch (code) {
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::UnknownVertex: return "UnknownVertex";
    case Errc::ParseError: return "ParseError";
    case Errc::NotConnected: return "NotConnected";
    case Errc::EdgeNotFound: return "EdgeNotFound";
    case Errc::NotALeaf: return "NotALeaf";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ChainTooLong: return "ChainTooLong";
    case Errc::BoundNotMet: return "BoundNotMet";
    case Errc::SearchExhausted: return "SearchExhausted";
    case Errc::Infeasible: return "Infeasible";
    case Errc::NotApplicable: return "NotApplicable";
    }
    return "Unknown";
}

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    auto d = std::make_shared<Data>();
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    d->ids = std::move(vertices);

    for (const auto& e : edges) {
        if (e.u == e.v) {
            throw Error(Errc::SelfLoop, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i] == edges[i - 1]) {
            throw Error(Errc::DuplicateEdge,
                        "edge (" + std::to_string(edges[i].u) + "," + std::to_string(edges[i].v) + ")");
        }
    }
    d->edges = std::move(edges);
    d->adj.assign(d->ids.size(), {});

    auto lookup = [&](VertexId x) {
        auto it = std::lower_bound(d->ids.begin(), d->ids.end(), x);
        if (it == d->ids.end() || *it != x) {
            throw Error(Errc::UnknownVertex, "edge endpoint " + std::to_string(x) + " is not a vertex");
        }
        return static_cast<std::size_t>(it - d->ids.begin());
    };
    for (const auto& e : d->edges) {
        auto a = lookup(e.u);
        auto b = lookup(e.v);
        d->adj[a].push_back(b);
        d->adj[b].push_back(a);
    }
    for (auto& list : d->adj) std::sort(list.begin(), list.end());
    data_ = std::move(d);
}

Graph Graph::from_edges(std::vector<Edge> edges, std::vector<VertexId> extra_vertices) {
    for (const auto& e : edges) {
        extra_vertices.push_back(e.u);
        extra_vertices.push_back(e.v);
    }
    return Graph(std::move(extra_vertices), std::move(edges));
}

bool Graph::has_vertex(VertexId x) const {
    return std::binary_search(data_->ids.begin(), data_->ids.end(), x);
}

bool Graph::has_edge(Edge e) const {
    return std::binary_search(data_->edges.begin(), data_->edges.end(), e);
}

std::size_t Graph::index_of(VertexId x) const {
    const auto& ids = data_->ids;
    auto it = std::lower_bound(ids.begin(), ids.end(), x);
    if (it == ids.end() || *it != x) {
        throw Error(Errc::UnknownVertex, "vertex " + std::to_string(x));
    }
    return static_cast<std::size_t>(it - ids.begin());
}

std::vector<VertexId> Graph::neighbors(VertexId x) const {
    std::vector<VertexId> out;
    for (auto j : data_->adj[index_of(x)]) out.push_back(data_->ids[j]);
    return out;
}

std::size_t Graph::min_degree() const {
    std::size_t best = order() == 0 ? 0 : data_->adj[0].size();
    for (const auto& list : data_->adj) best = std::min(best, list.size());
    return best;
}

std::vector<std::vector<VertexId>> Graph::components() const {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(order(), 0);
    for (std::size_t s = 0; s < order(); ++s) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        std::queue<std::size_t> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            auto x = q.front();
            q.pop();
            comp.push_back(data_->ids[x]);
            for (auto y : data_->adj[x]) {
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected() const {
    if (order() == 0) return false;
    std::vector<char> seen(order(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (auto y : data_->adj[x]) {
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == order();
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
    std::vector<Edge> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    for (const auto& e : drop) {
        if (!has_edge(e)) {
            throw Error(Errc::EdgeNotFound, "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        }
    }
    std::vector<Edge> kept;
    std::set_difference(data_->edges.begin(), data_->edges.end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    return Graph(data_->ids, std::move(kept));
}

Graph Graph::without_vertices(std::span<const VertexId> removed) const {
    std::vector<VertexId> drop(removed.begin(), removed.end());
    std::sort(drop.begin(), drop.end());
    std::vector<VertexId> kept;
    std::set_difference(data_->ids.begin(), data_->ids.end(), drop.begin(), drop.end(),
                        std::back_inserter(kept));
    return induced(kept);
}

Graph Graph::induced(std::span<const VertexId> kept) const {
    std::vector<VertexId> ids(kept.begin(), kept.end());
    std::sort(ids.begin(), ids.end());
    for (auto x : ids) index_of(x);
    std::vector<Edge> edges;
    for (const auto& e : data_->edges) {
        if (std::binary_search(ids.begin(), ids.end(), e.u) && std::binary_search(ids.begin(), ids.end(), e.v)) {
            edges.push_back(e);
        }
    }
    return Graph(std::move(ids), std::move(edges));
}

Graph Graph::with_edges(std::span<const Edge> added, std::span<const VertexId> new_vertices) const {
    std::vector<VertexId> ids = data_->ids;
    ids.insert(ids.end(), new_vertices.begin(), new_vertices.end());
    std::vector<Edge> edges = data_->edges;
    edges.insert(edges.end(), added.begin(), added.end());
    return Graph(std::move(ids), std::move(edges));
}

}  // namespace leafspan
