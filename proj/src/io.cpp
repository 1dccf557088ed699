#include "leafspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

namespace leafspan {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

VertexId parse_id(std::string_view tok, std::size_t line_no) {
    VertexId value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0) {
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad vertex id '" + std::string(tok) + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::vector<Edge> edges;
    std::vector<VertexId> vertices;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        auto end = text.find('\n');
        auto line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() == 2 && tok[0] == "v") {
            vertices.push_back(parse_id(tok[1], line_no));
            continue;
        }
        if (tok.size() != 2) {
            throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'u v' or 'v <id>'");
        }
        auto a = parse_id(tok[0], line_no);
        auto b = parse_id(tok[1], line_no);
        if (a == b) throw Error(Errc::SelfLoop, "line " + std::to_string(line_no));
        Edge e(a, b);
        if (!seen.insert(e).second) throw Error(Errc::DuplicateEdge, "line " + std::to_string(line_no));
        edges.push_back(e);
    }
    if (edges.empty() && vertices.empty()) throw Error(Errc::ParseError, "graph has no vertices");
    return Graph::from_edges(std::move(edges), std::move(vertices));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    for (std::size_t i = 0; i < g.order(); ++i) {
        if (g.adjacency(i).empty()) out << "v " << g.id_at(i) << '\n';
    }
    return out.str();
}

std::string to_dot(const Graph& g, const SpanningTree* highlight) {
    std::ostringstream out;
    out << "graph G {\n";
    for (auto x : g.vertices()) out << "  " << x << ";\n";
    for (const auto& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (highlight && std::binary_search(highlight->tree_edges.begin(), highlight->tree_edges.end(), e)) {
            out << " [penwidth=3]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string serialize_tree(const SpanningTree& t) {
    std::ostringstream out;
    out << "tree " << graph_hash(t.host) << ' ' << t.leaf_count << '\n';
    for (const auto& e : t.tree_edges) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

}  // namespace leafspan
