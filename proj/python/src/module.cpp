#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leafspan/blocks.hpp"
#include "leafspan/bounds.hpp"
#include "leafspan/constructive.hpp"
#include "leafspan/corpus.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/io.hpp"
#include "leafspan/metrics.hpp"
#include "leafspan/random.hpp"

namespace py = pybind11;
using namespace leafspan;

namespace {

using PyEdge = std::pair<VertexId, VertexId>;

std::vector<PyEdge> to_py(std::span<const Edge> edges) {
    std::vector<PyEdge> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<Edge> from_py(const std::vector<PyEdge>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw Error(Errc::SelfLoop, std::to_string(a));
        out.emplace_back(a, b);
    }
    return out;
}

py::tuple rational(const Rational& r) { return py::make_tuple(r.numerator(), r.denominator()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Maximum-leaf spanning trees: exact search, lower bounds and constructions";

    static py::exception<Error> error(m, "LeafspanError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object inst = py::handle(error.ptr())(e.what());
            inst.attr("code") = errc_name(e.code());
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    py::class_<Graph>(m, "Graph")
        .def(py::init([](const std::vector<PyEdge>& edges, const std::vector<VertexId>& extra) {
                 return Graph::from_edges(from_py(edges), extra);
             }),
             py::arg("edges"), py::arg("vertices") = std::vector<VertexId>{})
        .def_property_readonly("order", &Graph::order)
        .def_property_readonly("size", &Graph::size)
        .def("vertices", [](const Graph& g) { return std::vector<VertexId>(g.vertices().begin(), g.vertices().end()); })
        .def("edges", [](const Graph& g) { return to_py(g.edges()); })
        .def("degree", &Graph::degree)
        .def("neighbors", &Graph::neighbors)
        .def("has_edge", [](const Graph& g, VertexId a, VertexId b) { return g.has_edge(Edge(a, b)); })
        .def("is_connected", &Graph::is_connected)
        .def("is_tree", &Graph::is_tree)
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__repr__", [](const Graph& g) {
            return "<Graph v=" + std::to_string(g.order()) + " e=" + std::to_string(g.size()) + ">";
        });

    py::class_<SpanningTree>(m, "SpanningTree")
        .def_property_readonly("edges", [](const SpanningTree& t) { return to_py(t.tree_edges); })
        .def_readonly("leaf_count", &SpanningTree::leaf_count)
        .def_readonly("host", &SpanningTree::host)
        .def("validate", [](const SpanningTree& t) {
            auto v = validate(t);
            return py::make_tuple(v.ok, v.violation);
        });

    m.def("make_tree", [](const Graph& g, const std::vector<PyEdge>& edges) { return make_tree(g, from_py(edges)); });

    m.def("parse_graph", &parse_graph);
    m.def("serialize_graph", &serialize_graph);
    m.def("graph_hash", &graph_hash);
    m.def("to_dot", [](const Graph& g) { return to_dot(g); });

    m.def("girth", &girth, "Length of a shortest cycle, None for a forest");
    m.def("chain_metric", &chain_metric);
    m.def("s_count", &s_count);

    m.def("cutpoints", [](const Graph& g) { return decompose_blocks(g).cutpoints; });
    m.def("bridges", [](const Graph& g) { return to_py(decompose_blocks(g).bridges); });
    m.def("blocks", [](const Graph& g) {
        py::list out;
        for (const auto& b : decompose_blocks(g).blocks) {
            py::dict d;
            d["vertices"] = b.vertices;
            d["boundary"] = b.boundary;
            d["interior"] = b.interior;
            d["is_large"] = b.is_large;
            out.append(d);
        }
        return out;
    });

    m.def("exact_mlst",
          [](const Graph& g, std::uint64_t budget) {
              ExactOptions opt;
              opt.node_budget = budget;
              auto r = exact_mlst(g, opt);
              return py::make_tuple(r.u_value, r.witness, r.exhaustive);
          },
          py::arg("graph"), py::arg("node_budget") = kDefaultNodeBudget,
          "(u, witness tree, exhaustive)");
    m.def("greedy_leafy", &greedy_leafy);

    m.def("bound_theorem1", [](std::int64_t s) { return rational(bound_theorem1(s)); });
    m.def("bound_kw", [](std::int64_t v) { return rational(bound_kw(v)); });
    m.def("bound_theorem2", [](std::int64_t v, std::int64_t g, std::int64_t k) { return rational(bound_theorem2(v, g, k)); });
    m.def("alpha", [](std::int64_t g, std::int64_t k) { return rational(alpha(g, k)); });

    m.def("construct_theorem1",
          [](const Graph& g) {
              auto c = construct_theorem1(g);
              return py::make_tuple(c.tree, serialize_trace(c.trace));
          },
          "(tree, trace text)");
    m.def("construct_theorem2",
          [](const Graph& g, std::int64_t k, std::optional<std::int64_t> girth) {
              Theorem2Options opt;
              opt.girth = girth;
              auto c = construct_theorem2(g, k, opt);
              return py::make_tuple(c.tree, serialize_trace(c.trace));
          },
          py::arg("graph"), py::arg("k"), py::arg("girth") = py::none(), "(tree, trace text)");
    m.def("remove_large_blocks", [](const Graph& g) { return to_py(remove_large_blocks(g)); });

    m.def("triangle_tree", &gen_triangle_tree, py::arg("n"));
    m.def("cycle_spine", &gen_cycle_spine, py::arg("g"), py::arg("k"));
    m.def("extremal_chain",
          [](const std::string& family, std::int64_t n, std::int64_t g, std::int64_t k, std::int64_t copies) {
              if (family == "triangle-tree") return glue_extremal_chain(FamilySpec::triangle_tree(n, copies), copies);
              if (family == "cycle-spine") return glue_extremal_chain(FamilySpec::cycle_spine(g, k, copies), copies);
              throw Error(Errc::InvalidParams, "unknown family " + family);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("g") = 3, py::arg("k") = 1, py::arg("copies") = 1);

    m.def("random_constrained_graph",
          [](std::size_t v, std::size_t min_degree, std::optional<std::size_t> girth_at_least,
             std::optional<std::size_t> ell_at_most, std::uint64_t seed) {
              return random_constrained_graph({v, min_degree, girth_at_least, ell_at_most}, seed);
          },
          py::arg("v"), py::arg("min_degree") = 1, py::arg("girth_at_least") = py::none(),
          py::arg("ell_at_most") = py::none(), py::arg("seed") = 1);

    m.def("verify_corpus",
          [](int theorem, std::size_t count, std::size_t max_v, std::uint64_t seed) {
              CorpusParams p;
              p.theorem = theorem;
              p.count = count;
              p.max_v = max_v;
              p.seed = seed;
              auto r = verify_corpus(p);
              return py::make_tuple(r.passed, r.failed, r.to_text());
          },
          py::arg("theorem"), py::arg("count") = 100, py::arg("max_v") = 12, py::arg("seed") = 1,
          "(passed, failed, report text)");
}
