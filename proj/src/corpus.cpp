#include "leafspan/corpus.hpp"

#include <random>
#include <sstream>

#include "leafspan/constructive.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/io.hpp"
#include "leafspan/metrics.hpp"
#include "leafspan/random.hpp"

namespace leafspan {

Graph corpus_instance(const CorpusParams& params, std::size_t index) {
    if (params.min_v < 1 || params.min_v > params.max_v) throw Error(Errc::InvalidParams, "bad vertex range");
    std::seed_seq seq{static_cast<std::uint32_t>(params.seed), static_cast<std::uint32_t>(params.seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    const auto v = std::uniform_int_distribution<std::size_t>(params.min_v, params.max_v)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    return random_connected_graph(v, p, rng);
}

std::string CorpusRecord::to_line() const {
    std::ostringstream out;
    out << "idx=" << index << " hash=" << hash << " v=" << v << " e=" << e << " g=";
    if (girth) out << *girth;
    else out << "acyclic";
    out << " ell=" << ell << " s=" << s;
    if (kind == BoundKind::Theorem2) out << " k=" << k;
    out << " bound_kind=" << bound_kind_name(kind) << " bound=" << to_string(bound);
    out << " exact=" << (exact ? std::to_string(*exact) : "-");
    out << " construct=" << (construct ? std::to_string(*construct) : "-");
    out << " pass=" << (pass ? 1 : 0);
    if (!note.empty()) out << " note=\"" << note << '"';
    return out.str();
}

std::string CorpusReport::to_text() const {
    std::ostringstream out;
    for (const auto& r : records) out << r.to_line() << '\n';
    out << "total=" << records.size() << " pass=" << passed << " fail=" << failed << " seed=" << seed << '\n';
    return out.str();
}

CorpusRecord verify_instance(const Graph& g, const CorpusParams& params, std::size_t index) {
    if (params.theorem != 1 && params.theorem != 2) throw Error(Errc::InvalidParams, "theorem must be 1 or 2");
    CorpusRecord r;
    r.index = index;
    r.hash = graph_hash(g);
    r.v = g.order();
    r.e = g.size();
    r.girth = girth(g);
    r.ell = chain_metric(g);
    r.s = s_count(g);
    const auto v = static_cast<std::int64_t>(r.v);
    if (params.theorem == 1) {
        r.kind = BoundKind::Theorem1;
        r.bound = bound_theorem1(static_cast<std::int64_t>(r.s));
    } else {
        r.kind = BoundKind::Theorem2;
        r.k = std::max<std::int64_t>(static_cast<std::int64_t>(r.ell), 1);
        r.bound = bound_theorem2(v, theorem2_girth_parameter(g), r.k);
    }
    auto meets = [&](std::size_t leaves) { return Rational(static_cast<std::int64_t>(leaves)) >= r.bound; };

    bool ok = true;
    try {
        if (r.v <= params.exact_max_v) {
            ExactOptions opt;
            if (params.node_budget) opt.node_budget = params.node_budget;
            auto ex = exact_mlst(g, opt);
            r.exact = ex.u_value;
            if (!ex.exhaustive) r.note = "exact search hit the node budget";
            ok = ok && meets(ex.u_value);
        }
        Construction c = params.theorem == 1 ? construct_theorem1(g) : construct_theorem2(g, r.k);
        r.construct = c.tree.leaf_count;
        ok = ok && meets(c.tree.leaf_count);
        if (replay_trace(g, c.trace).tree_edges != c.tree.tree_edges) {
            ok = false;
            r.note = "trace replay produced a different tree";
        }
    } catch (const Error& e) {
        ok = false;
        r.note = e.what();
    }
    r.pass = ok;
    return r;
}

CorpusReport verify_corpus(const CorpusParams& params) {
    CorpusReport report;
    report.seed = params.seed;
    for (std::size_t i = 0; i < params.count; ++i) {
        auto r = verify_instance(corpus_instance(params, i), params, i);
        (r.pass ? report.passed : report.failed) += 1;
        report.records.push_back(std::move(r));
    }
    return report;
}

}  // namespace leafspan
