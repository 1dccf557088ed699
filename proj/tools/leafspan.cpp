// leafspan: command-line front end for the leafspan library.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leafspan/bounds.hpp"
#include "leafspan/constructive.hpp"
#include "leafspan/corpus.hpp"
#include "leafspan/exact.hpp"
#include "leafspan/extremal.hpp"
#include "leafspan/io.hpp"
#include "leafspan/metrics.hpp"
#include "leafspan/random.hpp"

using namespace leafspan;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Io {
    std::string input;
    std::string output;

    std::string read() const {
        std::ostringstream buf;
        if (input.empty() || input == "-") {
            buf << std::cin.rdbuf();
        } else {
            std::ifstream in(input);
            if (!in) throw Error(Errc::ParseError, "cannot open " + input);
            buf << in.rdbuf();
        }
        return buf.str();
    }

    Graph graph() const { return parse_graph(read()); }

    void write(const std::string& text) const {
        if (output.empty() || output == "-") {
            std::cout << text;
            return;
        }
        std::ofstream out(output);
        if (!out) throw Error(Errc::ParseError, "cannot write " + output);
        out << text;
    }
};

void add_io(CLI::App* cmd, Io& io, bool reads = true) {
    if (reads) cmd->add_option("-i,--input", io.input, "Edge-list file (default: stdin)");
    cmd->add_option("-o,--output", io.output, "Output file (default: stdout)");
}

ExactOptions exact_options() {
    ExactOptions opt;
    if (const char* env = std::getenv("LEAFSPAN_BUDGET")) {
        try {
            opt.node_budget = std::stoull(env);
        } catch (const std::exception&) {
            throw Error(Errc::InvalidParams, "LEAFSPAN_BUDGET must be a non-negative integer");
        }
    }
    return opt;
}

int exit_code(const Error& e) {
    switch (e.code()) {
    case Errc::BoundNotMet:
    case Errc::SearchExhausted: return kExitViolation;
    default: return kExitInput;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximum-leaf spanning trees: exact search, lower bounds, constructions"};
    app.require_subcommand(1);
    int status = kExitPass;

    Io exact_io;
    auto* exact = app.add_subcommand("exact", "Maximum number of leaves, with a witness tree");
    add_io(exact, exact_io);
    exact->callback([&] {
        auto g = exact_io.graph();
        auto r = exact_mlst(g, exact_options());
        std::ostringstream out;
        out << "u=" << r.u_value << " nodes=" << r.nodes_explored << " exhaustive=" << (r.exhaustive ? 1 : 0)
            << " ms=" << std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count() << '\n';
        out << serialize_tree(r.witness);
        exact_io.write(out.str());
    });

    Io bound_io;
    std::string bound_theorem = "1";
    std::optional<std::int64_t> bound_g, bound_k;
    auto* bound = app.add_subcommand("bound", "Evaluate a lower bound on the input and check it against the optimum");
    add_io(bound, bound_io);
    bound->add_option("--theorem", bound_theorem, "1, 2 or kw")->check(CLI::IsMember({"1", "2", "kw"}));
    bound->add_option("--g", bound_g, "Girth parameter (--theorem 2; default: measured girth, 3 for trees)");
    bound->add_option("--k", bound_k, "Chain parameter (--theorem 2; default: max(ell, 1))");
    bound->callback([&] {
        auto g = bound_io.graph();
        const auto v = static_cast<std::int64_t>(g.order());
        BoundReport report;
        if (bound_theorem == "1") {
            report = report_theorem1(static_cast<std::int64_t>(s_count(g)));
        } else if (bound_theorem == "kw") {
            if (g.min_degree() < 3) throw Error(Errc::InvalidParams, "kw bound needs minimum degree 3");
            report = report_kw(v);
        } else {
            const auto ell = static_cast<std::int64_t>(chain_metric(g));
            const auto k = bound_k.value_or(std::max<std::int64_t>(ell, 1));
            if (ell > k) throw Error(Errc::ChainTooLong, "chain metric " + std::to_string(ell) + " exceeds k");
            auto real = girth(g);
            const auto gp = bound_g.value_or(theorem2_girth_parameter(g));
            if (real && gp > static_cast<std::int64_t>(*real)) throw Error(Errc::InvalidParams, "declared girth exceeds the girth");
            report = report_theorem2(v, gp, k);
        }
        auto r = exact_mlst(g, exact_options());
        report.satisfied_by = static_cast<std::int64_t>(r.u_value);
        bound_io.write(to_json(report) + "\n");
        if (!report.satisfied()) status = kExitViolation;
    });

    Io cons_io;
    std::string cons_theorem = "1";
    std::optional<std::int64_t> cons_g, cons_k;
    bool cons_trace = false;
    auto* cons = app.add_subcommand("construct", "Build a spanning tree meeting the theorem's bound");
    add_io(cons, cons_io);
    cons->add_option("--theorem", cons_theorem, "1 or 2")->check(CLI::IsMember({"1", "2"}));
    cons->add_option("--g", cons_g, "Declared girth (--theorem 2)");
    cons->add_option("--k", cons_k, "Chain parameter (--theorem 2; default: max(ell, 1))");
    cons->add_flag("--trace", cons_trace, "Append the reduction trace");
    cons->callback([&] {
        auto g = cons_io.graph();
        Construction c;
        if (cons_theorem == "1") {
            c = construct_theorem1(g);
        } else {
            Theorem2Options opt;
            opt.girth = cons_g;
            const auto k = cons_k.value_or(std::max<std::int64_t>(static_cast<std::int64_t>(chain_metric(g)), 1));
            c = construct_theorem2(g, k, opt);
        }
        std::string out = serialize_tree(c.tree);
        if (cons_trace) out += serialize_trace(c.trace);
        cons_io.write(out);
    });

    Io gen_io;
    std::string family = "triangle-tree";
    std::int64_t gen_n = 1, gen_g = 3, gen_k = 1, gen_copies = 1;
    auto* gen = app.add_subcommand("gen", "Generate an extremal family instance");
    add_io(gen, gen_io, false);
    gen->add_option("--family", family, "triangle-tree or cycle-spine")
        ->check(CLI::IsMember({"triangle-tree", "cycle-spine"}));
    gen->add_option("--n", gen_n, "Triangle count (triangle-tree)");
    gen->add_option("--g", gen_g, "Girth (cycle-spine)");
    gen->add_option("--k", gen_k, "Spine length parameter (cycle-spine)");
    gen->add_option("--copies", gen_copies, "Number of chained copies");
    gen->callback([&] {
        auto spec = family == "triangle-tree" ? FamilySpec::triangle_tree(gen_n, gen_copies)
                                              : FamilySpec::cycle_spine(gen_g, gen_k, gen_copies);
        gen_io.write(serialize_graph(glue_extremal_chain(spec, gen_copies)));
    });

    Io rand_io;
    GraphConstraints rc;
    std::size_t rand_girth = 0, rand_ell = 0;
    std::uint64_t rand_seed = 1;
    auto* rnd = app.add_subcommand("random", "Random connected graph under degree, girth and chain constraints");
    add_io(rnd, rand_io, false);
    rnd->add_option("--v", rc.v, "Vertex count")->required();
    rnd->add_option("--min-degree", rc.min_degree, "Minimum degree");
    auto* girth_opt = rnd->add_option("--girth", rand_girth, "Girth at least");
    auto* ell_opt = rnd->add_option("--ell", rand_ell, "Longest degree-2 chain at most");
    rnd->add_option("--seed", rand_seed, "Seed");
    rnd->callback([&] {
        if (girth_opt->count()) rc.girth_at_least = rand_girth;
        if (ell_opt->count()) rc.ell_at_most = rand_ell;
        rand_io.write(serialize_graph(random_constrained_graph(rc, rand_seed)));
    });

    Io ver_io;
    CorpusParams cp;
    std::string ver_theorem = "1";
    auto* ver = app.add_subcommand("verify", "Check a theorem on a seeded random corpus");
    add_io(ver, ver_io, false);
    ver->add_option("--theorem", ver_theorem, "1 or 2")->check(CLI::IsMember({"1", "2"}));
    ver->add_option("--count", cp.count, "Number of instances");
    ver->add_option("--min-v", cp.min_v, "Smallest vertex count");
    ver->add_option("--max-v", cp.max_v, "Largest vertex count");
    ver->add_option("--seed", cp.seed, "Seed");
    ver->add_option("--exact-max-v", cp.exact_max_v, "Run the exact solver up to this order");
    ver->callback([&] {
        cp.theorem = std::stoi(ver_theorem);
        cp.node_budget = exact_options().node_budget;
        auto report = verify_corpus(cp);
        ver_io.write(report.to_text());
        if (!report.all_passed()) status = kExitViolation;
    });

    Io dot_io;
    bool dot_tree = false;
    auto* dot = app.add_subcommand("export-dot", "Graphviz rendering, optionally highlighting a maximum-leaf tree");
    add_io(dot, dot_io);
    dot->add_flag("--mlst", dot_tree, "Highlight a maximum-leaf spanning tree");
    dot->callback([&] {
        auto g = dot_io.graph();
        if (dot_tree) {
            auto t = exact_mlst(g, exact_options()).witness;
            dot_io.write(to_dot(g, &t));
        } else {
            dot_io.write(to_dot(g));
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e);
    }
    return status;
}
