#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leafspan/bounds.hpp"
#include "leafspan/graph.hpp"

namespace leafspan {

struct CorpusParams {
    int theorem = 1;  // 1 or 2
    std::size_t count = 500;
    std::size_t min_v = 2;
    std::size_t max_v = 12;
    std::uint64_t seed = 1;
    std::size_t exact_max_v = 16;  // exact oracle up to this order, constructed leaf count only above
    std::uint64_t node_budget = 0;  // 0: solver default
};

/// Instance `index` of the corpus; depends only on (seed, index, min_v, max_v).
Graph corpus_instance(const CorpusParams& params, std::size_t index);

struct CorpusRecord {
    std::size_t index = 0;
    std::string hash;
    std::size_t v = 0, e = 0;
    std::optional<std::size_t> girth;
    std::size_t ell = 0;
    std::size_t s = 0;
    std::int64_t k = 0;  // chain bound only
    BoundKind kind = BoundKind::Theorem1;
    Rational bound;
    std::optional<std::size_t> exact;      // u(G)
    std::optional<std::size_t> construct;  // leaves of the constructed tree
    bool pass = false;
    std::string note;  // error text when an instance failed

    std::string to_line() const;
};

struct CorpusReport {
    std::vector<CorpusRecord> records;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::uint64_t seed = 0;

    bool all_passed() const { return failed == 0; }
    /// One line per record, then "total=<n> pass=<p> fail=<f> seed=<seed>".
    std::string to_text() const;
};

/// Checks the selected theorem on every instance: the exact optimum (when
/// small enough) and the constructed tree must both reach the bound, and the
/// construction's trace must replay to the same tree.
CorpusReport verify_corpus(const CorpusParams& params);

CorpusRecord verify_instance(const Graph& g, const CorpusParams& params, std::size_t index);

}  // namespace leafspan
