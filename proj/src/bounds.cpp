#include "leafspan/bounds.hpp"

#include <nlohmann/json.hpp>

#include "leafspan/error.hpp"

namespace leafspan {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw Error(Errc::InvalidParams, what);
}

std::int64_t ceil_half(std::int64_t h) { return (h + 1) / 2; }

}  // namespace

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational bound_theorem1(std::int64_t s) {
    require(s >= 0, "s must be non-negative");
    return Rational(s - 2, 4) + 2;
}

Rational bound_kw(std::int64_t v) {
    require(v >= 1, "v must be positive");
    return Rational(v, 4) + 2;
}

std::int64_t alpha_n(std::int64_t g) { return ceil_half(g) - 1; }

Rational alpha(std::int64_t g, std::int64_t k) {
    require(g >= 3, "g must be at least 3");
    require(k >= 1, "k must be at least 1");
    if (k < g - 2) {
        auto n = alpha_n(g);
        return Rational(n, n * (k + 3) + 1);
    }
    return Rational(g - 2, (g - 1) * (k + 2));
}

Rational bound_theorem2(std::int64_t v, std::int64_t g, std::int64_t k) {
    require(v >= 2, "v must be at least 2");
    return alpha(g, k) * (v - k - 2) + 2;
}

Rational beta(std::int64_t h, std::int64_t k) {
    require(h >= 3 && k >= 1, "beta needs h >= 3, k >= 1");
    return Rational(h - 2, (h - 1) * (k + 2));
}

Rational gamma(std::int64_t h, std::int64_t m, std::int64_t k) {
    require(h >= 3 && k >= 1, "gamma needs h >= 3, k >= 1");
    require(ceil_half(h) <= m && m < h, "gamma needs ceil(h/2) <= m < h");
    return Rational(m - 1, h + (k + 1) * m - k - 2);
}

Rational beta_prime(std::int64_t h, std::int64_t k) {
    require(h >= 3 && k >= 1, "beta_prime needs h >= 3, k >= 1");
    auto m = ceil_half(h);
    return Rational(m - 1, h + (k + 1) * m - k - 2);
}

const char* bound_kind_name(BoundKind kind) {
    switch (kind) {
    case BoundKind::Theorem1: return "theorem1";
    case BoundKind::Theorem2: return "theorem2";
    case BoundKind::KleitmanWest: return "kw";
    }
    return "unknown";
}

BoundReport report_theorem1(std::int64_t s) {
    return BoundReport{BoundKind::Theorem1, bound_theorem1(s), s, std::nullopt, std::nullopt};
}

BoundReport report_kw(std::int64_t v) {
    return BoundReport{BoundKind::KleitmanWest, bound_kw(v), v, std::nullopt, std::nullopt};
}

BoundReport report_theorem2(std::int64_t v, std::int64_t g, std::int64_t k) {
    return BoundReport{BoundKind::Theorem2, bound_theorem2(v, g, k), v, BoundParams{g, k, alpha_n(g)},
                       std::nullopt};
}

std::string to_json(const BoundReport& report) {
    nlohmann::ordered_json j;
    j["kind"] = bound_kind_name(report.kind);
    nlohmann::ordered_json params;
    params[report.kind == BoundKind::Theorem1 ? "s" : "v"] = report.size_param;
    if (report.params) {
        params["g"] = report.params->g;
        params["k"] = report.params->k;
        params["n"] = report.params->n;
        params["alpha"] = to_string(alpha(report.params->g, report.params->k));
    }
    j["params"] = params;
    j["numerator"] = report.value.numerator();
    j["denominator"] = report.value.denominator();
    j["decimal"] = to_double(report.value);
    if (report.satisfied_by) {
        j["satisfied_by"] = *report.satisfied_by;
        j["satisfied"] = report.satisfied();
    }
    return j.dump();
}

}  // namespace leafspan
