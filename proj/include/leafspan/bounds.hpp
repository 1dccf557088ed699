#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace leafspan {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);  // "7" or "9/2"
double to_double(const Rational& r);

/// Lower bound on leaves from the count s of vertices whose degree is not 2:
/// (s - 2)/4 + 2.
Rational bound_theorem1(std::int64_t s);

/// v/4 + 2, valid when the minimum degree is at least 3.
Rational bound_kw(std::int64_t v);

/// Cycle half-parameter used by the sparse regime: ceil(g/2) - 1.
std::int64_t alpha_n(std::int64_t g);

/// Leaf-density coefficient for girth >= g and chain bound k:
///   k <  g-2:  n / (n(k+3) + 1)   with n = ceil(g/2) - 1
///   k >= g-2:  (g-2) / ((g-1)(k+2))
/// Throws Error{InvalidParams} unless g >= 3 and k >= 1.
Rational alpha(std::int64_t g, std::int64_t k);

/// alpha(g,k) * (v - k - 2) + 2. Throws Error{InvalidParams}.
Rational bound_theorem2(std::int64_t v, std::int64_t g, std::int64_t k);

// Intermediate coefficients of the base-case analysis.
Rational beta(std::int64_t h, std::int64_t k);                    // (h-2)/((h-1)(k+2))
Rational gamma(std::int64_t h, std::int64_t m, std::int64_t k);   // (m-1)/(h+(k+1)m-k-2)
Rational beta_prime(std::int64_t h, std::int64_t k);              // gamma at m = ceil(h/2)

enum class BoundKind { Theorem1, Theorem2, KleitmanWest };

const char* bound_kind_name(BoundKind kind);

struct BoundParams {
    std::int64_t g = 0;
    std::int64_t k = 0;
    std::int64_t n = 0;
};

struct BoundReport {
    BoundKind kind = BoundKind::Theorem1;
    Rational value;
    std::int64_t size_param = 0;  // s for Theorem1, v otherwise
    std::optional<BoundParams> params;
    std::optional<std::int64_t> satisfied_by;

    bool satisfied() const { return satisfied_by && Rational(*satisfied_by) >= value; }
};

BoundReport report_theorem1(std::int64_t s);
BoundReport report_kw(std::int64_t v);
BoundReport report_theorem2(std::int64_t v, std::int64_t g, std::int64_t k);

/// One-line JSON record: kind, params, numerator, denominator, decimal.
std::string to_json(const BoundReport& report);

}  // namespace leafspan
