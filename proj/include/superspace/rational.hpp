#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace superspace {

using Rational = mpq_class;

// p/q in lowest terms. q must be nonzero.
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q" (no whitespace). Throws ParseError.
Rational parse_rational(std::string_view text);

// Canonical "p" or "p/q" form, as produced by GMP.
std::string to_string(const Rational& q);

// a (a+1) ... (a+k-1); the empty product is 1.
Rational rising(const Rational& a, int k);

// j (j-1) ... (j-k+1); the empty product is 1.
Rational falling(const Rational& j, int k);

Rational factorial(int k);

// Binomial coefficient with C(n, k) = 0 whenever k < 0 or k > n, n >= 0;
// and C(-1, -1) = 1 so that monomial counts in zero variables come out right.
std::int64_t binomial(std::int64_t n, std::int64_t k);

inline Rational half(long twice) { return make_rational(twice, 2); }

}  // namespace superspace
