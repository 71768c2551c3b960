#pragma once

#include <random>

#include "superspace/matrix.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// Generators for property checks. Deterministic given the engine state.
using Rng = std::mt19937_64;

// Nonzero rational p/q with |p| <= max_num, 1 <= q <= max_den.
Rational random_rational(Rng& rng, int max_num = 5, int max_den = 3);

// Up to `max_terms` random monomials of degree <= max_degree.
Polynomial random_polynomial(const SpaceParams& params, int max_degree, int max_terms,
                             Rng& rng);

// Up to `max_terms` random monomials of degree exactly k (zero if P_k = 0).
Polynomial random_homogeneous(const SpaceParams& params, int k, int max_terms, Rng& rng);

RationalMatrix random_antisymmetric(std::size_t n, Rng& rng);

// Cayley image of a random antisymmetric matrix: a rational element of SO(m).
RationalMatrix random_orthogonal(int m, Rng& rng);

// Cayley image of a random K with J K symmetric: a rational element of Sp(2n)
// for the form J of symplectic_form(n).
RationalMatrix random_symplectic(int n, Rng& rng);

}  // namespace superspace
