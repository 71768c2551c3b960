#include "superspace/random.hpp"

#include "superspace/errors.hpp"
#include "superspace/linear_change.hpp"

namespace superspace {

Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<long> num(1, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  std::bernoulli_distribution negative(0.5);
  const long p = num(rng);
  return make_rational(negative(rng) ? -p : p, den(rng));
}

Polynomial random_homogeneous(const SpaceParams& params, int k, int max_terms, Rng& rng) {
  Polynomial out(params);
  const auto basis = monomial_basis(params, k);
  if (basis.empty()) return out;
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  for (int t = count(rng); t > 0; --t) out.add_term(basis[pick(rng)], random_rational(rng));
  return out;
}

Polynomial random_polynomial(const SpaceParams& params, int max_degree, int max_terms,
                             Rng& rng) {
  Polynomial out(params);
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<int> count(1, max_terms);
  for (int t = count(rng); t > 0; --t) out += random_homogeneous(params, degree(rng), 1, rng);
  return out;
}

RationalMatrix random_antisymmetric(std::size_t n, Rng& rng) {
  RationalMatrix S(n, n);
  std::bernoulli_distribution zero(0.25);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (zero(rng)) continue;
      S(i, j) = random_rational(rng, 3, 3);
      S(j, i) = -S(i, j);
    }
  return S;
}

RationalMatrix random_orthogonal(int m, Rng& rng) {
  // I - S is invertible for antisymmetric S: its eigenvalues are 1 - i t.
  auto A = cayley(random_antisymmetric(static_cast<std::size_t>(m), rng));
  if (!A) throw InvariantViolation("Cayley transform of an antisymmetric matrix failed");
  return *A;
}

RationalMatrix random_symplectic(int n, Rng& rng) {
  const auto size = static_cast<std::size_t>(2 * n);
  const auto J = symplectic_form(n);
  const auto J_inv = inverse(J);
  if (!J_inv) throw InvariantViolation("symplectic form is singular");
  std::bernoulli_distribution zero(0.3);
  for (int attempt = 0; attempt < 100; ++attempt) {
    RationalMatrix S(size, size);
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i; j < size; ++j) {
        if (zero(rng)) continue;
        S(i, j) = random_rational(rng, 3, 3);
        S(j, i) = S(i, j);
      }
    if (auto D = cayley(*J_inv * S)) return *D;
  }
  throw InvariantViolation("no invertible Cayley transform found");
}

}  // namespace superspace
