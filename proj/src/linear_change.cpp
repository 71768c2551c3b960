#include "superspace/linear_change.hpp"

#include "superspace/errors.hpp"

namespace superspace {

Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& A,
                             const RationalMatrix& D) {
  const SpaceParams& params = p.params();
  const auto m = static_cast<std::size_t>(params.m());
  const auto f = static_cast<std::size_t>(params.fermions());
  if (A.rows() != m || A.cols() != m || D.rows() != f || D.cols() != f)
    throw PreconditionError("substitution matrices must be " + std::to_string(m) + "x" +
                            std::to_string(m) + " and " + std::to_string(f) + "x" +
                            std::to_string(f));

  std::vector<Polynomial> bos_image;
  for (std::size_t i = 0; i < m; ++i) {
    Polynomial y(params);
    for (std::size_t k = 0; k < m; ++k)
      y += A(i, k) * Polynomial::variable(params, Variable::x(static_cast<int>(k + 1)));
    bos_image.push_back(std::move(y));
  }
  std::vector<Polynomial> ferm_image;
  for (std::size_t j = 0; j < f; ++j) {
    Polynomial y(params);
    for (std::size_t l = 0; l < f; ++l)
      y += D(j, l) * Polynomial::variable(params, Variable::e(static_cast<int>(l + 1)));
    ferm_image.push_back(std::move(y));
  }

  Polynomial out(params);
  for (const auto& [mono, c] : p.terms()) {
    Polynomial image = Polynomial::constant(params, c);
    for (std::size_t i = 0; i < m; ++i)
      for (int e = 0; e < mono.bos()[i]; ++e) image = image * bos_image[i];
    // Fermions in ascending order, the canonical order of the monomial.
    for (int j : mono.ferm_indices()) image = image * ferm_image[static_cast<std::size_t>(j - 1)];
    out += image;
  }
  return out;
}

RationalMatrix symplectic_form(int n) {
  RationalMatrix J(static_cast<std::size_t>(2 * n), static_cast<std::size_t>(2 * n));
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    J(2 * j, 2 * j + 1) = make_rational(1, 2);
    J(2 * j + 1, 2 * j) = make_rational(-1, 2);
  }
  return J;
}

std::optional<RationalMatrix> cayley(const RationalMatrix& K) {
  const auto I = RationalMatrix::identity(K.rows());
  auto inv = inverse(I - K);
  if (!inv) return std::nullopt;
  return *inv * (I + K);
}

bool is_orthogonal(const RationalMatrix& A) {
  return A.transpose() * A == RationalMatrix::identity(A.rows());
}

bool is_symplectic(const RationalMatrix& D) {
  const auto J = symplectic_form(static_cast<int>(D.rows() / 2));
  return D.transpose() * J * D == J;
}

}  // namespace superspace
