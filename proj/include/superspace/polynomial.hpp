#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superspace/monomial.hpp"
#include "superspace/rational.hpp"
#include "superspace/space.hpp"

namespace superspace {

// Element of P = R[x_1..x_m] (x) Lambda_{2n}: a sparse exact-rational linear
// combination of canonical monomials. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;
  explicit Polynomial(SpaceParams params) : params_(params) {}

  static Polynomial constant(SpaceParams params, const Rational& c);
  static Polynomial term(SpaceParams params, const Monomial& mono,
                         const Rational& c = 1);
  static Polynomial variable(SpaceParams params, const Variable& v);

  const SpaceParams& params() const noexcept { return params_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  // Highest total degree; empty for the zero polynomial.
  std::optional<int> degree() const;
  // Zero counts as homogeneous.
  bool is_homogeneous() const;
  // Distinct total degrees present, ascending.
  std::vector<int> degrees() const;
  Polynomial homogeneous_part(int k) const;

  // True when no term contains a fermionic (resp. bosonic) generator.
  bool is_purely_bosonic() const;
  bool is_purely_fermionic() const;

  Rational coefficient(const Monomial& mono) const;
  // Evaluation at x = e = 0, i.e. the coefficient of 1.
  Rational constant_term() const;

  // Accumulates c * mono, pruning a cancelled coefficient.
  void add_term(const Monomial& mono, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  SpaceParams params_;
  TermMap terms_;
};

// p^k for k >= 0.
Polynomial power(const Polynomial& p, int k);

// Left partial derivative (graded Leibniz rule for fermions).
Polynomial partial_derivative(const Polynomial& p, const Variable& v);

// Re-expresses p over a larger space (extra generators unused).
// Throws PreconditionError when `target` is smaller in either direction.
Polynomial lift(const Polynomial& p, const SpaceParams& target);

// All monomials of total degree k, in canonical order.
std::vector<Monomial> monomial_basis(const SpaceParams& params, int k);

}  // namespace superspace
