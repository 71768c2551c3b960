#pragma once

#include <vector>

#include <json.hpp>

#include "superspace/irreps.hpp"
#include "superspace/matrix.hpp"
#include "superspace/pi_value.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// sum_k (-1)^k 2 pi^{M/2} / (4^k k! Gamma(k + M/2)) (Delta^k R)(0).
// Throws PoleError when M is in {0, -2, ...}.
PiScaledValue pizzetti(const Polynomial& R);

// 2 pi^{M/2} / Gamma(M/2), the Pizzetti integral of 1.
PiScaledValue pizzetti_normalization(const SpaceParams& params);

// The basic functional int_i, normalized so that int_i f^_{j,0,0} = delta_ij:
//   int_i R = sum_{k >= i} (-1)^{k-i} kappa_i (Delta_b^i P^{2k}_{k-i} R_{2k})(0)
// with kappa_i = 1 / (4^i i! (m/2)_i). Requires m >= 1 and 0 <= i <= n.
// A harmonic degree bucket is used as is; any other bucket goes through
// fischer_project and so throws PoleError when M is in -2N.
Rational basis_integral(int i, const Polynomial& R);

// T = sum_i a_i int_i, for weights a_0..a_n.
class SphereFunctional {
 public:
  // Throws PreconditionError unless m >= 1 and weights.size() == n + 1.
  SphereFunctional(SpaceParams params, std::vector<Rational> weights);

  // Weight vector e_i.
  static SphereFunctional basis(SpaceParams params, int i);

  const SpaceParams& params() const noexcept { return params_; }
  const std::vector<Rational>& weights() const noexcept { return weights_; }

  Rational operator()(const Polynomial& R) const;

 private:
  SpaceParams params_;
  std::vector<Rational> weights_;
};

// {"a":["p/q",...]}
nlohmann::json to_json(const SphereFunctional& T);
SphereFunctional functional_from_json(const SpaceParams& params, const nlohmann::json& j);

Rational general_integral(const SphereFunctional& T, const Polynomial& R);

// Closed form of int_1 in the f^ normalization:
//   sum_{k >= 1} (-1)^{k-1} 4 / (m M 4^{k+1} (k-1)! (2 + M/2)_{k-1})
//     * (Delta_b (2M Delta^{k-1} - x^2 Delta^k) R)(0)
// Requires m >= 1, n >= 1; throws PoleError when M is in -2N.
Rational integral_one(const Polynomial& R);

// The same sum with the alternative normalization
// c = Gamma(2 + M/2) Gamma(1 + m/2) / (m M n!). It differs from integral_one
// by the factor Gamma(1 + m/2) / (4 n!); see the tests.
PiScaledValue integral_one_printed_constant(const Polynomial& R);

// pi^{-n} times the Gaussian integral over R^m of the coefficient of
// e_1 ... e_2n in R exp(x`^2), against exp(x_^2).
PiScaledValue berezin(const Polynomial& R);

// pi^{M/2} (exp(-Delta/4) R)(0).
PiScaledValue superspace_pizzetti(const Polynomial& R);

// T(Hk Hl) == 0 and T(Hl Hk) == 0. Throws NotHarmonicError / DegreeError.
bool orthogonality_check(const Polynomial& Hk, const Polynomial& Hl, const SphereFunctional& T);
// Same with the Pizzetti integral.
bool orthogonality_check(const Polynomial& Hk, const Polynomial& Hl);

// pizzetti(A.part * B.part) == 0. Throws PreconditionError on equal labels.
bool irrep_orthogonality_check(const IrrepComponent& a, const IrrepComponent& b);

// Dimension of the space of linear functionals on P_{<= cap} that are
// so(m) x sp(2n) invariant and satisfy T(x^2 f) = -T(f) for deg f <= cap - 2.
// Requires m >= 1 and cap >= 2n + 2.
int invariant_functional_space_dim(const SpaceParams& params, int degree_cap);
inline int default_degree_cap(const SpaceParams& params) { return 2 * params.n() + 4; }

// Bases of the Lie algebras used above, as matrices.
std::vector<RationalMatrix> so_basis(int m);
std::vector<RationalMatrix> sp_basis(int n);

}  // namespace superspace
