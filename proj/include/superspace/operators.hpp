#pragma once

#include <string_view>

#include "superspace/polynomial.hpp"

namespace superspace {

// Tags for every operator below, used by the CLI and the Python bindings.
enum class OperatorTag {
  Laplace,
  LaplaceB,
  LaplaceF,
  Euler,
  EulerB,
  EulerF,
  MulR2,
  MulRB2,
  MulRF2,
  LB,
  LBB,
  LBF,
};

// Super Laplacian Delta = Delta_b + Delta_f with
//   Delta_b = -sum_j d^2/dx_j^2,   Delta_f = 4 sum_j d/de_{2j-1} d/de_{2j}.
Polynomial laplace(const Polynomial& p);
Polynomial laplace_b(const Polynomial& p);
Polynomial laplace_f(const Polynomial& p);

// Delta applied k times.
Polynomial laplace_power(const Polynomial& p, int k);

// Euler operators: multiply each monomial by its total, bosonic or fermionic
// degree respectively.
Polynomial euler(const Polynomial& p);
Polynomial euler_b(const Polynomial& p);
Polynomial euler_f(const Polynomial& p);

// x^2 = x`^2 + x_^2 with x_^2 = -sum x_j^2 and x`^2 = sum e_{2j-1} e_{2j}.
Polynomial r2(const SpaceParams& params);
Polynomial rb2(const SpaceParams& params);
Polynomial rf2(const SpaceParams& params);

Polynomial mul_r2(const Polynomial& p);
Polynomial mul_rb2(const Polynomial& p);
Polynomial mul_rf2(const Polynomial& p);

// Laplace-Beltrami operators
//   LB   = x^2 Delta     - E   (M - 2 + E)
//   LB_b = x_^2 Delta_b  - E_b (m - 2 + E_b)
//   LB_f = x`^2 Delta_f  - E_f (-2n - 2 + E_f)
Polynomial laplace_beltrami(const Polynomial& p);
Polynomial lb_bosonic(const Polynomial& p);
Polynomial lb_fermionic(const Polynomial& p);

// sum_k (-1/4)^k Delta^k p / k!; finite since Delta lowers the degree by 2.
Polynomial exp_neg_quarter_laplace(const Polynomial& p);

Polynomial apply(OperatorTag tag, const Polynomial& p);
std::string_view operator_name(OperatorTag tag);

}  // namespace superspace
