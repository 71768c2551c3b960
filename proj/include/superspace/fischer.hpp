#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "superspace/matrix.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// Which x^2 the components are stacked on: the full x^2, or x`^2 for the
// purely fermionic decomposition.
enum class Ladder { Super, Fermionic };

// One summand x^{2i} H_{k-2i}.
struct FischerComponent {
  int i = 0;
  Polynomial harmonic;
};

struct DecompositionReport {
  int k = 0;
  SpaceParams params;
  std::vector<FischerComponent> components;  // ascending i, zero summands dropped
  Ladder ladder = Ladder::Super;

  // sum_i ladder^i * components[i].harmonic
  Polynomial reconstruct() const;
};

// {"k":int,"components":[{"i":int,"harmonic":<poly>}]}, plus "ladder":"fermionic"
// when the fermionic ladder was used.
nlohmann::json to_json(const DecompositionReport& report);

std::int64_t dim_Pk(const SpaceParams& params, int k);
// dim P_k - dim P_{k-2}; for m = 0 this is the fermionic count below.
std::int64_t dim_Hk(const SpaceParams& params, int k);
std::int64_t dim_Hk_bosonic(int m, int k);
// C(2n,k) - C(2n,k-2) for k <= n, and 0 above.
std::int64_t dim_Hk_fermionic(int n, int k);

bool is_harmonic(const Polynomial& p);

// Matrix of Delta: P_k -> P_{k-2} in the monomial bases.
RationalMatrix laplace_matrix(const SpaceParams& params, int k);

// Canonical nullspace basis of laplace_matrix(params, k).
std::vector<Polynomial> harmonic_basis(const SpaceParams& params, int k);

// H_{k-2i} component of a homogeneous R of degree k.
// Throws PoleError when m > 0 and M is in {0, -2, ...}, DegreeError when R is
// not homogeneous, PreconditionError when i is outside 0..k/2.
Polynomial fischer_project(const Polynomial& R, int i);

// x^{2i} H_{k-2i}, via the product of shifted Laplace-Beltrami operators.
Polynomial fischer_project_lb(const Polynomial& R, int i);

// Full decomposition of a homogeneous R. For m = 0 the fermionic route is
// used (x^2 = x`^2 there). Reconstruction is checked before returning.
DecompositionReport fischer_decompose(const Polynomial& R);

// One report per degree bucket of an arbitrary polynomial.
std::vector<DecompositionReport> fischer_decompose_buckets(const Polynomial& R);

}  // namespace superspace
