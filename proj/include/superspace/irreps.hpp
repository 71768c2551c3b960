#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "superspace/fischer.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// Piece f_{l,p,q} H^b_p (x) H^f_q of H_{2l+p+q}.
struct IrrepLabel {
  int l = 0;
  int p = 0;
  int q = 0;
  int degree() const noexcept { return 2 * l + p + q; }
  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

struct IrrepComponent {
  IrrepLabel label;
  Polynomial part;
};

// {"l":int,"p":int,"q":int,"part":<poly>}
nlohmann::json to_json(const IrrepComponent& component);

// Coefficients a_0..a_l of f^_{l,p,q} = sum_i a_i x_^{2l-2i} x`^{2i}, scaled so
// that a_0 = 1:
//   a_i = C(l,i) (m/2+p+l-i)_i / ((n-q)(n-q-1)...(n-q-i+1))
// Requires l = 0, or q < n and l <= n - q (PreconditionError otherwise).
std::vector<Rational> f_coefficients(int l, int p, int q, const SpaceParams& params);
Polynomial f_poly(int l, int p, int q, const SpaceParams& params);

// Labels of the summands of H_k, in the order: the l = 0 family by q, then
// l >= 1 by (q, l).
std::vector<IrrepLabel> irrep_labels(const SpaceParams& params, int k);

// Q_{r,s}^k applied to a harmonic H of degree k: the product of shifted
// Laplace-Beltrami operators selecting bosonic degree k-2r-s and fermionic
// degree s. Bosonic factors run over the degrees that can occur next to s
// (same parity, nonzero H^b). Throws NotHarmonicError, DegreeError, and
// PreconditionError for labels outside H_k.
Polynomial q_projector(const Polynomial& H, int r, int s);

// Nonzero irreducible pieces of a harmonic H; they sum to H exactly.
std::vector<IrrepComponent> irrep_decompose(const Polynomial& H);

// Both sides of dim H_k = sum dim H^b dim H^f over the label set.
std::pair<std::int64_t, std::int64_t> dim_check(const SpaceParams& params, int k);

// x`^{2i} H^f_{k-2i} decomposition of a purely fermionic homogeneous R of
// degree k; degrees above n use the mirrored ladder x`^{2(n-k')+2i}, k' = 2n-k.
DecompositionReport fermionic_fischer_decompose(const Polynomial& R);

// Basis of H^f_k over (0, n), built recursively pair by pair:
//   H_k = H_k(rest) + e_a H_{k-1}(rest) + e_b H_{k-1}(rest)
//         + (e_a e_b + x`^2(rest) / (k - n - 1)) H_{k-2}(rest)
// Throws DegreeError for k > n.
std::vector<Polynomial> fermionic_harmonic_basis(int n, int k);

// Basis of H^b_k over (m, 0).
std::vector<Polynomial> bosonic_harmonic_basis(int m, int k);

}  // namespace superspace
