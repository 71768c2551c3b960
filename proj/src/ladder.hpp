#pragma once

#include <functional>
#include <vector>

#include "superspace/polynomial.hpp"

namespace superspace::detail {

using LinearOp = std::function<Polynomial(const Polynomial&)>;

// The Fischer projectors P_i^k for a generic sl2 ladder: `lowering` plays the
// role of Delta, `ladder` of x^2 and `two_m` of 2 * (M/2) = M. Returns the
// harmonic components for i = 0 .. k/2 (zero entries kept).
//
// Coefficient of ladder^l lowering^{i+l} R, with a = k - 2i - l - 1 + M/2:
//   (-1)^l / (4^{l+i} l! i!) / prod_{t = 0..i+l, t != l} (a + t)
// Throws PoleError if a factor vanishes.
std::vector<Polynomial> ladder_components(const Polynomial& R, int k, int M,
                                          const LinearOp& lowering,
                                          const Polynomial& ladder);

}  // namespace superspace::detail
