#pragma once

#include "superspace/matrix.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// p(S x) for the block-diagonal change of variables S = diag(A, D):
// x_i -> sum_k A(i,k) x_k and e_j -> sum_l D(j,l) e_l. These are the only
// linear maps preserving both the grading and x^2 (up to the group condition
// on A and D). Throws PreconditionError on size mismatch.
Polynomial substitute_linear(const Polynomial& p, const RationalMatrix& A,
                             const RationalMatrix& D);

// The Gram matrix J of the fermionic form: x`^2 = e^T J e, with +1/2 at
// (2j-1, 2j) and -1/2 at (2j, 2j-1).
RationalMatrix symplectic_form(int n);

// Cayley transform (I - K)^{-1} (I + K). Empty when I - K is singular.
std::optional<RationalMatrix> cayley(const RationalMatrix& K);

bool is_orthogonal(const RationalMatrix& A);
// D^T J D == J.
bool is_symplectic(const RationalMatrix& D);

}  // namespace superspace
