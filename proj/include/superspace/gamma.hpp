#pragma once

#include "superspace/pi_value.hpp"
#include "superspace/rational.hpp"

namespace superspace {

// Gamma(a + k) / Gamma(a) with a = two_a / 2, evaluated as the rising
// product a (a+1) ... (a+k-1). Always a well-defined rational; callers that
// need the reciprocal must guard against a zero factor themselves.
Rational gamma_ratio(long two_a, int k);

// Exact Gamma(j / 2) as rational * pi^(1/2) for odd j, rational for even j.
// Throws PoleError for j in {0, -2, -4, ...}.
PiScaledValue gamma_half(long j);

}  // namespace superspace
