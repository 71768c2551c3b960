#include "superspace/gamma.hpp"

#include "superspace/errors.hpp"

namespace superspace {

Rational gamma_ratio(long two_a, int k) {
  if (k < 0) throw PreconditionError("gamma_ratio needs k >= 0");
  return rising(half(two_a), k);
}

PiScaledValue gamma_half(long j) {
  if (j <= 0 && j % 2 == 0)
    throw PoleError("Gamma(" + std::to_string(j / 2) + ") is a pole");
  if (j % 2 == 0) return PiScaledValue(factorial(static_cast<int>(j / 2 - 1)));

  // Anchor Gamma(1/2) = pi^(1/2), then Gamma(z+1) = z Gamma(z) in either direction.
  Rational c(1);
  for (long t = 1; t < j; t += 2) c *= half(t);
  for (long t = j; t < 0; t += 2) c /= half(t);
  return PiScaledValue(c, 1);
}

}  // namespace superspace
