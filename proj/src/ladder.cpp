#include "ladder.hpp"

#include "superspace/errors.hpp"

namespace superspace::detail {

namespace {

Rational coefficient(int k, int i, int l, int M) {
  const Rational a = Rational(k - 2 * i - l - 1) + half(M);
  Rational denom = factorial(l) * factorial(i);
  for (int t = 0; t < l + i; ++t) denom *= 4;
  for (int t = 0; t <= i + l; ++t) {
    if (t == l) continue;
    if (sgn(a + t) == 0)
      throw PoleError("Fischer projector coefficient has a Gamma pole (M = " + std::to_string(M) + ")");
    denom *= a + t;
  }
  return (l % 2 == 0 ? Rational(1) : Rational(-1)) / denom;
}

}  // namespace

std::vector<Polynomial> ladder_components(const Polynomial& R, int k, int M,
                                          const LinearOp& lowering,
                                          const Polynomial& ladder) {
  const int top = k / 2;
  std::vector<Polynomial> lowered{R};
  for (int j = 1; j <= top; ++j) lowered.push_back(lowering(lowered.back()));
  std::vector<Polynomial> ladder_pow{Polynomial::constant(R.params(), 1)};
  for (int l = 1; l <= top; ++l) ladder_pow.push_back(ladder_pow.back() * ladder);

  std::vector<Polynomial> out;
  for (int i = 0; i <= top; ++i) {
    Polynomial h(R.params());
    for (int l = 0; i + l <= top; ++l) {
      if (lowered[i + l].is_zero()) continue;
      h += coefficient(k, i, l, M) * (ladder_pow[l] * lowered[i + l]);
    }
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace superspace::detail
