#pragma once

#include <compare>
#include <string>

namespace superspace {

// Dimensions of the superspace R^{m|2n}: m commuting and 2n anticommuting
// generators. The super-dimension M = m - 2n drives every coefficient formula.
class SpaceParams {
 public:
  // Fermionic monomials are stored as 32-bit masks, so 2n <= 32.
  static constexpr int kMaxPairs = 16;

  SpaceParams() = default;
  SpaceParams(int m, int n);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  int fermions() const noexcept { return 2 * n_; }
  int super_dimension() const noexcept { return m_ - 2 * n_; }

  // M in {0, -2, -4, ...}: the Gamma poles of the Fischer formulas.
  bool super_dimension_is_pole() const noexcept {
    const int M = super_dimension();
    return M <= 0 && M % 2 == 0;
  }

  // True when the Fischer decomposition P_k = sum x^{2i} H_{k-2i} holds:
  // either the space is purely fermionic or M avoids the poles.
  bool fischer_regular() const noexcept {
    return m_ == 0 || !super_dimension_is_pole();
  }

  std::string to_string() const;

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;
  friend auto operator<=>(const SpaceParams&, const SpaceParams&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
};

// Throws ParamsMismatch unless a == b.
void require_same_params(const SpaceParams& a, const SpaceParams& b);

}  // namespace superspace
