#pragma once

#include <string>

#include "superspace/rational.hpp"

namespace superspace {

// An exact value coeff * pi^(half_pi_exp / 2).
//
// Every integral over a fixed (m, n) lands on a single power of pi, so sums
// are only defined between equal exponents (or when one side is zero).
class PiScaledValue {
 public:
  PiScaledValue() = default;
  explicit PiScaledValue(Rational coeff, int half_pi_exp = 0);

  const Rational& coeff() const noexcept { return coeff_; }
  int half_pi_exp() const noexcept { return half_pi_exp_; }
  bool is_zero() const noexcept { return sgn(coeff_) == 0; }

  // Throws PreconditionError on mismatched nonzero exponents.
  PiScaledValue& operator+=(const PiScaledValue& rhs);
  PiScaledValue& operator-=(const PiScaledValue& rhs);
  PiScaledValue& operator*=(const PiScaledValue& rhs);
  PiScaledValue& operator*=(const Rational& c);
  // Throws PreconditionError on division by zero.
  PiScaledValue& operator/=(const PiScaledValue& rhs);

  friend PiScaledValue operator+(PiScaledValue a, const PiScaledValue& b) { return a += b; }
  friend PiScaledValue operator-(PiScaledValue a, const PiScaledValue& b) { return a -= b; }
  friend PiScaledValue operator-(PiScaledValue a) { return a *= Rational(-1); }
  friend PiScaledValue operator*(PiScaledValue a, const PiScaledValue& b) { return a *= b; }
  friend PiScaledValue operator*(PiScaledValue a, const Rational& c) { return a *= c; }
  friend PiScaledValue operator*(const Rational& c, PiScaledValue a) { return a *= c; }
  friend PiScaledValue operator/(PiScaledValue a, const PiScaledValue& b) { return a /= b; }

  friend bool operator==(const PiScaledValue& a, const PiScaledValue& b) {
    return a.half_pi_exp_ == b.half_pi_exp_ && a.coeff_ == b.coeff_;
  }

  // e.g. "3/4*pi^(1/2)", "2*pi^(-1)", "0".
  std::string to_string() const;

 private:
  void canonicalize();

  Rational coeff_{0};
  int half_pi_exp_ = 0;
};

}  // namespace superspace
