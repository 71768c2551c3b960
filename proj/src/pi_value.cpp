#include "superspace/pi_value.hpp"

#include "superspace/errors.hpp"

namespace superspace {

PiScaledValue::PiScaledValue(Rational coeff, int half_pi_exp)
    : coeff_(std::move(coeff)), half_pi_exp_(half_pi_exp) {
  canonicalize();
}

void PiScaledValue::canonicalize() {
  if (sgn(coeff_) == 0) half_pi_exp_ = 0;
}

PiScaledValue& PiScaledValue::operator+=(const PiScaledValue& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (half_pi_exp_ != rhs.half_pi_exp_)
    throw PreconditionError("adding values with different powers of pi: " + to_string() +
                            " + " + rhs.to_string());
  coeff_ += rhs.coeff_;
  canonicalize();
  return *this;
}

PiScaledValue& PiScaledValue::operator-=(const PiScaledValue& rhs) { return *this += -rhs; }

PiScaledValue& PiScaledValue::operator*=(const PiScaledValue& rhs) {
  coeff_ *= rhs.coeff_;
  half_pi_exp_ += rhs.half_pi_exp_;
  canonicalize();
  return *this;
}

PiScaledValue& PiScaledValue::operator*=(const Rational& c) {
  coeff_ *= c;
  canonicalize();
  return *this;
}

PiScaledValue& PiScaledValue::operator/=(const PiScaledValue& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero value");
  coeff_ /= rhs.coeff_;
  half_pi_exp_ -= rhs.half_pi_exp_;
  canonicalize();
  return *this;
}

std::string PiScaledValue::to_string() const {
  std::string out = superspace::to_string(coeff_);
  if (half_pi_exp_ == 0) return out;
  out += "*pi";
  if (half_pi_exp_ == 2) return out;
  out += "^(";
  out += half_pi_exp_ % 2 == 0 ? std::to_string(half_pi_exp_ / 2)
                               : std::to_string(half_pi_exp_) + "/2";
  return out + ")";
}

}  // namespace superspace
