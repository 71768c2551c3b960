#include "superspace/space.hpp"

#include "superspace/errors.hpp"

namespace superspace {

SpaceParams::SpaceParams(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0) throw PreconditionError("m and n must be nonnegative");
  if (n > kMaxPairs)
    throw PreconditionError("at most " + std::to_string(kMaxPairs) +
                            " fermionic pairs are supported");
}

std::string SpaceParams::to_string() const {
  return "(m=" + std::to_string(m_) + ", n=" + std::to_string(n_) + ")";
}

void require_same_params(const SpaceParams& a, const SpaceParams& b) {
  if (a != b)
    throw ParamsMismatch("operands over " + a.to_string() + " and " + b.to_string());
}

}  // namespace superspace
