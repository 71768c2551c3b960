#include "superspace/monomial.hpp"

#include <bit>
#include <numeric>

#include "superspace/errors.hpp"

namespace superspace {

void Variable::validate(const SpaceParams& params) const {
  const int limit = is_fermion() ? params.fermions() : params.m();
  if (index < 1 || index > limit) {
    throw PreconditionError(std::string(is_fermion() ? "e" : "x") +
                            std::to_string(index) + " is not a generator of " +
                            params.to_string());
  }
}

Monomial::Monomial(std::vector<int> bos, FermionMask ferm)
    : bos_(std::move(bos)), ferm_(ferm) {
  for (int e : bos_)
    if (e < 0) throw PreconditionError("negative bosonic exponent");
}

Monomial Monomial::from_indices(std::vector<int> bos, const std::vector<int>& ferm) {
  FermionMask mask = 0;
  int previous = 0;
  for (int j : ferm) {
    if (j <= previous || j > 32)
      throw PreconditionError("fermion indices must be strictly increasing in 1..32");
    mask |= FermionMask{1} << (j - 1);
    previous = j;
  }
  return Monomial(std::move(bos), mask);
}

std::vector<int> Monomial::ferm_indices() const {
  std::vector<int> out;
  for (FermionMask rest = ferm_; rest != 0; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

int Monomial::bosonic_degree() const noexcept {
  return std::accumulate(bos_.begin(), bos_.end(), 0);
}

int Monomial::fermionic_degree() const noexcept { return std::popcount(ferm_); }

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  // Reversed lexicographic order on exponents: x1^2 before x1*x2 before x2^2.
  if (auto c = b.bos_ <=> a.bos_; c != 0) return c;
  return a.ferm_ <=> b.ferm_;
}

std::optional<SignedMonomial> mono_mul(const Monomial& a, const Monomial& b) {
  if ((a.ferm_mask() & b.ferm_mask()) != 0) return std::nullopt;
  if (a.bos().size() != b.bos().size())
    throw ParamsMismatch("monomials with different bosonic widths");

  // Each fermion of b moves left past every fermion of a with larger index.
  int inversions = 0;
  for (Monomial::FermionMask rest = b.ferm_mask(); rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    const Monomial::FermionMask above = ~((Monomial::FermionMask{2} << bit) - 1);
    inversions += std::popcount(a.ferm_mask() & above);
  }

  std::vector<int> bos = a.bos();
  for (std::size_t i = 0; i < bos.size(); ++i) bos[i] += b.bos()[i];
  return SignedMonomial{inversions % 2 == 0 ? 1 : -1,
                        Monomial(std::move(bos), a.ferm_mask() | b.ferm_mask())};
}

std::optional<std::pair<int, Monomial>> mono_derivative(const Monomial& mono,
                                                        const Variable& v) {
  if (v.is_fermion()) {
    if (v.index < 1 || v.index > 32 || !mono.has_fermion(v.index)) return std::nullopt;
    const Monomial::FermionMask bit = Monomial::FermionMask{1} << (v.index - 1);
    const int before = std::popcount(mono.ferm_mask() & (bit - 1));
    return std::pair{before % 2 == 0 ? 1 : -1,
                     Monomial(mono.bos(), mono.ferm_mask() & ~bit)};
  }
  const auto slot = static_cast<std::size_t>(v.index - 1);
  if (v.index < 1 || slot >= mono.bos().size() || mono.bos()[slot] == 0) return std::nullopt;
  std::vector<int> bos = mono.bos();
  const int exponent = bos[slot]--;
  return std::pair{exponent, Monomial(std::move(bos), mono.ferm_mask())};
}

}  // namespace superspace
