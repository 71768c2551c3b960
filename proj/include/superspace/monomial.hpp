#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "superspace/space.hpp"

namespace superspace {

// A generator of the algebra: bosonic x_i (i in 1..m) or fermionic e_j
// (j in 1..2n). Indices are 1-based, matching the text syntax.
struct Variable {
  enum class Kind { Boson, Fermion };

  Kind kind = Kind::Boson;
  int index = 1;

  static Variable x(int i) { return {Kind::Boson, i}; }
  static Variable e(int j) { return {Kind::Fermion, j}; }

  bool is_fermion() const noexcept { return kind == Kind::Fermion; }

  // Throws PreconditionError if the index is out of range for `params`.
  void validate(const SpaceParams& params) const;

  friend bool operator==(const Variable&, const Variable&) = default;
};

// x^alpha * e_{j1} e_{j2} ... e_{jr} with j1 < j2 < ... < jr.
//
// The fermionic factor is stored as a bitmask (bit j-1 set <=> e_j present);
// the ascending order is implied, so every sign is normalized at construction.
class Monomial {
 public:
  using FermionMask = std::uint32_t;

  Monomial() = default;
  explicit Monomial(int m) : bos_(static_cast<std::size_t>(m), 0) {}
  Monomial(std::vector<int> bos, FermionMask ferm);

  // Builds x^bos times e_{ferm...} for a strictly increasing index list.
  // Throws PreconditionError on repeated or unordered indices.
  static Monomial from_indices(std::vector<int> bos,
                               const std::vector<int>& ferm);

  const std::vector<int>& bos() const noexcept { return bos_; }
  FermionMask ferm_mask() const noexcept { return ferm_; }
  std::vector<int> ferm_indices() const;

  int bosonic_degree() const noexcept;
  int fermionic_degree() const noexcept;
  int degree() const noexcept { return bosonic_degree() + fermionic_degree(); }
  bool is_odd() const noexcept { return fermionic_degree() % 2 != 0; }
  bool is_constant() const noexcept { return ferm_ == 0 && bosonic_degree() == 0; }
  bool has_fermion(int j) const noexcept { return (ferm_ >> (j - 1)) & 1U; }

  // Width of the bosonic exponent vector (the m it was built for).
  int m() const noexcept { return static_cast<int>(bos_.size()); }

  // Graded order: total degree first, then bosonic exponents (higher powers
  // of lower-index variables first), then the fermion mask.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> bos_;
  FermionMask ferm_ = 0;
};

struct SignedMonomial {
  int sign = 1;
  Monomial monomial;
};

// Product a*b. Absent when a and b share a fermionic index (Grassmann
// generators square to zero); otherwise the merged monomial together with
// the parity of the permutation that sorts the concatenated fermion lists.
std::optional<SignedMonomial> mono_mul(const Monomial& a, const Monomial& b);

// Left derivative with respect to `v`. For a fermion e_j the sign is
// (-1)^(number of fermions in the monomial with index < j). Absent when the
// result vanishes; the integer factor carries the exponent for bosons.
std::optional<std::pair<int, Monomial>> mono_derivative(const Monomial& mono,
                                                        const Variable& v);

}  // namespace superspace
