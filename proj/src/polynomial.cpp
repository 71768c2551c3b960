#include "superspace/polynomial.hpp"

#include <algorithm>
#include <bit>

#include "superspace/errors.hpp"

namespace superspace {

Polynomial Polynomial::constant(SpaceParams params, const Rational& c) {
  return term(params, Monomial(params.m()), c);
}

Polynomial Polynomial::term(SpaceParams params, const Monomial& mono, const Rational& c) {
  if (mono.m() != params.m())
    throw ParamsMismatch("monomial width does not match " + params.to_string());
  if (params.fermions() < 32 &&
      (mono.ferm_mask() >> params.fermions()) != 0)
    throw ParamsMismatch("monomial uses fermions beyond " + params.to_string());
  Polynomial p(params);
  p.add_term(mono, c);
  return p;
}

Polynomial Polynomial::variable(SpaceParams params, const Variable& v) {
  v.validate(params);
  Monomial mono(params.m());
  if (v.is_fermion()) {
    mono = Monomial(std::vector<int>(static_cast<std::size_t>(params.m()), 0),
                    Monomial::FermionMask{1} << (v.index - 1));
  } else {
    std::vector<int> bos(static_cast<std::size_t>(params.m()), 0);
    bos[static_cast<std::size_t>(v.index - 1)] = 1;
    mono = Monomial(std::move(bos), 0);
  }
  return term(params, mono);
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  // Map order is graded, so the last key has the top degree.
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::vector<int> Polynomial::degrees() const {
  std::vector<int> out;
  for (const auto& [mono, c] : terms_)
    if (out.empty() || out.back() != mono.degree()) out.push_back(mono.degree());
  return out;
}

Polynomial Polynomial::homogeneous_part(int k) const {
  Polynomial out(params_);
  for (const auto& [mono, c] : terms_)
    if (mono.degree() == k) out.terms_.emplace_hint(out.terms_.end(), mono, c);
  return out;
}

bool Polynomial::is_purely_bosonic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.ferm_mask() == 0; });
}

bool Polynomial::is_purely_fermionic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.first.bosonic_degree() == 0; });
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(params_.m())); }

void Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  require_same_params(params_, rhs.params_);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  require_same_params(params_, rhs.params_);
  for (const auto& [mono, c] : rhs.terms_) add_term(mono, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  require_same_params(p.params_, q.params_);
  Polynomial out(p.params_);
  for (const auto& [a, ca] : p.terms_) {
    for (const auto& [b, cb] : q.terms_) {
      if (auto prod = mono_mul(a, b)) {
        Rational c = ca * cb;
        if (prod->sign < 0) c = -c;
        out.add_term(prod->monomial, c);
      }
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.params_ == b.params_ && a.terms_ == b.terms_;
}

Polynomial power(const Polynomial& p, int k) {
  if (k < 0) throw PreconditionError("negative polynomial power");
  Polynomial out = Polynomial::constant(p.params(), 1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Polynomial partial_derivative(const Polynomial& p, const Variable& v) {
  v.validate(p.params());
  Polynomial out(p.params());
  for (const auto& [mono, c] : p.terms()) {
    if (auto d = mono_derivative(mono, v)) out.add_term(d->second, c * d->first);
  }
  return out;
}

Polynomial lift(const Polynomial& p, const SpaceParams& target) {
  if (target.m() < p.params().m() || target.n() < p.params().n())
    throw PreconditionError("cannot lift " + p.params().to_string() + " into " +
                            target.to_string());
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) {
    std::vector<int> bos = mono.bos();
    bos.resize(static_cast<std::size_t>(target.m()), 0);
    out.add_term(Monomial(std::move(bos), mono.ferm_mask()), c);
  }
  return out;
}

namespace {

void compositions(int remaining, std::size_t slot, std::vector<int>& current,
                  std::vector<std::vector<int>>& out) {
  if (slot + 1 == current.size()) {
    current[slot] = remaining;
    out.push_back(current);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[slot] = e;
    compositions(remaining - e, slot + 1, current, out);
  }
  current[slot] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(const SpaceParams& params, int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  const int fermions = params.fermions();
  for (int f = 0; f <= std::min(k, fermions); ++f) {
    const int b = k - f;
    std::vector<std::vector<int>> bos_parts;
    if (params.m() == 0) {
      if (b == 0) bos_parts.emplace_back();
    } else {
      std::vector<int> current(static_cast<std::size_t>(params.m()), 0);
      compositions(b, 0, current, bos_parts);
    }
    if (bos_parts.empty()) continue;
    // Every f-subset of the 2n fermions, enumerated as masks (Gosper's hack).
    const std::uint64_t limit = std::uint64_t{1} << fermions;
    for (std::uint64_t mask = (std::uint64_t{1} << f) - 1; mask < limit;) {
      for (const auto& bos : bos_parts)
        out.emplace_back(bos, static_cast<Monomial::FermionMask>(mask));
      if (mask == 0) break;
      const std::uint64_t low = mask & -mask;
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace superspace
