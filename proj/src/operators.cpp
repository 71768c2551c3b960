#include "superspace/operators.hpp"

#include "superspace/errors.hpp"

namespace superspace {

namespace {

// Applies a diagonal operator: each monomial is scaled by weight(monomial).
template <typename Weight>
Polynomial scale_terms(const Polynomial& p, Weight weight) {
  Polynomial out(p.params());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, c * weight(mono));
  return out;
}

void add_bosonic_laplace(const Polynomial& p, Polynomial& out) {
  for (const auto& [mono, c] : p.terms()) {
    for (std::size_t j = 0; j < mono.bos().size(); ++j) {
      const int e = mono.bos()[j];
      if (e < 2) continue;
      std::vector<int> bos = mono.bos();
      bos[j] -= 2;
      out.add_term(Monomial(std::move(bos), mono.ferm_mask()), c * (-e * (e - 1)));
    }
  }
}

void add_fermionic_laplace(const Polynomial& p, Polynomial& out) {
  const int n = p.params().n();
  for (const auto& [mono, c] : p.terms()) {
    for (int j = 1; j <= n; ++j) {
      // d/de_{2j-1} (d/de_{2j} mono), both left derivatives.
      auto inner = mono_derivative(mono, Variable::e(2 * j));
      if (!inner) continue;
      auto outer = mono_derivative(inner->second, Variable::e(2 * j - 1));
      if (!outer) continue;
      out.add_term(outer->second, c * (4 * inner->first * outer->first));
    }
  }
}

}  // namespace

Polynomial laplace(const Polynomial& p) {
  Polynomial out(p.params());
  add_bosonic_laplace(p, out);
  add_fermionic_laplace(p, out);
  return out;
}

Polynomial laplace_b(const Polynomial& p) {
  Polynomial out(p.params());
  add_bosonic_laplace(p, out);
  return out;
}

Polynomial laplace_f(const Polynomial& p) {
  Polynomial out(p.params());
  add_fermionic_laplace(p, out);
  return out;
}

Polynomial laplace_power(const Polynomial& p, int k) {
  if (k < 0) throw PreconditionError("negative Laplacian power");
  Polynomial out = p;
  for (int i = 0; i < k && !out.is_zero(); ++i) out = laplace(out);
  return out;
}

Polynomial euler(const Polynomial& p) {
  return scale_terms(p, [](const Monomial& mono) { return mono.degree(); });
}

Polynomial euler_b(const Polynomial& p) {
  return scale_terms(p, [](const Monomial& mono) { return mono.bosonic_degree(); });
}

Polynomial euler_f(const Polynomial& p) {
  return scale_terms(p, [](const Monomial& mono) { return mono.fermionic_degree(); });
}

Polynomial rb2(const SpaceParams& params) {
  Polynomial out(params);
  for (int j = 1; j <= params.m(); ++j) {
    std::vector<int> bos(static_cast<std::size_t>(params.m()), 0);
    bos[static_cast<std::size_t>(j - 1)] = 2;
    out.add_term(Monomial(std::move(bos), 0), -1);
  }
  return out;
}

Polynomial rf2(const SpaceParams& params) {
  Polynomial out(params);
  for (int j = 1; j <= params.n(); ++j) {
    const Monomial::FermionMask pair = Monomial::FermionMask{3} << (2 * j - 2);
    out.add_term(Monomial(std::vector<int>(static_cast<std::size_t>(params.m()), 0), pair), 1);
  }
  return out;
}

Polynomial r2(const SpaceParams& params) { return rb2(params) + rf2(params); }

Polynomial mul_r2(const Polynomial& p) { return r2(p.params()) * p; }
Polynomial mul_rb2(const Polynomial& p) { return rb2(p.params()) * p; }
Polynomial mul_rf2(const Polynomial& p) { return rf2(p.params()) * p; }

Polynomial laplace_beltrami(const Polynomial& p) {
  const int shift = p.params().super_dimension() - 2;
  return mul_r2(laplace(p)) - scale_terms(p, [shift](const Monomial& mono) {
           const int k = mono.degree();
           return k * (shift + k);
         });
}

Polynomial lb_bosonic(const Polynomial& p) {
  const int shift = p.params().m() - 2;
  return mul_rb2(laplace_b(p)) - scale_terms(p, [shift](const Monomial& mono) {
           const int k = mono.bosonic_degree();
           return k * (shift + k);
         });
}

Polynomial lb_fermionic(const Polynomial& p) {
  const int shift = -2 * p.params().n() - 2;
  return mul_rf2(laplace_f(p)) - scale_terms(p, [shift](const Monomial& mono) {
           const int k = mono.fermionic_degree();
           return k * (shift + k);
         });
}

Polynomial exp_neg_quarter_laplace(const Polynomial& p) {
  Polynomial out = p;
  Polynomial current = p;
  Rational weight(1);
  for (int k = 1; !current.is_zero(); ++k) {
    current = laplace(current);
    weight *= make_rational(-1, 4 * k);
    out += weight * current;
  }
  return out;
}

Polynomial apply(OperatorTag tag, const Polynomial& p) {
  switch (tag) {
    case OperatorTag::Laplace: return laplace(p);
    case OperatorTag::LaplaceB: return laplace_b(p);
    case OperatorTag::LaplaceF: return laplace_f(p);
    case OperatorTag::Euler: return euler(p);
    case OperatorTag::EulerB: return euler_b(p);
    case OperatorTag::EulerF: return euler_f(p);
    case OperatorTag::MulR2: return mul_r2(p);
    case OperatorTag::MulRB2: return mul_rb2(p);
    case OperatorTag::MulRF2: return mul_rf2(p);
    case OperatorTag::LB: return laplace_beltrami(p);
    case OperatorTag::LBB: return lb_bosonic(p);
    case OperatorTag::LBF: return lb_fermionic(p);
  }
  throw PreconditionError("unknown operator tag");
}

std::string_view operator_name(OperatorTag tag) {
  switch (tag) {
    case OperatorTag::Laplace: return "laplace";
    case OperatorTag::LaplaceB: return "laplace_b";
    case OperatorTag::LaplaceF: return "laplace_f";
    case OperatorTag::Euler: return "euler";
    case OperatorTag::EulerB: return "euler_b";
    case OperatorTag::EulerF: return "euler_f";
    case OperatorTag::MulR2: return "mul_r2";
    case OperatorTag::MulRB2: return "mul_rb2";
    case OperatorTag::MulRF2: return "mul_rf2";
    case OperatorTag::LB: return "laplace_beltrami";
    case OperatorTag::LBB: return "lb_bosonic";
    case OperatorTag::LBF: return "lb_fermionic";
  }
  return "unknown";
}

}  // namespace superspace
