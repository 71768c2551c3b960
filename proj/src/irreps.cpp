#include "superspace/irreps.hpp"

#include <algorithm>

#include "ladder.hpp"
#include "superspace/errors.hpp"
#include "superspace/io.hpp"
#include "superspace/operators.hpp"

namespace superspace {

namespace {

int homogeneous_degree(const Polynomial& R) {
  if (!R.is_homogeneous()) throw DegreeError("input is not homogeneous");
  return R.degree().value_or(0);
}

void require_harmonic(const Polynomial& H) {
  if (!is_harmonic(H)) throw NotHarmonicError("input is not harmonic");
}

// Same polynomial over (0, n); the input must not involve any x_i.
Polynomial drop_bosons(const Polynomial& p) {
  const SpaceParams target(0, p.params().n());
  Polynomial out(target);
  for (const auto& [mono, c] : p.terms()) out.add_term(Monomial({}, mono.ferm_mask()), c);
  return out;
}

// Multiplication by x`^{2t} as a matrix from P_from to P_{from + 2t} over (0, n).
RationalMatrix ladder_matrix(const SpaceParams& params, int from, int t) {
  const auto cols = monomial_basis(params, from);
  const auto rows = monomial_basis(params, from + 2 * t);
  const Polynomial step = power(rf2(params), t);
  RationalMatrix a(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial image = step * Polynomial::term(params, cols[c]);
    for (const auto& [mono, coeff] : image.terms()) {
      const auto r = static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), mono) - rows.begin());
      a(r, c) = coeff;
    }
  }
  return a;
}

std::vector<Polynomial> fermionic_ladder(const Polynomial& R, int k) {
  const int n = R.params().n();
  return detail::ladder_components(R, k, -2 * n, [](const Polynomial& p) { return laplace_f(p); },
                                   rf2(R.params()));
}

// Pairs first_pair..n of (0, n).
std::vector<Polynomial> pair_basis(int n, int first_pair, int k) {
  const SpaceParams params(0, n);
  const int pairs = n - first_pair + 1;
  if (k < 0 || k > pairs) return {};
  if (k == 0) return {Polynomial::constant(params, 1)};

  const int a = 2 * first_pair - 1;
  const int b = 2 * first_pair;
  std::vector<Polynomial> out = pair_basis(n, first_pair + 1, k);
  const auto ea = Polynomial::variable(params, Variable::e(a));
  const auto eb = Polynomial::variable(params, Variable::e(b));
  for (const auto& h : pair_basis(n, first_pair + 1, k - 1)) {
    out.push_back(ea * h);
    out.push_back(eb * h);
  }
  Polynomial rest_r2(params);
  for (int j = first_pair + 1; j <= n; ++j)
    rest_r2 += Polynomial::variable(params, Variable::e(2 * j - 1)) *
               Polynomial::variable(params, Variable::e(2 * j));
  const Polynomial lead = ea * eb + make_rational(1, k - pairs - 1) * rest_r2;
  for (const auto& h : pair_basis(n, first_pair + 1, k - 2)) out.push_back(lead * h);
  return out;
}

}  // namespace

nlohmann::json to_json(const IrrepComponent& component) {
  return {{"l", component.label.l},
          {"p", component.label.p},
          {"q", component.label.q},
          {"part", polynomial_to_json(component.part)}};
}

std::vector<Rational> f_coefficients(int l, int p, int q, const SpaceParams& params) {
  const int n = params.n();
  if (l < 0 || p < 0 || q < 0 || q > n) throw PreconditionError("f label out of range");
  if (l > 0 && l > n - q)
    throw PreconditionError("f_{l,p,q} needs q < n and l <= n - q");
  std::vector<Rational> a;
  for (int i = 0; i <= l; ++i)
    a.push_back(Rational(binomial(l, i)) * rising(half(params.m() + 2 * p + 2 * l - 2 * i), i) /
                falling(Rational(n - q), i));
  return a;
}

Polynomial f_poly(int l, int p, int q, const SpaceParams& params) {
  const auto a = f_coefficients(l, p, q, params);
  const Polynomial xb2 = rb2(params);
  const Polynomial xf2 = rf2(params);
  Polynomial out(params);
  for (int i = 0; i <= l; ++i)
    out += a[static_cast<std::size_t>(i)] * (power(xb2, l - i) * power(xf2, i));
  return out;
}

std::vector<IrrepLabel> irrep_labels(const SpaceParams& params, int k) {
  const int n = params.n();
  std::vector<IrrepLabel> out;
  if (k < 0) return out;
  for (int i = 0; i <= std::min(n, k); ++i) out.push_back({0, k - i, i});
  for (int j = 0; j <= std::min(n, k - 1) - 1; ++j)
    for (int l = 1; l <= std::min(n - j, (k - j) / 2); ++l) out.push_back({l, k - 2 * l - j, j});
  return out;
}

Polynomial q_projector(const Polynomial& H, int r, int s) {
  const int k = homogeneous_degree(H);
  require_harmonic(H);
  const SpaceParams& params = H.params();
  const int m = params.m();
  const int n = params.n();
  const int p = k - 2 * r - s;
  if (r < 0 || s < 0 || p < 0 || s > std::min(n, k))
    throw PreconditionError("Q_{" + std::to_string(r) + "," + std::to_string(s) +
                            "} is not a label of H_" + std::to_string(k));

  Polynomial out = H;
  for (int i = 0; i <= k && !out.is_zero(); ++i) {
    if (i == p || (i - p) % 2 != 0 || dim_Hk_bosonic(m, i) == 0) continue;
    const int denom = (i - p) * (i + p + m - 2);
    if (denom == 0) throw PoleError("bosonic Laplace-Beltrami eigenvalues collide");
    out = make_rational(1, denom) * (lb_bosonic(out) + Rational(i * (m - 2 + i)) * out);
  }
  for (int j = 0; j <= std::min(n, k) && !out.is_zero(); ++j) {
    if (j == s) continue;
    const int denom = (j - s) * (j + s - 2 * n - 2);
    if (denom == 0) throw PoleError("fermionic Laplace-Beltrami eigenvalues collide");
    out = make_rational(1, denom) * (lb_fermionic(out) + Rational(j * (-2 * n - 2 + j)) * out);
  }
  return out;
}

std::vector<IrrepComponent> irrep_decompose(const Polynomial& H) {
  const int k = homogeneous_degree(H);
  require_harmonic(H);
  std::vector<IrrepComponent> out;
  if (H.is_zero()) return out;
  Polynomial total(H.params());
  for (const auto& label : irrep_labels(H.params(), k)) {
    Polynomial part = q_projector(H, label.l, label.q);
    if (part.is_zero()) continue;
    total += part;
    out.push_back({label, std::move(part)});
  }
  if (total != H) throw InvariantViolation("irreducible pieces do not sum to the input");
  return out;
}

std::pair<std::int64_t, std::int64_t> dim_check(const SpaceParams& params, int k) {
  const int m = params.m();
  const int n = params.n();
  std::int64_t rhs = 0;
  for (int i = 0; i <= std::min(n, k); ++i) rhs += dim_Hk_bosonic(m, k - i) * dim_Hk_fermionic(n, i);
  for (int j = 0; j <= std::min(n, k - 1) - 1; ++j)
    for (int l = 1; l <= std::min(n - j, (k - j) / 2); ++l)
      rhs += dim_Hk_bosonic(m, k - 2 * l - j) * dim_Hk_fermionic(n, j);
  return {dim_Hk(params, k), rhs};
}

DecompositionReport fermionic_fischer_decompose(const Polynomial& R) {
  const SpaceParams& params = R.params();
  if (!R.is_purely_fermionic()) throw PreconditionError("input involves bosonic variables");
  const int K = homogeneous_degree(R);
  const int n = params.n();
  if (K > 2 * n) throw DegreeError("degree exceeds 2n");

  DecompositionReport report{K, params, {}, Ladder::Fermionic};
  if (R.is_zero()) return report;

  const Polynomial Rf = drop_bosons(R);
  const SpaceParams& F = Rf.params();
  std::vector<Polynomial> parts;
  int offset = 0;
  if (K <= n) {
    parts = fermionic_ladder(Rf, K);
  } else {
    // R = x`^{2(n-k')} R' with R' of degree k' = 2n - K; the map is bijective.
    const int k_low = 2 * n - K;
    offset = n - k_low;
    const auto rows = monomial_basis(F, K);
    std::vector<Rational> rhs;
    for (const auto& mono : rows) rhs.push_back(Rf.coefficient(mono));
    const auto sol = solve(ladder_matrix(F, k_low, offset), rhs);
    if (!sol) throw InvariantViolation("x`^2 ladder is not onto in degree " + std::to_string(K));
    const auto cols = monomial_basis(F, k_low);
    Polynomial low(F);
    for (std::size_t c = 0; c < cols.size(); ++c) low.add_term(cols[c], (*sol)[c]);
    parts = fermionic_ladder(low, k_low);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].is_zero()) continue;
    if (!laplace_f(parts[i]).is_zero()) throw InvariantViolation("fermionic component is not harmonic");
    report.components.push_back({offset + static_cast<int>(i), lift(parts[i], params)});
  }
  if (report.reconstruct() != R)
    throw InvariantViolation("fermionic Fischer components do not reconstruct the input");
  return report;
}

std::vector<Polynomial> fermionic_harmonic_basis(int n, int k) {
  if (k < 0 || k > n) throw DegreeError("H^f_k is only nonzero for 0 <= k <= n");
  return pair_basis(n, 1, k);
}

std::vector<Polynomial> bosonic_harmonic_basis(int m, int k) {
  return harmonic_basis(SpaceParams(m, 0), k);
}

}  // namespace superspace
