#include "superspace/fischer.hpp"

#include <map>

#include "ladder.hpp"
#include "superspace/errors.hpp"
#include "superspace/io.hpp"
#include "superspace/irreps.hpp"
#include "superspace/operators.hpp"

namespace superspace {

namespace {

std::int64_t count_bosonic(int m, int d) {
  if (d < 0) return 0;
  if (m == 0) return d == 0 ? 1 : 0;
  return binomial(d + m - 1, m - 1);
}

void require_regular(const SpaceParams& params) {
  if (!params.fischer_regular())
    throw PoleError("Fischer decomposition undefined for m = " + std::to_string(params.m()) +
                    ", M = " + std::to_string(params.super_dimension()) + " (M in -2N)");
}

int homogeneous_degree(const Polynomial& R) {
  if (!R.is_homogeneous()) throw DegreeError("input is not homogeneous");
  return R.degree().value_or(0);
}

std::vector<Polynomial> super_components(const Polynomial& R, int k) {
  require_regular(R.params());
  return detail::ladder_components(R, k, R.params().super_dimension(),
                                   [](const Polynomial& p) { return laplace(p); }, r2(R.params()));
}

Polynomial component_of(const DecompositionReport& report, int i) {
  for (const auto& c : report.components)
    if (c.i == i) return c.harmonic;
  return Polynomial(report.params);
}

}  // namespace

Polynomial DecompositionReport::reconstruct() const {
  const Polynomial step = ladder == Ladder::Super ? r2(params) : rf2(params);
  Polynomial out(params);
  for (const auto& c : components) out += power(step, c.i) * c.harmonic;
  return out;
}

nlohmann::json to_json(const DecompositionReport& report) {
  nlohmann::json components = nlohmann::json::array();
  for (const auto& c : report.components)
    components.push_back({{"i", c.i}, {"harmonic", polynomial_to_json(c.harmonic)}});
  nlohmann::json out = {{"k", report.k}, {"components", std::move(components)}};
  if (report.ladder == Ladder::Fermionic) out["ladder"] = "fermionic";
  return out;
}

std::int64_t dim_Pk(const SpaceParams& params, int k) {
  std::int64_t total = 0;
  for (int i = 0; i <= std::min(k, params.fermions()); ++i)
    total += binomial(params.fermions(), i) * count_bosonic(params.m(), k - i);
  return total;
}

std::int64_t dim_Hk(const SpaceParams& params, int k) {
  if (k < 0) return 0;
  if (params.m() == 0) return dim_Hk_fermionic(params.n(), k);
  return dim_Pk(params, k) - dim_Pk(params, k - 2);
}

std::int64_t dim_Hk_bosonic(int m, int k) { return count_bosonic(m, k) - count_bosonic(m, k - 2); }

std::int64_t dim_Hk_fermionic(int n, int k) {
  if (k < 0 || k > n) return 0;
  return binomial(2 * n, k) - binomial(2 * n, k - 2);
}

bool is_harmonic(const Polynomial& p) { return laplace(p).is_zero(); }

RationalMatrix laplace_matrix(const SpaceParams& params, int k) {
  const auto cols = monomial_basis(params, k);
  const auto rows = monomial_basis(params, k - 2);
  std::map<Monomial, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of.emplace(rows[r], r);
  RationalMatrix a(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Polynomial image = laplace(Polynomial::term(params, cols[c]));
    for (const auto& [mono, coeff] : image.terms()) a(row_of.at(mono), c) = coeff;
  }
  return a;
}

std::vector<Polynomial> harmonic_basis(const SpaceParams& params, int k) {
  if (k < 0) throw PreconditionError("negative degree");
  const auto cols = monomial_basis(params, k);
  std::vector<Polynomial> out;
  for (const auto& v : nullspace(laplace_matrix(params, k))) {
    Polynomial h(params);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (sgn(v[c]) != 0) h.add_term(cols[c], v[c]);
    out.push_back(std::move(h));
  }
  return out;
}

Polynomial fischer_project(const Polynomial& R, int i) {
  const int k = homogeneous_degree(R);
  if (i < 0 || i > k / 2) throw PreconditionError("projector index outside 0..k/2");
  if (R.params().m() == 0) return component_of(fermionic_fischer_decompose(R), i);
  if (R.is_zero()) {
    require_regular(R.params());
    return R;
  }
  return super_components(R, k)[static_cast<std::size_t>(i)];
}

Polynomial fischer_project_lb(const Polynomial& R, int i) {
  const int k = homogeneous_degree(R);
  if (i < 0 || i > k / 2) throw PreconditionError("projector index outside 0..k/2");
  const SpaceParams& params = R.params();
  require_regular(params);
  const int M = params.super_dimension();
  Polynomial out = R;
  for (int l = 0; l <= k / 2 && !out.is_zero(); ++l) {
    // Eigenspaces that are zero need no factor (and for m <= 1 would collide).
    if (l == i || dim_Hk(params, k - 2 * l) == 0) continue;
    const int shift = (k - 2 * l) * (M - 2 + k - 2 * l);
    const int denom = 2 * (i - l) * (2 * k - 2 * i - 2 * l + M - 2);
    if (denom == 0) throw PoleError("Laplace-Beltrami eigenvalues collide in P_" + std::to_string(k));
    out = make_rational(1, denom) * (laplace_beltrami(out) + Rational(shift) * out);
  }
  return out;
}

DecompositionReport fischer_decompose(const Polynomial& R) {
  const int k = homogeneous_degree(R);
  if (R.params().m() == 0) {
    auto report = fermionic_fischer_decompose(R);
    report.ladder = Ladder::Super;
    return report;
  }
  DecompositionReport report{k, R.params(), {}, Ladder::Super};
  if (R.is_zero()) {
    require_regular(R.params());
    return report;
  }
  auto parts = super_components(R, k);
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!parts[i].is_zero()) report.components.push_back({static_cast<int>(i), std::move(parts[i])});
  if (report.reconstruct() != R)
    throw InvariantViolation("Fischer components do not reconstruct the input");
  for (const auto& c : report.components)
    if (!is_harmonic(c.harmonic)) throw InvariantViolation("Fischer component is not harmonic");
  return report;
}

std::vector<DecompositionReport> fischer_decompose_buckets(const Polynomial& R) {
  std::vector<DecompositionReport> out;
  for (int k : R.degrees()) out.push_back(fischer_decompose(R.homogeneous_part(k)));
  return out;
}

}  // namespace superspace
