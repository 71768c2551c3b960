#include "superspace/sphere.hpp"

#include <map>

#include "superspace/errors.hpp"
#include "superspace/fischer.hpp"
#include "superspace/gamma.hpp"
#include "superspace/linear_change.hpp"
#include "superspace/operators.hpp"

namespace superspace {

namespace {

Rational sign_power(int k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

Rational four_power(int k) {
  Rational out(1);
  for (int t = 0; t < k; ++t) out *= 4;
  return out;
}

void require_not_pole(const SpaceParams& params, const char* what) {
  if (params.super_dimension_is_pole())
    throw PoleError(std::string(what) + " is undefined for M = " +
                    std::to_string(params.super_dimension()) + " (Gamma pole)");
}

void require_bosons(const SpaceParams& params) {
  if (params.m() < 1) throw PreconditionError("sphere functionals need m >= 1");
}

Polynomial laplace_b_power(Polynomial p, int k) {
  for (int t = 0; t < k && !p.is_zero(); ++t) p = laplace_b(p);
  return p;
}

void require_harmonic_homogeneous(const Polynomial& H) {
  if (!H.is_homogeneous()) throw DegreeError("input is not homogeneous");
  if (!is_harmonic(H)) throw NotHarmonicError("input is not harmonic");
}

// sum_{a,b} K(a,b) v_b d/dv_a, the derivation induced by v -> K v.
Polynomial derivation(const Polynomial& f, const RationalMatrix& K, bool fermionic) {
  Polynomial out(f.params());
  for (std::size_t a = 0; a < K.rows(); ++a) {
    const int ia = static_cast<int>(a) + 1;
    const Polynomial d = partial_derivative(f, fermionic ? Variable::e(ia) : Variable::x(ia));
    if (d.is_zero()) continue;
    for (std::size_t b = 0; b < K.cols(); ++b) {
      if (sgn(K(a, b)) == 0) continue;
      const int ib = static_cast<int>(b) + 1;
      out += K(a, b) * (Polynomial::variable(f.params(), fermionic ? Variable::e(ib) : Variable::x(ib)) * d);
    }
  }
  return out;
}

}  // namespace

PiScaledValue pizzetti(const Polynomial& R) {
  const SpaceParams& params = R.params();
  require_not_pole(params, "the Pizzetti integral");
  const int M = params.super_dimension();
  PiScaledValue total;
  Polynomial current = R;
  for (int k = 0; !current.is_zero(); ++k) {
    const Rational c = current.constant_term();
    if (sgn(c) != 0)
      total += PiScaledValue(2 * sign_power(k) * c / (four_power(k) * factorial(k)), M) /
               gamma_half(2 * k + M);
    current = laplace(current);
  }
  return total;
}

PiScaledValue pizzetti_normalization(const SpaceParams& params) {
  require_not_pole(params, "the Pizzetti integral");
  return PiScaledValue(2, params.super_dimension()) / gamma_half(params.super_dimension());
}

Rational basis_integral(int i, const Polynomial& R) {
  const SpaceParams& params = R.params();
  require_bosons(params);
  if (i < 0 || i > params.n()) throw PreconditionError("int_i needs 0 <= i <= n");
  const Rational kappa = 1 / (four_power(i) * factorial(i) * rising(half(params.m()), i));
  Rational total(0);
  for (int degree : R.degrees()) {
    if (degree % 2 != 0 || degree < 2 * i) continue;
    const int k = degree / 2;
    const Polynomial bucket = R.homogeneous_part(degree);
    Polynomial h(params);
    if (is_harmonic(bucket)) {
      if (k != i) continue;
      h = bucket;
    } else {
      h = fischer_project(bucket, k - i);
    }
    total += sign_power(k - i) * kappa * laplace_b_power(h, i).constant_term();
  }
  return total;
}

SphereFunctional::SphereFunctional(SpaceParams params, std::vector<Rational> weights)
    : params_(params), weights_(std::move(weights)) {
  require_bosons(params_);
  if (weights_.size() != static_cast<std::size_t>(params_.n() + 1))
    throw PreconditionError("a sphere functional needs n + 1 = " + std::to_string(params_.n() + 1) +
                            " weights");
}

SphereFunctional SphereFunctional::basis(SpaceParams params, int i) {
  std::vector<Rational> w(static_cast<std::size_t>(params.n() + 1), Rational(0));
  if (i < 0 || i > params.n()) throw PreconditionError("basis index outside 0..n");
  w[static_cast<std::size_t>(i)] = 1;
  return SphereFunctional(params, std::move(w));
}

Rational SphereFunctional::operator()(const Polynomial& R) const {
  require_same_params(params_, R.params());
  Rational total(0);
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (sgn(weights_[i]) != 0) total += weights_[i] * basis_integral(static_cast<int>(i), R);
  return total;
}

nlohmann::json to_json(const SphereFunctional& T) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& w : T.weights()) a.push_back(to_string(w));
  return {{"a", std::move(a)}};
}

SphereFunctional functional_from_json(const SpaceParams& params, const nlohmann::json& j) {
  std::vector<Rational> w;
  try {
    for (const auto& v : j.at("a")) w.push_back(parse_rational(v.get<std::string>()));
  } catch (const nlohmann::json::exception& err) {
    throw ParseError(std::string("invalid weights JSON: ") + err.what(), 0);
  }
  return SphereFunctional(params, std::move(w));
}

Rational general_integral(const SphereFunctional& T, const Polynomial& R) { return T(R); }

Rational integral_one(const Polynomial& R) {
  const SpaceParams& params = R.params();
  require_bosons(params);
  if (params.n() < 1) throw PreconditionError("int_1 needs n >= 1");
  require_not_pole(params, "int_1");
  const int m = params.m();
  const int M = params.super_dimension();
  const Polynomial x2 = r2(params);
  Rational total(0);
  Polynomial prev = R;  // Delta^{k-1} R
  for (int k = 1; !prev.is_zero(); ++k) {
    const Polynomial next = laplace(prev);
    const Rational value = laplace_b(Rational(2 * M) * prev - x2 * next).constant_term();
    if (sgn(value) != 0)
      total += sign_power(k - 1) * 4 * value /
               (Rational(m * M) * four_power(k + 1) * factorial(k - 1) * rising(Rational(2) + half(M), k - 1));
    prev = next;
  }
  return total;
}

PiScaledValue integral_one_printed_constant(const Polynomial& R) {
  const Rational hat = integral_one(R);
  return PiScaledValue(hat / (4 * factorial(R.params().n()))) * gamma_half(R.params().m() + 2);
}

PiScaledValue berezin(const Polynomial& R) {
  const SpaceParams& params = R.params();
  const int n = params.n();
  Polynomial exp_rf2 = Polynomial::constant(params, 1);
  Polynomial step = Polynomial::constant(params, 1);
  for (int j = 1; j <= n; ++j) {
    step = make_rational(1, j) * (step * rf2(params));
    exp_rf2 += step;
  }
  const Polynomial density = R * exp_rf2;
  const Monomial::FermionMask top =
      n == 0 ? 0 : static_cast<Monomial::FermionMask>((std::uint64_t{1} << (2 * n)) - 1);
  PiScaledValue total;
  for (const auto& [mono, c] : density.terms()) {
    if (mono.ferm_mask() != top) continue;
    PiScaledValue moment(c);
    bool odd = false;
    for (int a : mono.bos()) {
      if (a % 2 != 0) {
        odd = true;
        break;
      }
      moment *= gamma_half(a + 1);
    }
    if (!odd) total += moment;
  }
  return total * PiScaledValue(1, -2 * n);
}

PiScaledValue superspace_pizzetti(const Polynomial& R) {
  return PiScaledValue(exp_neg_quarter_laplace(R).constant_term(), R.params().super_dimension());
}

bool orthogonality_check(const Polynomial& Hk, const Polynomial& Hl, const SphereFunctional& T) {
  require_harmonic_homogeneous(Hk);
  require_harmonic_homogeneous(Hl);
  return sgn(T(Hk * Hl)) == 0 && sgn(T(Hl * Hk)) == 0;
}

bool orthogonality_check(const Polynomial& Hk, const Polynomial& Hl) {
  require_harmonic_homogeneous(Hk);
  require_harmonic_homogeneous(Hl);
  return pizzetti(Hk * Hl).is_zero() && pizzetti(Hl * Hk).is_zero();
}

bool irrep_orthogonality_check(const IrrepComponent& a, const IrrepComponent& b) {
  if (a.label == b.label) throw PreconditionError("irreducible pieces carry the same label");
  return pizzetti(a.part * b.part).is_zero();
}

std::vector<RationalMatrix> so_basis(int m) {
  std::vector<RationalMatrix> out;
  const auto size = static_cast<std::size_t>(m);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      RationalMatrix K(size, size);
      K(i, j) = 1;
      K(j, i) = -1;
      out.push_back(std::move(K));
    }
  return out;
}

std::vector<RationalMatrix> sp_basis(int n) {
  const auto size = static_cast<std::size_t>(2 * n);
  const RationalMatrix J = symplectic_form(n);
  // Linear map K -> K^T J + J K on the size^2 entries of K.
  RationalMatrix map(size * size, size * size);
  for (std::size_t a = 0; a < size; ++a)
    for (std::size_t b = 0; b < size; ++b) {
      RationalMatrix E(size, size);
      E(a, b) = 1;
      const RationalMatrix image = E.transpose() * J + J * E;
      for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) map(r * size + c, a * size + b) = image(r, c);
    }
  std::vector<RationalMatrix> out;
  for (const auto& v : nullspace(map)) {
    RationalMatrix K(size, size);
    for (std::size_t a = 0; a < size; ++a)
      for (std::size_t b = 0; b < size; ++b) K(a, b) = v[a * size + b];
    out.push_back(std::move(K));
  }
  if (out.size() != static_cast<std::size_t>(n * (2 * n + 1)))
    throw InvariantViolation("sp(2n) basis has the wrong dimension");
  return out;
}

int invariant_functional_space_dim(const SpaceParams& params, int degree_cap) {
  require_bosons(params);
  if (degree_cap < 2 * params.n() + 2)
    throw PreconditionError("degree cap must be at least 2n + 2 = " + std::to_string(2 * params.n() + 2));

  const auto so = so_basis(params.m());
  const auto sp = sp_basis(params.n());
  const Polynomial x2 = r2(params);

  struct Degree {
    std::vector<Monomial> basis;
    std::map<Monomial, std::size_t> index;
    std::vector<std::vector<Rational>> invariants;  // functionals on this degree
    std::size_t offset = 0;                         // first coupling unknown
  };
  std::vector<Degree> degrees(static_cast<std::size_t>(degree_cap + 1));
  std::size_t unknowns = 0;

  for (int d = 0; d <= degree_cap; ++d) {
    Degree& deg = degrees[static_cast<std::size_t>(d)];
    deg.basis = monomial_basis(params, d);
    for (std::size_t c = 0; c < deg.basis.size(); ++c) deg.index.emplace(deg.basis[c], c);
    // Rows: T(L f) = 0 for every generator L and basis monomial f.
    std::vector<std::vector<Rational>> rows;
    auto add_rows = [&](const RationalMatrix& K, bool fermionic) {
      for (const auto& mono : deg.basis) {
        const Polynomial image = derivation(Polynomial::term(params, mono), K, fermionic);
        if (image.is_zero()) continue;
        std::vector<Rational> row(deg.basis.size(), Rational(0));
        for (const auto& [t, c] : image.terms()) row[deg.index.at(t)] = c;
        rows.push_back(std::move(row));
      }
    };
    for (const auto& K : so) add_rows(K, false);
    for (const auto& K : sp) add_rows(K, true);
    RationalMatrix a(rows.size(), deg.basis.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < deg.basis.size(); ++c) a(r, c) = rows[r][c];
    deg.invariants = rows.empty() ? std::vector<std::vector<Rational>>{} : nullspace(a);
    if (rows.empty())
      for (std::size_t c = 0; c < deg.basis.size(); ++c) {
        std::vector<Rational> e(deg.basis.size(), Rational(0));
        e[c] = 1;
        deg.invariants.push_back(std::move(e));
      }
    deg.offset = unknowns;
    unknowns += deg.invariants.size();
  }

  // T_{d+2}(x^2 f) + T_d(f) = 0 for every monomial f of degree d <= cap - 2.
  std::vector<std::vector<Rational>> rows;
  for (int d = 0; d + 2 <= degree_cap; ++d) {
    const Degree& low = degrees[static_cast<std::size_t>(d)];
    const Degree& high = degrees[static_cast<std::size_t>(d + 2)];
    for (std::size_t f = 0; f < low.basis.size(); ++f) {
      std::vector<Rational> row(unknowns, Rational(0));
      for (std::size_t a = 0; a < low.invariants.size(); ++a) row[low.offset + a] += low.invariants[a][f];
      const Polynomial lifted = x2 * Polynomial::term(params, low.basis[f]);
      for (std::size_t b = 0; b < high.invariants.size(); ++b) {
        Rational value(0);
        for (const auto& [t, c] : lifted.terms()) value += c * high.invariants[b][high.index.at(t)];
        row[high.offset + b] += value;
      }
      rows.push_back(std::move(row));
    }
  }
  RationalMatrix system(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) system(r, c) = rows[r][c];
  return static_cast<int>(unknowns - rank(system));
}

}  // namespace superspace
