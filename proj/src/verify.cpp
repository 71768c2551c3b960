#include "superspace/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

#include "superspace/errors.hpp"
#include "superspace/gamma.hpp"
#include "superspace/io.hpp"
#include "superspace/irreps.hpp"
#include "superspace/linear_change.hpp"
#include "superspace/operators.hpp"
#include "superspace/random.hpp"
#include "superspace/sphere.hpp"

namespace superspace {

namespace {

class Check {
 public:
  Check(std::string id, std::string name) {
    result_.id = std::move(id);
    result_.name = std::move(name);
  }

  template <typename Describe>
  void expect(bool ok, Describe&& describe) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.counterexample = describe();
    }
  }

  bool failed() const { return !result_.passed; }
  CheckResult& result() { return result_; }

 private:
  CheckResult result_;
};

using Body = std::function<void(Check&, Rng&)>;

CheckResult run_check(const std::string& id, const std::string& name, std::uint64_t seed,
                      const Body& body) {
  Check check(id, name);
  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check, rng);
  } catch (const std::exception& err) {
    check.expect(false, [&] { return std::string("unexpected exception: ") + err.what(); });
  }
  check.result().seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return check.result();
}

std::string show(const Polynomial& p) { return p.params().to_string() + " " + format_polynomial(p); }

std::vector<SpaceParams> grid(int m_lo, int m_hi, int n_lo, int n_hi, bool regular_only) {
  std::vector<SpaceParams> out;
  for (int m = m_lo; m <= m_hi; ++m)
    for (int n = n_lo; n <= n_hi; ++n) {
      SpaceParams s(m, n);
      if (!regular_only || s.fischer_regular()) out.push_back(s);
    }
  return out;
}

// The grid {1,2,3} x {0,1,2} without the poles.
std::vector<SpaceParams> fischer_grid() { return grid(1, 3, 0, 2, true); }

Polynomial r2_power(const SpaceParams& s, int t) { return power(r2(s), t); }

Rational four_power(int k) {
  Rational out(1);
  for (int t = 0; t < k; ++t) out *= 4;
  return out;
}

// First and last basis vectors of H_k plus one random combination.
std::vector<Polynomial> sample_harmonics(const SpaceParams& s, int k, Rng& rng) {
  const auto basis = harmonic_basis(s, k);
  std::vector<Polynomial> out;
  if (basis.empty()) return out;
  out.push_back(basis.front());
  if (basis.size() > 1) out.push_back(basis.back());
  if (basis.size() > 2) {
    Polynomial mix(s);
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int t = 0; t < 4; ++t) mix += random_rational(rng) * basis[pick(rng)];
    if (!mix.is_zero()) out.push_back(mix);
  }
  return out;
}

// Generated pieces f^_{l,p,q} h_b h_f of H_k, a few per label.
std::vector<IrrepComponent> sample_pieces(const SpaceParams& s, int k) {
  std::vector<IrrepComponent> out;
  for (const auto& label : irrep_labels(s, k)) {
    if (dim_Hk_bosonic(s.m(), label.p) == 0 || dim_Hk_fermionic(s.n(), label.q) == 0) continue;
    const auto f = f_poly(label.l, label.p, label.q, s);
    const auto hb = bosonic_harmonic_basis(s.m(), label.p);
    const auto hf = fermionic_harmonic_basis(s.n(), label.q);
    for (const auto* b : {&hb.front(), &hb.back()})
      for (const auto* e : {&hf.front(), &hf.back()})
        out.push_back({label, f * lift(*b, s) * lift(*e, s)});
  }
  return out;
}

// ---------------------------------------------------------------- criteria

void sl2_relations(Check& check, Rng& rng) {
  for (const auto& s : grid(0, 3, 0, 2, false)) {
    const Rational shift = half(s.super_dimension());
    auto X = [](const Polynomial& p) { return half(1) * mul_r2(p); };
    auto Y = [](const Polynomial& p) { return half(-1) * laplace(p); };
    auto H = [&](const Polynomial& p) { return euler(p) + shift * p; };
    for (int t = 0; t < 17; ++t) {
      const auto p = random_polynomial(s, 6, 5, rng);
      check.expect(H(X(p)) - X(H(p)) == Rational(2) * X(p), [&] { return "[H,X] on " + show(p); });
      check.expect(H(Y(p)) - Y(H(p)) == Rational(-2) * Y(p), [&] { return "[H,Y] on " + show(p); });
      check.expect(X(Y(p)) - Y(X(p)) == H(p), [&] { return "[X,Y] on " + show(p); });
    }
  }
}

void laplace_x2_constants(Check& check, Rng& rng) {
  for (const auto& s : fischer_grid()) {
    const Rational half_M = half(s.super_dimension());
    for (int k = 0; k <= 3; ++k)
      for (const auto& H : sample_harmonics(s, k, rng))
        for (int j = 0; j <= 3; ++j) {
          const Polynomial x = r2_power(s, j) * H;
          Polynomial lowered = x;
          for (int i = 0; i <= 3; ++i) {
            if (i > 0) lowered = laplace(lowered);
            const Rational c = four_power(i) * falling(Rational(j), i) *
                               rising(Rational(k + j - i) + half_M, i);
            const Polynomial expected = i > j ? Polynomial(s) : c * (r2_power(s, j - i) * H);
            check.expect(lowered == expected, [&] {
              return "i=" + std::to_string(i) + " j=" + std::to_string(j) + " H=" + show(H);
            });
          }
        }
  }
}

void fischer_reconstruction(Check& check, Rng&) {
  for (const auto& s : fischer_grid())
    for (int k = 0; k <= 6; ++k)
      for (const auto& mono : monomial_basis(s, k)) {
        const Polynomial R = Polynomial::term(s, mono);
        const auto report = fischer_decompose(R);
        check.expect(report.reconstruct() == R, [&] { return "reconstruction of " + show(R); });
        std::vector<Polynomial> parts(static_cast<std::size_t>(k / 2 + 1), Polynomial(s));
        for (const auto& c : report.components) parts[static_cast<std::size_t>(c.i)] = c.harmonic;
        for (int i = 0; i <= k / 2; ++i) {
          const auto& Pi = parts[static_cast<std::size_t>(i)];
          check.expect(Pi == fischer_project(R, i), [&] { return "P_i^k mismatch on " + show(R); });
          check.expect(is_harmonic(Pi), [&] { return "P_i^k not harmonic on " + show(R); });
          check.expect(fischer_project_lb(R, i) == r2_power(s, i) * Pi, [&] {
            return "LB projector i=" + std::to_string(i) + " on " + show(R);
          });
        }
      }
  const SpaceParams pole(2, 1);
  bool raised = false;
  try {
    fischer_project(Polynomial::term(pole, Monomial({1, 1}, 0)), 0);
  } catch (const PoleError&) {
    raised = true;
  }
  check.expect(raised, [] { return std::string("no PoleError at (m,n) = (2,1)"); });
}

void dimension_oracle(Check& check, Rng&) {
  for (const auto& s : fischer_grid())
    for (int k = 0; k <= 6; ++k) {
      const auto kernel = nullspace(laplace_matrix(s, k));
      const auto expected = dim_Pk(s, k) - dim_Pk(s, k - 2);
      check.expect(static_cast<std::int64_t>(kernel.size()) == expected, [&] {
        return s.to_string() + " k=" + std::to_string(k) + ": nullity " + std::to_string(kernel.size()) +
               " vs " + std::to_string(expected);
      });
    }
}

void dimension_identity(Check& check, Rng&) {
  for (const auto& s : fischer_grid())
    for (int k = 0; k <= 6; ++k) {
      const auto [lhs, rhs] = dim_check(s, k);
      check.expect(lhs == rhs, [&] {
        return s.to_string() + " k=" + std::to_string(k) + ": " + std::to_string(lhs) + " vs " +
               std::to_string(rhs);
      });
    }
}

void irreducible_decomposition(Check& check, Rng&) {
  for (const auto& s : fischer_grid())
    for (int k = 0; k <= 4; ++k) {
      for (const auto& H : harmonic_basis(s, k)) {
        Polynomial total(s);
        for (const auto& c : irrep_decompose(H)) total += c.part;
        check.expect(total == H, [&] { return "pieces do not sum to " + show(H); });
      }
      const auto labels = irrep_labels(s, k);
      for (const auto& piece : sample_pieces(s, k)) {
        check.expect(is_harmonic(piece.part), [&] { return "f h_b h_f not harmonic: " + show(piece.part); });
        for (const auto& label : labels) {
          const bool own = label.l == piece.label.l && label.q == piece.label.q;
          const Polynomial image = q_projector(piece.part, label.l, label.q);
          check.expect(image == (own ? piece.part : Polynomial(s)), [&] {
            return "Q_{" + std::to_string(label.l) + "," + std::to_string(label.q) + "} on " + show(piece.part);
          });
        }
      }
    }
}

// Reference coefficient lists for f_{1,0,0}, f_{2,0,0}, f_{3,0,0}.
std::vector<Rational> printed_f(int l, int m, int n) {
  const Rational M(m), N(n);
  switch (l) {
    case 1: return {1, M / (2 * N)};
    case 2: return {1, (M + 2) / N, M * (M + 2) / (4 * N * (N - 1))};
    case 3:
      return {1, 3 * (M + 4) / (2 * N), 3 * (M + 2) * (M + 4) / (4 * N * (N - 1)),
              M * (M + 2) * (M + 4) / (8 * N * (N - 1) * (N - 2))};
  }
  return {};
}

void listed_f_polynomials(Check& check, Rng&) {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 3}}) {
    const SpaceParams s(m, n);
    for (int l = 1; l <= std::min(3, n); ++l) {
      const auto coeffs = f_coefficients(l, 0, 0, s);
      check.expect(coeffs == printed_f(l, m, n), [&] {
        return s.to_string() + " f_" + std::to_string(l) + ",0,0 coefficient list differs";
      });
      // f^ expanded from the reference coefficient list.
      Polynomial printed(s);
      const auto list = printed_f(l, m, n);
      for (int i = 0; i <= l; ++i)
        printed += list[static_cast<std::size_t>(i)] * (power(rb2(s), l - i) * power(rf2(s), i));
      const auto f = f_poly(l, 0, 0, s);
      check.expect(f == printed, [&] { return "f^ polynomial differs: " + show(f); });
      check.expect(is_harmonic(f), [&] { return "f^ not harmonic: " + show(f); });
    }
  }
}

void pizzetti_properties(Check& check, Rng& rng) {
  for (const auto& s : fischer_grid()) {
    const int M = s.super_dimension();
    const Polynomial one = Polynomial::constant(s, 1);
    check.expect(pizzetti(one) == PiScaledValue(2, M) / gamma_half(M),
                 [&] { return "int 1 at " + s.to_string(); });
    for (int t = 0; t < 10; ++t) {
      const auto f = random_polynomial(s, 5, 5, rng);
      check.expect(pizzetti(mul_r2(f)) == -pizzetti(f), [&] { return "T(x^2 f) on " + show(f); });
    }
    std::vector<std::vector<Polynomial>> harmonics;
    for (int k = 0; k <= 4; ++k) harmonics.push_back(sample_harmonics(s, k, rng));
    for (int k = 0; k <= 4; ++k)
      for (int l = k + 1; l <= 4; ++l)
        for (const auto& a : harmonics[static_cast<std::size_t>(k)])
          for (const auto& b : harmonics[static_cast<std::size_t>(l)])
            check.expect(orthogonality_check(a, b), [&] { return "T(H_k H_l) != 0 for " + show(a) + " , " + show(b); });
    for (int t = 0; t < 20; ++t) {
      const auto A = random_orthogonal(s.m(), rng);
      const auto D = random_symplectic(s.n(), rng);
      const auto f = random_polynomial(s, 4, 5, rng);
      check.expect(pizzetti(substitute_linear(f, A, D)) == pizzetti(f),
                   [&] { return "group invariance on " + show(f); });
    }
  }
}

void berezin_equivalence(Check& check, Rng& rng) {
  for (const auto& s : grid(0, 2, 0, 2, false))
    for (int t = 0; t < 12; ++t) {
      const auto R = random_polynomial(s, 6, 5, rng);
      check.expect(superspace_pizzetti(R) == berezin(R), [&] {
        return show(R) + ": " + superspace_pizzetti(R).to_string() + " vs " + berezin(R).to_string();
      });
    }
}

void intdim(Check& check, Rng&) {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{2, 2}}) {
    const SpaceParams s(m, n);
    const int d = invariant_functional_space_dim(s, default_degree_cap(s));
    check.expect(d == n + 1, [&] { return s.to_string() + ": dimension " + std::to_string(d); });
  }
}

void uniqueness(Check& check, Rng& rng) {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{1, 1}}) {
    const SpaceParams s(m, n);
    const Polynomial one = Polynomial::constant(s, 1);
    const Polynomial f = f_poly(1, 0, 0, s);
    const auto e1 = SphereFunctional::basis(s, 1);
    check.expect(e1(f) != 0, [&] { return s.to_string() + ": int_1 f^_{1,0,0} vanishes"; });
    check.expect(!orthogonality_check(one, f, e1), [&] { return s.to_string() + ": e_1 passes (H_0, H_2)"; });
    std::vector<std::vector<Polynomial>> harmonics;
    for (int k = 0; k <= 4; ++k) harmonics.push_back(sample_harmonics(s, k, rng));
    harmonics[2].push_back(f);
    for (int k = 0; k <= 4; ++k)
      for (int l = k + 1; l <= 4; ++l)
        for (const auto& a : harmonics[static_cast<std::size_t>(k)])
          for (const auto& b : harmonics[static_cast<std::size_t>(l)])
            check.expect(orthogonality_check(a, b), [&] { return "Pizzetti fails on " + show(a) + " , " + show(b); });
  }
}

void calibration(Check& check, Rng&) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const SpaceParams s(m, n);
    for (int j = 0; j <= n; ++j) {
      const auto f = f_poly(j, 0, 0, s);
      for (int i = 0; i <= n; ++i) {
        const Rational v = basis_integral(i, f);
        check.expect(v == (i == j ? 1 : 0), [&] {
          return s.to_string() + ": int_" + std::to_string(i) + " f^_" + std::to_string(j) + " = " + to_string(v);
        });
      }
    }
  }
}

struct Criterion {
  const char* name;
  Body body;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {"sl2 relations", sl2_relations},
      {"Laplace x^2 power constants", laplace_x2_constants},
      {"Fischer decomposition and projectors", fischer_reconstruction},
      {"dimension oracle", dimension_oracle},
      {"dimension identity", dimension_identity},
      {"irreducible decomposition", irreducible_decomposition},
      {"listed f polynomials", listed_f_polynomials},
      {"Pizzetti properties", pizzetti_properties},
      {"Berezin equivalence", berezin_equivalence},
      {"invariant functional space dimension", intdim},
      {"uniqueness of the orthogonal integral", uniqueness},
      {"int_i calibration", calibration},
  };
  return list;
}

// ---------------------------------------------------------------- invariants

void round_trips(Check& check, Rng& rng) {
  for (const auto& s : grid(0, 3, 0, 2, false))
    for (int t = 0; t < 10; ++t) {
      const auto p = random_polynomial(s, 5, 6, rng);
      check.expect(parse_polynomial(format_polynomial(p), s) == p, [&] { return "text: " + show(p); });
      check.expect(polynomial_from_json(nlohmann::json::parse(polynomial_to_json(p).dump())) == p,
                   [&] { return "json: " + show(p); });
    }
}

void algebra_laws(Check& check, Rng& rng) {
  for (const auto& s : grid(0, 3, 0, 2, false))
    for (int t = 0; t < 5; ++t) {
      const auto a = random_polynomial(s, 3, 4, rng);
      const auto b = random_polynomial(s, 3, 4, rng);
      const auto c = random_polynomial(s, 3, 4, rng);
      check.expect((a * b) * c == a * (b * c), [&] { return "associativity: " + show(a); });
      check.expect(a * (b + c) == a * b + a * c, [&] { return "distributivity: " + show(a); });
      for (int i = 1; i <= s.fermions(); ++i)
        for (int j = i; j <= s.fermions(); ++j) {
          const auto ij = partial_derivative(partial_derivative(a, Variable::e(j)), Variable::e(i));
          const auto ji = partial_derivative(partial_derivative(a, Variable::e(i)), Variable::e(j));
          check.expect((ij + ji).is_zero(), [&] { return "d_e anticommutation on " + show(a); });
        }
      const auto A = random_orthogonal(s.m(), rng);
      const auto D = random_symplectic(s.n(), rng);
      check.expect(substitute_linear(a * b, A, D) == substitute_linear(a, A, D) * substitute_linear(b, A, D),
                   [&] { return "substitution homomorphism on " + show(a); });
    }
  for (long j = -9; j <= 15; ++j) {
    if (j <= 0 && j % 2 == 0) continue;
    check.expect(gamma_half(j + 2) == gamma_half(j) * half(j), [&] { return "Gamma recursion at j=" + std::to_string(j); });
  }
}

void laplace_identities(Check& check, Rng& rng) {
  for (const auto& s : grid(0, 3, 0, 2, false)) {
    const int M = s.super_dimension();
    for (int k = 0; k <= 3; ++k)
      for (int t = 1; t <= 3; ++t) {
        const auto R = random_homogeneous(s, k, 4, rng);
        const auto lhs = laplace(r2_power(s, t) * R);
        const auto rhs = Rational(2 * t * (2 * k + M + 2 * t - 2)) * (r2_power(s, t - 1) * R) +
                         r2_power(s, t) * laplace(R);
        check.expect(lhs == rhs, [&] { return "Delta x^{2t} commutator on " + show(R); });
      }
    for (int t = 0; t <= 2; ++t) {
      const auto R = random_homogeneous(s, 2 * t, 4, rng);
      check.expect(laplace_power(mul_r2(R), t + 1) == Rational(4 * (t + 1)) * (half(M) + t) * laplace_power(R, t),
                   [&] { return "Delta^{t+1} x^2 on " + show(R); });
    }
    const auto p = random_polynomial(s, 5, 5, rng);
    check.expect(laplace_beltrami(mul_r2(p)) == mul_r2(laplace_beltrami(p)), [&] { return "LB commutation on " + show(p); });
    const auto A = random_orthogonal(s.m(), rng);
    const auto D = random_symplectic(s.n(), rng);
    check.expect(laplace(substitute_linear(p, A, D)) == substitute_linear(laplace(p), A, D),
                 [&] { return "Delta invariance on " + show(p); });
    check.expect(substitute_linear(r2(s), A, D) == r2(s), [&] { return "x^2 invariance at " + s.to_string(); });
  }
}

void fischer_properties(Check& check, Rng& rng) {
  for (const auto& s : fischer_grid()) {
    const int M = s.super_dimension();
    for (int d = 0; d <= 2; ++d)
      for (const auto& H : sample_harmonics(s, d, rng))
        for (int j = 0; j <= 2; ++j) {
          const auto x = r2_power(s, j) * H;
          for (int i = 0; i <= (d + 2 * j) / 2; ++i)
            check.expect(fischer_project(x, i) == (i == j ? H : Polynomial(s)),
                         [&] { return "P_i^k delta property on " + show(x); });
          check.expect(laplace_beltrami(x) == Rational(-d * (M - 2 + d)) * x,
                       [&] { return "LB eigenvalue on " + show(x); });
        }
  }
}

void fermionic_properties(Check& check, Rng& rng) {
  for (int n = 1; n <= 3; ++n) {
    const SpaceParams s(0, n);
    for (int K = 0; K <= 2 * n; ++K)
      for (int t = 0; t < 3; ++t) {
        const auto R = random_homogeneous(s, K, 6, rng);
        check.expect(fermionic_fischer_decompose(R).reconstruct() == R,
                     [&] { return "fermionic Fischer on " + show(R); });
      }
    for (int k = 0; k <= n; ++k) {
      const auto basis = fermionic_harmonic_basis(n, k);
      const auto monos = monomial_basis(s, k);
      RationalMatrix a(basis.size(), monos.size());
      for (std::size_t r = 0; r < basis.size(); ++r) {
        check.expect(laplace_f(basis[r]).is_zero(), [&] { return "not Delta_f-harmonic: " + show(basis[r]); });
        for (std::size_t c = 0; c < monos.size(); ++c) a(r, c) = basis[r].coefficient(monos[c]);
      }
      check.expect(static_cast<std::int64_t>(rank(a)) == dim_Hk_fermionic(n, k) &&
                       static_cast<std::int64_t>(basis.size()) == dim_Hk_fermionic(n, k),
                   [&] { return "fermionic basis size at n=" + std::to_string(n) + " k=" + std::to_string(k); });
    }
  }
}

void functional_properties(Check& check, Rng& rng) {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{1, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
    const SpaceParams s(m, n);
    const PiScaledValue a0 = pizzetti_normalization(s);
    for (int t = 0; t < 6; ++t) {
      const auto R = random_polynomial(s, 5, 5, rng);
      std::vector<Rational> w;
      for (int i = 0; i <= n; ++i) w.push_back(random_rational(rng));
      const SphereFunctional T(s, w);
      check.expect(T(mul_r2(R)) == -T(R), [&] { return "T(x^2 R) on " + show(R); });
      check.expect(pizzetti(R) == a0 * basis_integral(0, R), [&] { return "Pizzetti vs int_0 on " + show(R); });
      check.expect(integral_one(R) == basis_integral(1, R), [&] { return "int_1 closed form on " + show(R); });
      const auto g = substitute_linear(R, random_orthogonal(m, rng), random_symplectic(n, rng));
      check.expect(T(g) == T(R), [&] { return "T group invariance on " + show(R); });
    }
    for (int k = 1; k <= 4; ++k)
      for (const auto& piece : sample_pieces(s, k)) {
        if (piece.label.p == 0 && piece.label.q == 0) continue;
        for (int i = 0; i <= n; ++i)
          check.expect(basis_integral(i, piece.part) == 0, [&] { return "int_i on a big irrep: " + show(piece.part); });
      }
    // Only e_0 orthogonalizes harmonics of different degree.
    for (int i = 0; i <= n; ++i) {
      const auto T = SphereFunctional::basis(s, i);
      bool all = true;
      for (int k = 0; k <= 4 && all; ++k)
        for (int l = k + 1; l <= 4 && all; ++l)
          for (const auto& a : harmonic_basis(s, k))
            for (const auto& b : sample_harmonics(s, l, rng))
              if (!orthogonality_check(a, b, T)) all = false;
      check.expect(all == (i == 0), [&] { return s.to_string() + ": e_" + std::to_string(i) + " orthogonality"; });
    }
    // Pieces with different labels are Pizzetti-orthogonal.
    std::vector<IrrepComponent> pieces;
    for (int k = 0; k <= 3; ++k)
      for (auto& piece : sample_pieces(s, k)) pieces.push_back(std::move(piece));
    for (std::size_t a = 0; a < pieces.size(); ++a)
      for (std::size_t b = a + 1; b < pieces.size(); ++b)
        if (!(pieces[a].label == pieces[b].label))
          check.expect(irrep_orthogonality_check(pieces[a], pieces[b]),
                       [&] { return "pieces not orthogonal: " + show(pieces[a].part) + " , " + show(pieces[b].part); });
  }
}

}  // namespace


CheckResult run_criterion(int index, const VerifyOptions& options) {
  if (index < 1 || index > kAcceptanceCriteria) throw PreconditionError("criterion index outside 1..12");
  const auto& c = criteria()[static_cast<std::size_t>(index - 1)];
  char id[24];
  std::snprintf(id, sizeof id, "C%02d", index);
  return run_check(id, c.name, options.seed + static_cast<std::uint64_t>(index), c.body);
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CheckResult> out;
  for (int i = 1; i <= kAcceptanceCriteria; ++i) out.push_back(run_criterion(i, options));
  return out;
}

std::vector<CheckResult> run_invariants(const VerifyOptions& options) {
  const std::vector<std::pair<const char*, Body>> suites = {
      {"text and JSON round trips", round_trips},
      {"algebra laws", algebra_laws},
      {"Laplacian identities and invariance", laplace_identities},
      {"Fischer projector properties", fischer_properties},
      {"fermionic Fischer and basis", fermionic_properties},
      {"sphere functional properties", functional_properties},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < suites.size(); ++i) {
    char id[24];
    std::snprintf(id, sizeof id, "I%02zu", i + 1);
    out.push_back(run_check(id, suites[i].first, options.seed + 100 + i, suites[i].second));
  }
  return out;
}

std::string format_result(const CheckResult& result) {
  std::string line = (result.passed ? "PASS " : "FAIL ") + result.id + " " + result.name;
  if (result.passed) return line + " (" + std::to_string(result.cases) + " checks)";
  return line + ": " + result.counterexample;
}

}  // namespace superspace
