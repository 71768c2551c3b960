#include <doctest.h>

#include "superspace/errors.hpp"
#include "superspace/gamma.hpp"
#include "superspace/io.hpp"
#include "superspace/linear_change.hpp"
#include "superspace/operators.hpp"
#include "superspace/random.hpp"
#include "superspace/sphere.hpp"

using namespace superspace;

namespace {

Polynomial P(const char* text, int m, int n) { return parse_polynomial(text, SpaceParams(m, n)); }

}  // namespace

TEST_CASE("pizzetti examples") {
  for (int m = 1; m <= 4; ++m)
    for (int n = 0; n <= 2; ++n) {
      SpaceParams s(m, n);
      if (s.super_dimension_is_pole()) {
        CHECK_THROWS_AS(pizzetti(Polynomial::constant(s, 1)), PoleError);
        continue;
      }
      const int M = s.super_dimension();
      CHECK(pizzetti(Polynomial::constant(s, 1)) == PiScaledValue(2, M) / gamma_half(M));
      CHECK(pizzetti(Polynomial::constant(s, 1)) * gamma_half(M) / PiScaledValue(2, M) == PiScaledValue(1));
    }
  // m = 3, n = 0: the area of S^2 is 4 pi.
  CHECK(pizzetti(Polynomial::constant(SpaceParams(3, 0), 1)) == PiScaledValue(4, 2));
  CHECK(pizzetti(P("x1*x2", 3, 1)).is_zero());
  CHECK_THROWS_AS(pizzetti(P("1", 2, 1)), PoleError);
}

TEST_CASE("Berezin examples") {
  CHECK(berezin(P("e1*e2", 0, 1)) == PiScaledValue(1, -2));
  CHECK(berezin(P("1", 1, 0)) == PiScaledValue(1, 1));
  CHECK(berezin(Polynomial(SpaceParams(2, 2))).is_zero());
  CHECK(superspace_pizzetti(P("1", 3, 1)) == PiScaledValue(1, 1));
  CHECK(superspace_pizzetti(P("e1*e2", 0, 1)) == PiScaledValue(1, -2));
}

TEST_CASE("Berezin equals the superspace Pizzetti integral") {
  Rng rng(53);
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      SpaceParams s(m, n);
      for (int t = 0; t < 12; ++t) {
        auto R = random_polynomial(s, 6, 5, rng);
        CHECK(superspace_pizzetti(R) == berezin(R));
      }
    }
}

TEST_CASE("basis integrals") {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{3, 1}, std::pair{1, 2}}) {
    SpaceParams s(m, n);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        CHECK(basis_integral(i, f_poly(j, 0, 0, s)) == (i == j ? 1 : 0));
  }
  SpaceParams s(3, 1);
  auto T = SphereFunctional(s, {2, make_rational(-1, 3)});
  CHECK(T(Polynomial::constant(s, 1)) == 2);
  CHECK(to_json(T)["a"][1] == "-1/3");
  CHECK(functional_from_json(s, to_json(T)).weights() == T.weights());
  CHECK_THROWS_AS(SphereFunctional(s, {1}), PreconditionError);
  CHECK_THROWS_AS(SphereFunctional(SpaceParams(0, 1), {1, 1}), PreconditionError);
}

TEST_CASE("functionals live on the supersphere") {
  Rng rng(59);
  for (auto [m, n] : {std::pair{1, 1}, std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 1}, std::pair{2, 0}}) {
    SpaceParams s(m, n);
    const PiScaledValue a0 = pizzetti_normalization(s);
    for (int t = 0; t < 8; ++t) {
      auto R = random_polynomial(s, 5, 5, rng);
      auto xR = mul_r2(R);
      CHECK(pizzetti(xR) == -pizzetti(R));
      for (int i = 0; i <= n; ++i) CHECK(basis_integral(i, xR) == -basis_integral(i, R));
      // Pizzetti is a_0 int_0 with a_0 = 2 pi^{M/2} / Gamma(M/2).
      CHECK(pizzetti(R) == a0 * basis_integral(0, R));
      if (n >= 1) {
        CHECK(integral_one(R) == basis_integral(1, R));
        CHECK(integral_one(xR) == -integral_one(R));
      }
      auto A = random_orthogonal(m, rng);
      auto D = random_symplectic(n, rng);
      auto g = substitute_linear(R, A, D);
      CHECK(pizzetti(g) == pizzetti(R));
      for (int i = 0; i <= n; ++i) CHECK(basis_integral(i, g) == basis_integral(i, R));
    }
  }
}

TEST_CASE("int_1 and the printed constant") {
  for (auto [m, n] : {std::pair{3, 1}, std::pair{1, 1}, std::pair{4, 1}, std::pair{3, 2}}) {
    SpaceParams s(m, n);
    CHECK(integral_one(Polynomial::constant(s, 1)) == 0);
    auto f_hat = f_poly(1, 0, 0, s);
    CHECK(integral_one(f_hat) == 1);
    // f_{1,0,0} = n! / Gamma(m/2 + 1) f^: with the printed c its integral is 1/4.
    const PiScaledValue scale = PiScaledValue(factorial(n)) / gamma_half(m + 2);
    CHECK(integral_one_printed_constant(f_hat) * scale == PiScaledValue(make_rational(1, 4)));
  }
  CHECK_THROWS_AS(integral_one(P("1", 3, 0)), PreconditionError);
  CHECK_THROWS_AS(integral_one(P("1", 4, 2)), PoleError);
}

TEST_CASE("orthogonality") {
  SpaceParams s(3, 1);
  auto one = Polynomial::constant(s, 1);
  auto f = f_poly(1, 0, 0, s);
  CHECK(orthogonality_check(one, f));
  CHECK_FALSE(orthogonality_check(one, f, SphereFunctional::basis(s, 1)));
  CHECK(orthogonality_check(P("x1", 3, 1), P("x1*x2", 3, 1)));
  CHECK_THROWS_AS(orthogonality_check(one, r2(s)), NotHarmonicError);

  SpaceParams t(2, 1);
  IrrepComponent a{{0, 2, 0}, P("x1*x2", 2, 1)};
  IrrepComponent b{{1, 0, 0}, f_poly(1, 0, 0, t)};
  // (2, 1) has M = 0, so compare on (3, 1) instead.
  IrrepComponent a3{{0, 2, 0}, P("x1*x2", 3, 1)};
  IrrepComponent b3{{1, 0, 0}, f};
  CHECK(irrep_orthogonality_check(a3, b3));
  CHECK_THROWS_AS(irrep_orthogonality_check(a, a), PreconditionError);
  CHECK_THROWS_AS(irrep_orthogonality_check(a, b), PoleError);
}

TEST_CASE("invariant functional space") {
  CHECK(sp_basis(1).size() == 3);
  CHECK(sp_basis(2).size() == 10);
  for (const auto& K : sp_basis(2)) {
    auto J = symplectic_form(2);
    CHECK(K.transpose() * J + J * K == RationalMatrix(4, 4));
  }
  CHECK(invariant_functional_space_dim(SpaceParams(2, 1), 6) == 2);
  CHECK(invariant_functional_space_dim(SpaceParams(3, 1), 6) == 2);
  CHECK(invariant_functional_space_dim(SpaceParams(2, 0), 4) == 1);
  CHECK(invariant_functional_space_dim(SpaceParams(4, 0), 4) == 1);
  CHECK_THROWS_AS(invariant_functional_space_dim(SpaceParams(2, 1), 3), PreconditionError);
  CHECK_THROWS_AS(invariant_functional_space_dim(SpaceParams(0, 1), 6), PreconditionError);
}
