#include <doctest.h>

#include "superspace/errors.hpp"
#include "superspace/gamma.hpp"
#include "superspace/io.hpp"
#include "superspace/linear_change.hpp"
#include "superspace/random.hpp"

using namespace superspace;

namespace {

Polynomial P(const char* text, int m, int n) { return parse_polynomial(text, SpaceParams(m, n)); }

Monomial ferm(int m, std::vector<int> idx) {
  return Monomial::from_indices(std::vector<int>(static_cast<std::size_t>(m), 0), idx);
}

// Keeps only the even (or odd) fermionic-degree terms.
Polynomial parity_part(const Polynomial& p, bool odd) {
  Polynomial out(p.params());
  for (const auto& [mono, c] : p.terms())
    if (mono.is_odd() == odd) out.add_term(mono, c);
  return out;
}

}  // namespace

TEST_CASE("space params") {
  SpaceParams s(3, 2);
  CHECK(s.super_dimension() == -1);
  CHECK(s.fischer_regular());
  CHECK_FALSE(SpaceParams(2, 1).fischer_regular());
  CHECK(SpaceParams(0, 2).fischer_regular());
  CHECK_THROWS_AS(SpaceParams(-1, 0), PreconditionError);
  CHECK_THROWS_AS(SpaceParams(1, 17), PreconditionError);
}

TEST_CASE("mono_mul signs") {
  auto e1 = ferm(0, {1}), e2 = ferm(0, {2});
  auto r = mono_mul(e1, e2);
  REQUIRE(r);
  CHECK(r->sign == 1);
  CHECK(r->monomial == ferm(0, {1, 2}));
  r = mono_mul(e2, e1);
  REQUIRE(r);
  CHECK(r->sign == -1);
  CHECK_FALSE(mono_mul(e1, e1));

  Monomial x1({1}, 0);
  auto r2 = mono_mul(x1, ferm(1, {1}));
  REQUIRE(r2);
  CHECK(r2->sign == 1);
  CHECK(r2->monomial == Monomial::from_indices({1}, {1}));

  // e1 e3 * e2 e4: one transposition (e3 past e2)
  auto r3 = mono_mul(ferm(0, {1, 3}), ferm(0, {2, 4}));
  REQUIRE(r3);
  CHECK(r3->sign == -1);
}

TEST_CASE("poly add and mul") {
  CHECK(P("x1 + e1", 1, 1) + P("-e1", 1, 1) == P("x1", 1, 1));
  CHECK(P("x1^2", 1, 0) + P("x1^2", 1, 0) == P("2*x1^2", 1, 0));
  CHECK((P("e1*e2", 0, 1) * P("e1*e2", 0, 1)).is_zero());
  CHECK(P("e1", 0, 1) * P("e2", 0, 1) - P("e2", 0, 1) * P("e1", 0, 1) == P("2*e1*e2", 0, 1));
  CHECK(P("-x1^2 - x2^2", 2, 1) * P("e1*e2", 2, 1) == P("-x1^2*e1*e2 - x2^2*e1*e2", 2, 1));
  CHECK_THROWS_AS(P("x1", 1, 0) + P("x1", 1, 1), ParamsMismatch);
}

TEST_CASE("partial derivatives") {
  CHECK(partial_derivative(P("x1^2", 1, 0), Variable::x(1)) == P("2*x1", 1, 0));
  CHECK(partial_derivative(P("e1*e2", 0, 1), Variable::e(2)) == P("-e1", 0, 1));
  CHECK(partial_derivative(P("e1*e2", 0, 1), Variable::e(1)) == P("e2", 0, 1));
  CHECK_THROWS_AS(partial_derivative(P("e1", 0, 1), Variable::e(3)), PreconditionError);
}

TEST_CASE("ring axioms on random triples") {
  Rng rng(7);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n) {
      SpaceParams s(m, n);
      for (int t = 0; t < 10; ++t) {
        auto a = random_polynomial(s, 3, 4, rng);
        auto b = random_polynomial(s, 3, 4, rng);
        auto c = random_polynomial(s, 3, 4, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        for (bool pa : {false, true})
          for (bool pb : {false, true}) {
            auto p = parity_part(a, pa), q = parity_part(b, pb);
            const Rational sign = pa && pb ? -1 : 1;
            CHECK(p * q == sign * (q * p));
          }
      }
    }
}

TEST_CASE("fermionic derivatives anticommute") {
  Rng rng(11);
  for (int n = 1; n <= 2; ++n)
    for (int m = 0; m <= 2; ++m) {
      SpaceParams s(m, n);
      for (int t = 0; t < 10; ++t) {
        auto p = random_polynomial(s, 4, 6, rng);
        for (int i = 1; i <= 2 * n; ++i) {
          CHECK(partial_derivative(partial_derivative(p, Variable::e(i)), Variable::e(i)).is_zero());
          for (int j = i + 1; j <= 2 * n; ++j) {
            auto ij = partial_derivative(partial_derivative(p, Variable::e(j)), Variable::e(i));
            auto ji = partial_derivative(partial_derivative(p, Variable::e(i)), Variable::e(j));
            CHECK((ij + ji).is_zero());
          }
        }
      }
    }
}

TEST_CASE("substitute_linear") {
  SpaceParams s(2, 1);
  auto p = P("3*x1^2*e1 - x2*e1*e2 + 1/2", 2, 1);
  CHECK(substitute_linear(p, RationalMatrix::identity(2), RationalMatrix::identity(2)) == p);

  RationalMatrix rot(2, 2);
  rot(0, 1) = 1;
  rot(1, 0) = -1;
  CHECK(substitute_linear(P("x1^2 + x2^2", 2, 1), rot, RationalMatrix::identity(2)) ==
        P("x1^2 + x2^2", 2, 1));

  RationalMatrix D(2, 2);
  D(0, 0) = 2;
  D(0, 1) = 3;
  D(1, 0) = 5;
  D(1, 1) = 7;
  CHECK(substitute_linear(P("e1*e2", 0, 1), RationalMatrix(), D) == P("-e1*e2", 0, 1));

  CHECK_THROWS_AS(substitute_linear(p, RationalMatrix::identity(3), RationalMatrix::identity(2)),
                  PreconditionError);

  Rng rng(3);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n) {
      SpaceParams sp(m, n);
      for (int t = 0; t < 5; ++t) {
        auto A = random_orthogonal(m, rng);
        auto Dm = random_symplectic(n, rng);
        CHECK(is_orthogonal(A));
        CHECK(is_symplectic(Dm));
        auto a = random_polynomial(sp, 3, 4, rng);
        auto b = random_polynomial(sp, 3, 4, rng);
        CHECK(substitute_linear(a * b, A, Dm) == substitute_linear(a, A, Dm) * substitute_linear(b, A, Dm));
      }
    }
}

TEST_CASE("gamma") {
  CHECK(gamma_ratio(1, 2) == make_rational(3, 4));
  CHECK(gamma_ratio(7, 0) == 1);
  CHECK(gamma_ratio(4, 3) == 24);
  CHECK(gamma_half(1) == PiScaledValue(1, 1));
  CHECK(gamma_half(5) == PiScaledValue(make_rational(3, 4), 1));
  CHECK(gamma_half(-1) == PiScaledValue(-2, 1));
  CHECK(gamma_half(2) == PiScaledValue(1));
  CHECK(gamma_half(8) == PiScaledValue(6));
  CHECK_THROWS_AS(gamma_half(0), PoleError);
  CHECK_THROWS_AS(gamma_half(-4), PoleError);
  // Gamma(z + 1) = z Gamma(z) across the anchors.
  for (long j = -9; j <= 15; ++j) {
    if (j <= 0 && j % 2 == 0) continue;
    CHECK(gamma_half(j + 2) == gamma_half(j) * half(j));
  }
}

TEST_CASE("pi scaled values") {
  PiScaledValue a(make_rational(3, 4), 1);
  CHECK(a.to_string() == "3/4*pi^(1/2)");
  CHECK(PiScaledValue(2, 2).to_string() == "2*pi");
  CHECK(PiScaledValue(0, 5).half_pi_exp() == 0);
  CHECK(a + PiScaledValue() == a);
  CHECK_THROWS_AS(a + PiScaledValue(1, 2), PreconditionError);
  CHECK(a * PiScaledValue(2, -1) == PiScaledValue(make_rational(3, 2), 0));
  CHECK(a / a == PiScaledValue(1));
}

TEST_CASE("text format") {
  SpaceParams s(2, 1);
  auto p = P("3/2*x1^2*e1*e2 - x2", 2, 1);
  CHECK(format_polynomial(p) == "3/2*x1^2*e1*e2 - x2");
  CHECK(format_polynomial(P("e2*e1", 0, 1)) == "-e1*e2");
  CHECK(P("e1*e1 + x1", 1, 1) == P("x1", 1, 1));
  CHECK(P("e1^2", 0, 1).is_zero());
  CHECK(format_polynomial(Polynomial(s)) == "0");
  CHECK(P("2*3*x1*x1", 1, 0) == P("6*x1^2", 1, 0));

  try {
    P("x1 + x3", 2, 0);
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position() == 5);
  }
  CHECK_THROWS_AS(P("x1 +", 2, 0), ParseError);
  CHECK_THROWS_AS(P("1/0", 2, 0), ParseError);
  CHECK_THROWS_AS(P("", 2, 0), ParseError);
  CHECK_THROWS_AS(P("x1 ? 2", 2, 0), ParseError);
}

TEST_CASE("round trips") {
  Rng rng(5);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n) {
      SpaceParams s(m, n);
      for (int t = 0; t < 20; ++t) {
        auto p = random_polynomial(s, 5, 6, rng);
        CHECK(parse_polynomial(format_polynomial(p), s) == p);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
        CHECK(polynomial_from_json(nlohmann::json::parse(polynomial_to_json(p).dump())) == p);
      }
    }
  PiScaledValue v(make_rational(-7, 3), -3);
  CHECK(pi_value_from_json(pi_value_to_json(v)) == v);
  CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"m":1,"n":1,"terms":[{"coeff":"1","bos":[0],"ferm":[2,1]}]})")),
                  ParseError);
}

TEST_CASE("monomial basis counts") {
  CHECK(monomial_basis(SpaceParams(2, 1), 2).size() == 8);
  CHECK(monomial_basis(SpaceParams(3, 0), 0).size() == 1);
  CHECK(monomial_basis(SpaceParams(0, 1), 3).empty());
  CHECK(monomial_basis(SpaceParams(0, 2), 2).size() == 6);
}

TEST_CASE("matrices") {
  RationalMatrix a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  CHECK(rank(a) == 1);
  auto ns = nullspace(a);
  REQUIRE(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  auto J = symplectic_form(2);
  auto Ji = inverse(J);
  REQUIRE(Ji);
  CHECK(J * *Ji == RationalMatrix::identity(4));
  CHECK_FALSE(inverse(a.transpose() * a));
}
