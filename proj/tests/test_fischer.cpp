#include <doctest.h>

#include "superspace/errors.hpp"
#include "superspace/fischer.hpp"
#include "superspace/io.hpp"
#include "superspace/irreps.hpp"
#include "superspace/operators.hpp"
#include "superspace/random.hpp"

using namespace superspace;

namespace {

Polynomial P(const char* text, int m, int n) { return parse_polynomial(text, SpaceParams(m, n)); }

std::vector<SpaceParams> regular_grid() {
  std::vector<SpaceParams> out;
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n)
      if (SpaceParams(m, n).fischer_regular()) out.emplace_back(m, n);
  return out;
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(dim_Pk(SpaceParams(2, 1), 2) == 8);
  CHECK(dim_Pk(SpaceParams(5, 0), 0) == 1);
  CHECK(dim_Pk(SpaceParams(0, 1), 3) == 0);
  CHECK(dim_Pk(SpaceParams(2, 1), -1) == 0);
  CHECK(dim_Hk(SpaceParams(2, 1), 2) == 7);
  CHECK(dim_Hk_fermionic(2, 2) == 5);
  CHECK(dim_Hk_fermionic(2, 3) == 0);
  CHECK(dim_Hk_bosonic(3, 2) == 5);
  CHECK(dim_Hk_bosonic(1, 2) == 0);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int k = 0; k <= 5; ++k)
        CHECK(dim_Pk(SpaceParams(m, n), k) ==
              static_cast<std::int64_t>(monomial_basis(SpaceParams(m, n), k).size()));
}

TEST_CASE("harmonic basis") {
  SpaceParams s(2, 1);
  CHECK(is_harmonic(P("x1*x2", 2, 1)));
  CHECK_FALSE(is_harmonic(r2(SpaceParams(3, 1))));
  auto b0 = harmonic_basis(s, 0);
  REQUIRE(b0.size() == 1);
  CHECK(b0[0] == Polynomial::constant(s, 1));
  CHECK(harmonic_basis(s, 1).size() == 4);
  auto b2 = harmonic_basis(s, 2);
  CHECK(b2.size() == 7);
  for (const auto& h : b2) CHECK(is_harmonic(h));
  for (const auto& params : regular_grid())
    for (int k = 0; k <= 4; ++k)
      CHECK(static_cast<std::int64_t>(harmonic_basis(params, k).size()) == dim_Hk(params, k));
}

TEST_CASE("projector examples") {
  SpaceParams s(3, 1);
  auto h = P("x1*x2 + 2*x3*e1", 3, 1);
  REQUIRE(is_harmonic(h));
  CHECK(fischer_project(h, 0) == h);
  auto xh = mul_r2(P("x1", 3, 1));
  CHECK(fischer_project(xh, 0).is_zero());
  CHECK(fischer_project(xh, 1) == P("x1", 3, 1));

  // M = -1: P_1^2(x^2) = 1
  SpaceParams t(1, 1);
  CHECK(fischer_project(r2(t), 1) == Polynomial::constant(t, 1));

  CHECK_THROWS_AS(fischer_project(P("x1 + x1^2", 3, 1), 0), DegreeError);
  CHECK_THROWS_AS(fischer_project(P("x1*x2", 2, 1), 0), PoleError);
  CHECK_THROWS_AS(fischer_decompose(P("x1*x2", 2, 1)), PoleError);
  CHECK_THROWS_AS(fischer_project(P("x1*x2", 3, 1), 2), PreconditionError);
}

TEST_CASE("decomposition examples") {
  SpaceParams s(3, 1);
  auto h = P("x1*x2", 3, 1);
  auto rep = fischer_decompose(h);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].i == 0);
  CHECK(rep.components[0].harmonic == h);

  auto x4 = power(r2(s), 2);
  auto rep4 = fischer_decompose(x4);
  REQUIRE(rep4.components.size() == 1);
  CHECK(rep4.components[0].i == 2);
  CHECK(rep4.components[0].harmonic == Polynomial::constant(s, 1));

  auto rep3 = fischer_decompose(mul_r2(P("x1", 3, 1)));
  REQUIRE(rep3.components.size() == 1);
  CHECK(rep3.components[0].i == 1);

  auto j = to_json(rep3);
  CHECK(j["k"] == 3);
  CHECK(j["components"][0]["i"] == 1);
  CHECK_FALSE(j.contains("ladder"));
}

TEST_CASE("reconstruction and the Laplace-Beltrami projector") {
  Rng rng(31);
  for (const auto& params : regular_grid())
    for (int k = 0; k <= 5; ++k)
      for (int t = 0; t < 3; ++t) {
        auto R = random_homogeneous(params, k, 5, rng);
        auto rep = fischer_decompose(R);
        CHECK(rep.reconstruct() == R);
        for (int i = 0; i <= k / 2; ++i) {
          auto Pi = fischer_project(R, i);
          CHECK(is_harmonic(Pi));
          CHECK(fischer_project_lb(R, i) == power(r2(params), i) * Pi);
        }
      }
}

TEST_CASE("projector delta property and eigenvalues") {
  for (const auto& params : regular_grid()) {
    const int M = params.super_dimension();
    for (int d = 0; d <= 2; ++d)
      for (const auto& H : harmonic_basis(params, d))
        for (int j = 0; j <= 2; ++j) {
          auto x = power(r2(params), j) * H;
          const int k = d + 2 * j;
          for (int i = 0; i <= k / 2; ++i) {
            auto expected = i == j ? H : Polynomial(params);
            CHECK(fischer_project(x, i) == expected);
          }
          CHECK(laplace_beltrami(x) == Rational(-d * (M - 2 + d)) * x);
        }
  }
}

TEST_CASE("fermionic route for m = 0") {
  SpaceParams s(0, 2);
  auto R = P("e1*e2", 0, 2);
  auto rep = fischer_decompose(R);
  CHECK(rep.reconstruct() == R);
  CHECK(rep.ladder == Ladder::Super);
  REQUIRE(rep.components.size() == 2);
  CHECK(rep.components[1].i == 1);
  CHECK(rep.components[1].harmonic == Polynomial::constant(s, make_rational(1, 2)));
  CHECK(fischer_project(R, 1) == Polynomial::constant(s, make_rational(1, 2)));
  for (int i = 0; i <= 1; ++i)
    CHECK(fischer_project_lb(R, i) == power(r2(s), i) * fischer_project(R, i));
}

TEST_CASE("buckets") {
  auto R = P("x1 + x1^2*x2 + 3", 2, 0);
  auto reports = fischer_decompose_buckets(R);
  REQUIRE(reports.size() == 3);
  Polynomial total(R.params());
  for (const auto& rep : reports) total += rep.reconstruct();
  CHECK(total == R);
}
