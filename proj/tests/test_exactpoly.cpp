#include <random>

#include "doctest.h"
#include "treearr/exactpoly.hpp"

using namespace treearr;

namespace {

Polynomial x(int v) { return Polynomial::variable(v); }

Polynomial random_poly(std::mt19937& rng, int vars, int terms) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> var(0, vars - 1);
  std::uniform_int_distribution<unsigned> exp(0, 2);
  Polynomial p;
  for (int k = 0; k < terms; ++k) {
    p += Polynomial::term(coeff(rng), Monomial({{var(rng), exp(rng)}, {var(rng), exp(rng)}}));
  }
  return p;
}

}  // namespace

TEST_CASE("addition") {
  const Polynomial p = x(0) - x(1);
  CHECK(Polynomial(0) + p == p);
  CHECK((x(0) - x(1)) + (x(1) - x(0)) == Polynomial());
  CHECK(((x(0) - x(1)) + (x(0) - x(2))).to_string() == "2*x_0 - x_1 - x_2");
}

TEST_CASE("multiplication") {
  const Polynomial p = x(0) - x(1);
  CHECK(Polynomial(1) * p == p);
  CHECK((x(0) - x(1)) * (x(0) + x(1)) == x(0) * x(0) - x(1) * x(1));
  CHECK(((x(0) - x(1)) * (x(1) - x(2))).to_string() == "x_0*x_1 - x_0*x_2 - x_1^2 + x_1*x_2");
}

TEST_CASE("exact division") {
  auto q = divide_exact(x(0) * x(0) - x(1) * x(1), x(0) - x(1));
  REQUIRE(q);
  CHECK(*q == x(0) + x(1));
  CHECK_FALSE(divide_exact(x(0) - x(2), x(0) - x(1)));
  const Polynomial p = x(0) * x(1) - 3;
  REQUIRE(divide_exact(p, p));
  CHECK(*divide_exact(p, p) == Polynomial(1));
  CHECK_THROWS_AS(divide_exact(p, Polynomial()), std::invalid_argument);
}

TEST_CASE("evaluation") {
  CHECK((x(0) - x(1)).evaluate(std::map<int, Rational>{{0, 3}, {1, 1}}) == 2);
  CHECK(Polynomial().evaluate(std::map<int, Rational>{}) == 0);
  CHECK((x(0) * x(1)).evaluate(std::map<int, Rational>{{0, 2}, {1, -3}}) == -6);
  CHECK_THROWS_AS((x(0) * x(1)).evaluate(std::map<int, Rational>{{0, 2}}), std::invalid_argument);
}

TEST_CASE("factored rationals expand") {
  CHECK(FactoredRational(1, {{0, 1}}, {}).to_polynomial() == x(0) - x(1));
  CHECK(FactoredRational::zero().to_polynomial() == Polynomial());
  CHECK(FactoredRational(-1, {{0, 1}, {0, 2}}, {}).to_polynomial() ==
        -((x(0) - x(1)) * (x(0) - x(2))));
  CHECK_THROWS_AS(FactoredRational(1, {}, {{0, 1}}).to_polynomial(), std::invalid_argument);
  CHECK_THROWS_AS(LinearDifference(2, 2), std::invalid_argument);
}

TEST_CASE("factored rationals canonicalize") {
  // (x_1 - x_0) flips to -(x_0 - x_1); shared factors cancel.
  const FactoredRational f(1, {{1, 0}, {2, 3}}, {{2, 3}, {0, 2}});
  CHECK(f.sign() == -1);
  REQUIRE(f.numerator().size() == 1);
  CHECK(f.numerator()[0] == LinearDifference(0, 1));
  REQUIRE(f.denominator().size() == 1);
  CHECK(f.denominator()[0] == LinearDifference(0, 2));
  CHECK(canonical(canonical(f)) == canonical(f));
  const FactoredRational g(1, {{0, 2}, {1, 0}}, {});
  const FactoredRational h(1, {{1, 0}, {0, 2}}, {});
  CHECK(g == h);
  CHECK(g.to_polynomial() == h.to_polynomial());
  CHECK((f * f.reciprocal()) == FactoredRational::one());
}

TEST_CASE("logarithmic derivative agrees with evaluation") {
  const FactoredRational f(1, {{0, 1}}, {{0, 2}, {1, 2}});
  const std::vector<Rational> pt{5, 2, 1};
  Rational sum = 0;
  for (const auto& t : f.derivative(0)) sum += t.evaluate(pt);
  // The derivative is 1/(x_0 - x_2)^2.
  CHECK(sum == Rational(1, 16));
}

TEST_CASE("reduced fraction sums") {
  // 1/(x0-x1) + 1/(x1-x0) = 0.
  LinearFractionSum s;
  s.add(FactoredRational(1, {}, {{0, 1}}));
  s.add(FactoredRational(1, {}, {{1, 0}}));
  auto r = s.reduce();
  CHECK(r.numerator.is_zero());
  // 1/((x0-x1)(x0-x2)) + 1/((x1-x0)(x1-x2)) + 1/((x2-x0)(x2-x1)) = 0.
  LinearFractionSum t;
  t.add(FactoredRational(1, {}, {{0, 1}, {0, 2}}));
  t.add(FactoredRational(1, {}, {{1, 0}, {1, 2}}));
  t.add(FactoredRational(1, {}, {{2, 0}, {2, 1}}));
  CHECK(t.reduce().numerator.is_zero());
  CHECK(grid_identity(t, 0, 3));
  CHECK_FALSE(grid_identity(t, 1, 3));
}

TEST_CASE("identity grid has pairwise distinct coordinates") {
  IdentityGrid grid(3, {{0, 2}, {1, 1}, {2, 3}}, 1);
  CHECK(grid.point_count() == 3 * 2 * 4);
  std::size_t seen = 0;
  grid.for_each([&](std::span<const Rational> p) {
    ++seen;
    CHECK(p[0] != p[1]);
    CHECK(p[0] != p[2]);
    CHECK(p[1] != p[2]);
    return true;
  });
  CHECK(seen == grid.point_count());
}

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_determinant({{2, 0}, {0, 3}}) == 6);
  CHECK(bareiss_determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(bareiss_determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(bareiss_determinant({{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("rank and kernel") {
  std::vector<std::vector<Rational>> m{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  CHECK(rational_rank(m) == 2);
  const auto k = rational_kernel(m, 3);
  REQUIRE(k.size() == 1);
  for (const auto& row : m) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * k[0][j];
    CHECK(dot == 0);
  }
}

TEST_CASE("univariate and bivariate rendering") {
  auto chi = UnivariatePolynomial::linear_root(0) * UnivariatePolynomial::linear_root(1) *
             UnivariatePolynomial::linear_root(2);
  CHECK(chi.to_string() == "y^3 - 3*y^2 + 2*y");
  CHECK(chi.evaluate(-1) == -6);
  const auto y = BivariatePolynomial::y();
  const auto z = BivariatePolynomial::z();
  const auto c = z * (y + z) + y * (y + z).shift_z();
  CHECK(c.to_string() == "y^2 + 2*y*z + z^2 + y");
  CHECK(c.evaluate(1, 1) == 5);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int round = 0; round < 60; ++round) {
    const auto a = random_poly(rng, 3, 4);
    const auto b = random_poly(rng, 3, 4);
    const auto c = random_poly(rng, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial());
    if (!a.is_zero()) {
      const auto q = divide_exact(a * b, a);
      REQUIRE(q);
      CHECK(*q == b);
    }
  }
}
