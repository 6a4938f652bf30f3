#include "doctest.h"
#include "oracles.hpp"
#include "treearr/arrangement.hpp"

using namespace treearr;

namespace {

Polynomial x(int v) { return Polynomial::variable(v); }

// Distinct rational test points.
std::vector<Rational> point(std::size_t n, int seed) {
  std::vector<Rational> p;
  for (std::size_t k = 0; k < n; ++k) p.emplace_back(static_cast<long>(k * k * 3 + 7 * k + seed), 1 + static_cast<long>(k));
  return p;
}

}  // namespace

TEST_CASE("hyperplanes") {
  CHECK(build_arrangement(parse_tree("a")).hyperplanes.empty());
  const auto chain = build_arrangement(parse_tree("a(b(c))"));
  CHECK(chain.hyperplanes ==
        std::vector<LinearDifference>{LinearDifference(0, 1), LinearDifference(0, 2),
                                      LinearDifference(1, 2)});
  const auto star = build_arrangement(parse_tree("a(b,c)"));
  CHECK(star.hyperplanes ==
        std::vector<LinearDifference>{LinearDifference(0, 1), LinearDifference(0, 2)});
  for (const auto& p : oracle::all_trees(4)) {
    std::size_t depths = 0;
    for (int v = 0; v < 4; ++v) depths += static_cast<std::size_t>(oracle::depth(p, v));
    const auto arr = build_arrangement(oracle::to_tree(p));
    CHECK(arr.hyperplanes.size() == depths);
    CHECK(defining_form(arr).to_polynomial().total_degree() == static_cast<int>(depths));
  }
}

TEST_CASE("defining form") {
  CHECK(defining_form(build_arrangement(parse_tree("a"))).to_polynomial() == Polynomial(1));
  const auto ab = build_arrangement(parse_tree("a(b)"));
  CHECK(defining_form(ab).to_polynomial() == x(0) - x(1));
  CHECK(defining_form(ab).to_string(ab.namer()) == "(x_a - x_b)");
  const auto chain = build_arrangement(parse_tree("a(b(c))"));
  CHECK(defining_form(chain).to_polynomial() == (x(0) - x(1)) * (x(0) - x(2)) * (x(1) - x(2)));
}

TEST_CASE("theta fields") {
  const auto chain = build_arrangement(parse_tree("a(b(c))"));
  const auto root = theta(chain, 0);
  for (const auto& c : root.coeffs) CHECK(c == Polynomial(1));
  const auto tb = theta(chain, 1);
  CHECK(tb.coeffs[0].is_zero());
  CHECK(tb.coeffs[1] == x(0) - x(1));
  CHECK(tb.coeffs[2] == x(0) - x(2));
  const auto ab = build_arrangement(parse_tree("a(b)"));
  CHECK(theta(ab, 1).coeffs[0].is_zero());
  CHECK(theta(ab, 1).coeffs[1] == x(0) - x(1));
  CHECK_THROWS_AS(theta(ab, 5), std::out_of_range);

  for (const auto& p : oracle::all_trees(4)) {
    const auto arr = build_arrangement(oracle::to_tree(p));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) CHECK(theta(arr, i).coeffs[j] == oracle::theta_entry(p, i, j));
    }
  }
}

TEST_CASE("logarithmic vector fields") {
  const auto ab = build_arrangement(parse_tree("a(b)"));
  CHECK(is_logarithmic(ab, theta(ab, 0)));
  CHECK(is_logarithmic(ab, theta(ab, 1)));
  // x_b at vertex a only: x_b is not divisible by x_a - x_b.
  CHECK_FALSE(is_logarithmic(ab, VectorField{{x(1), Polynomial()}}));
  CHECK(is_logarithmic(ab, VectorField{{Polynomial(), Polynomial()}}));
}

TEST_CASE("saito certificates") {
  const auto single = saito_check(build_arrangement(parse_tree("a")));
  CHECK(single.pass);
  const auto ab = saito_check(build_arrangement(parse_tree("a(b)")));
  CHECK(ab.pass);
  const int unit = ab.witness["unit"].get<int>();
  CHECK((unit == 1 || unit == -1));

  // Cofactor-expansion oracle: det[theta_i(x_j)] = ±Q_T.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::all_trees(n)) {
      std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = oracle::theta_entry(p, i, j);
      }
      const auto det = oracle::laplace_det(m);
      const auto arr = build_arrangement(oracle::to_tree(p));
      const auto q = defining_form(arr).to_polynomial();
      CHECK((det == q || det == -q));
      const auto cert = saito_check(arr, 3);
      CHECK(cert.pass);
      std::vector<std::size_t> depths;
      for (int v = 0; v < n; ++v) depths.push_back(static_cast<std::size_t>(oracle::depth(p, v)));
      std::sort(depths.begin(), depths.end());
      CHECK(exponents(oracle::to_tree(p)) == depths);
    }
  }
}

TEST_CASE("exponents") {
  CHECK(exponents(parse_tree("a(b(c(d)))")) == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(exponents(parse_tree("a(b,c)")) == std::vector<std::size_t>{0, 1, 1});
  CHECK(exponents(parse_tree("a")) == std::vector<std::size_t>{0});
}

TEST_CASE("omega forms") {
  const auto ab = build_arrangement(parse_tree("a(b)"));
  const auto w0 = omega(ab, 0);
  CHECK(w0.coeffs[0] == FactoredRational::one());
  CHECK(w0.coeffs[1].is_zero());
  const auto wb = omega(ab, 1);
  CHECK(wb.coeffs[0] == FactoredRational(1, {}, {{1, 0}}));
  CHECK(wb.coeffs[1] == FactoredRational(1, {}, {{0, 1}}));
  CHECK(omega_is_logarithmic(ab, 0));
  CHECK(omega_is_logarithmic(ab, 1));

  for (const auto& p : oracle::all_trees(4)) {
    const auto arr = build_arrangement(oracle::to_tree(p));
    const auto pt = point(4, 2);
    for (int i = 0; i < 4; ++i) {
      const auto w = omega(arr, i);
      std::size_t nonzero = 0;
      for (int j = 0; j < 4; ++j) {
        if (!w.coeffs[j].is_zero()) ++nonzero;
        CHECK(w.coeffs[j].evaluate(pt) == oracle::omega_entry(p, i, j, pt));
      }
      CHECK(nonzero == static_cast<std::size_t>(oracle::depth(p, i)) + 1);
    }
  }
}

TEST_CASE("non-logarithmic form") {
  // dx_a / (x_a - x_b)^2 has a double pole.
  const auto ab = build_arrangement(parse_tree("a(b)"));
  const OneForm w{{FactoredRational(1, {}, {{0, 1}, {0, 1}}), FactoredRational::zero()}};
  CHECK_FALSE(is_logarithmic_form(ab, w));
  // dx_a / (x_a - x_b) is not closed: Q_T dw keeps a pole.
  const OneForm simple{{FactoredRational(1, {}, {{0, 1}}), FactoredRational::zero()}};
  CHECK_FALSE(is_logarithmic_form(ab, simple));
  // d(x_a - x_b) / (x_a - x_b) is.
  const OneForm dlog{{FactoredRational(1, {}, {{0, 1}}), FactoredRational(-1, {}, {{0, 1}})}};
  CHECK(is_logarithmic_form(ab, dlog));
}

TEST_CASE("duality pairing") {
  const auto single = build_arrangement(parse_tree("a"));
  CHECK(pairing(omega(single, 0), theta(single, 0)).reduce().numerator == Polynomial(1));
  const auto ab = build_arrangement(parse_tree("a(b)"));
  CHECK(pairing(omega(ab, 1), theta(ab, 0)).reduce().numerator.is_zero());
  CHECK(duality_check(ab, IdentityStrategy::Symbolic).pass);
  CHECK(duality_check(ab, IdentityStrategy::Grid).pass);

  // Pointwise oracle at rational points.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::all_trees(n)) {
      const auto pt = point(static_cast<std::size_t>(n), 5);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
          Rational s = 0;
          for (int j = 0; j < n; ++j) {
            s += oracle::omega_entry(p, i, j, pt) * oracle::theta_value(p, k, j, pt);
          }
          CHECK(s == (i == k ? 1 : 0));
        }
      }
      CHECK(duality_check(build_arrangement(oracle::to_tree(p))).pass);
    }
  }
}

TEST_CASE("characteristic polynomial and chambers") {
  CHECK(char_poly_product(parse_tree("a")).to_string() == "y");
  CHECK(char_poly_product(parse_tree("a(b(c))")).to_string() == "y^3 - 3*y^2 + 2*y");
  CHECK(char_poly_product(parse_tree("a(b,c)")).to_string() == "y^3 - 2*y^2 + y");
  CHECK(chamber_count(parse_tree("a")) == 1);
  CHECK(chamber_count(parse_tree("a(b(c(d)))")) == 24);
  CHECK(chamber_count(parse_tree("a(b,c)")) == 4);

  // Chromatic polynomial of the comparability graph, by counting colourings.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : oracle::all_trees(n)) {
      const auto chi = char_poly_product(oracle::to_tree(p));
      for (int q = 0; q <= n + 1; ++q) CHECK(chi.evaluate(q) == oracle::colourings(p, q));
    }
  }
}

TEST_CASE("acyclic orientations") {
  CHECK(count_acyclic_orientations(Graph{3, {}}) == 1);
  CHECK(count_acyclic_orientations(Graph{2, {{0, 1}}}) == 2);
  CHECK(count_acyclic_orientations(Graph{3, {{0, 1}, {0, 2}, {1, 2}}}) == 6);
  for (const auto& p : oracle::all_trees(5)) {
    const auto t = oracle::to_tree(p);
    const auto n = count_acyclic_orientations(comparability_graph(t));
    CHECK(n == oracle::acyclic_orientations(oracle::comparability(p)));
    CHECK(chamber_count(t) == n);
  }
}

TEST_CASE("relation spaces") {
  const auto ab = relation_span_check(build_arrangement(parse_tree("a(b)")));
  CHECK(ab.pass);
  CHECK(ab.witness["kernel_dim"] == 0);
  CHECK(ab.witness["span_dim"] == 0);
  const auto chain = relation_span_check(build_arrangement(parse_tree("a(b(c))")));
  CHECK(chain.pass);
  CHECK(chain.witness["kernel_dim"] == 1);
  CHECK(chain.witness["span_dim"] == 1);

  for (int n = 1; n <= 5; ++n) {
    for (const auto& p : oracle::all_trees(n)) {
      std::vector<std::vector<Rational>> rows;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j || !oracle::leq(p, i, j)) continue;
          std::vector<Rational> r(n, 0);
          r[i] = 1;
          r[j] = -1;
          rows.push_back(r);
        }
      }
      const auto cert = relation_span_check(build_arrangement(oracle::to_tree(p)));
      CHECK(cert.pass);
      CHECK(cert.witness["kernel_dim"].get<std::size_t>() == rows.size() - oracle::rank(rows));
    }
  }
}
