// Acceptance run: one line per criterion, exhaustive over the stated sizes,
// all comparisons exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "treearr/arrangement.hpp"
#include "treearr/coalg.hpp"
#include "treearr/lattice.hpp"
#include "treearr/treecore.hpp"

using namespace treearr;

namespace {

struct Outcome {
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;

  void fail(const std::string& what) {
    if (pass) detail = what;
    pass = false;
  }
};

void trees_up_to(std::size_t max_n, const std::function<void(const RootedTree&)>& visit) {
  for (std::size_t n = 1; n <= max_n; ++n) for_each_tree(make_labels(default_labels(n)), visit);
}

std::vector<std::size_t> depths(const RootedTree& t) {
  std::vector<std::size_t> d;
  for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) d.push_back(t.depth(v));
  std::sort(d.begin(), d.end());
  return d;
}

Outcome freeness() {
  Outcome o;
  std::vector<std::size_t> counts(6, 0);
  trees_up_to(5, [&](const RootedTree& t) {
    ++o.cases;
    ++counts[t.size()];
    const auto cert = saito_check(build_arrangement(t));
    if (!cert.pass) o.fail(t.to_string() + " " + cert.witness.dump());
    if (exponents(t) != depths(t)) o.fail("exponents of " + t.to_string());
    const auto unit = cert.witness["unit"].get<int>();
    if (unit != 1 && unit != -1) o.fail("unit of " + t.to_string());
  });
  if (counts != std::vector<std::size_t>{0, 1, 2, 9, 64, 625}) o.fail("tree counts");
  return o;
}

Outcome logarithmicity() {
  Outcome o;
  trees_up_to(6, [&](const RootedTree& t) {
    const auto arr = build_arrangement(t);
    for (Vertex i = 0; i < static_cast<Vertex>(t.size()); ++i) {
      ++o.cases;
      if (!is_logarithmic(arr, theta(arr, i))) o.fail("theta_" + t.label(i) + " on " + t.to_string());
      if (!omega_is_logarithmic(arr, i)) o.fail("omega_" + t.label(i) + " on " + t.to_string());
    }
  });
  return o;
}

Outcome duality() {
  Outcome o;
  trees_up_to(4, [&](const RootedTree& t) {
    ++o.cases;
    const auto cert = duality_check(build_arrangement(t), IdentityStrategy::Symbolic);
    if (!cert.pass) o.fail(t.to_string());
  });
  return o;
}

Outcome lattice_bijection() {
  Outcome o;
  trees_up_to(5, [&](const RootedTree& t) {
    ++o.cases;
    const auto lat = build_lattice(t);
    std::set<Partition> sigs;
    for (const auto& f : lat.elements()) sigs.insert(f.partition());
    if (sigs.size() != lat.size() || sigs != brute_force_flats(t)) o.fail(t.to_string());
  });
  return o;
}

Outcome characteristic() {
  Outcome o;
  trees_up_to(6, [&](const RootedTree& t) {
    ++o.cases;
    UnivariatePolynomial expected = UnivariatePolynomial::monomial(1, 0);
    Integer chambers = 1;
    for (auto d : depths(t)) {
      expected = expected * UnivariatePolynomial::linear_root(static_cast<long>(d));
      chambers *= static_cast<unsigned long>(d + 1);
    }
    const auto product = char_poly_product(t);
    if (!(product == expected)) o.fail("product formula on " + t.to_string());
    if (t.size() <= 5 && !(char_poly_mobius(build_lattice(t)) == expected)) {
      o.fail("mobius sum on " + t.to_string());
    }
    const Integer at_minus_one = abs(product.evaluate(-1));
    const Integer acyclic(static_cast<unsigned long>(count_acyclic_orientations(comparability_graph(t))));
    if (at_minus_one != chambers || acyclic != chambers || chamber_count(t) != chambers) {
      o.fail("chamber count on " + t.to_string());
    }
  });
  return o;
}

Outcome cardinality() {
  Outcome o;
  trees_up_to(6, [&](const RootedTree& t) {
    ++o.cases;
    const auto lat = build_lattice(t);
    const auto direct = cardinality_poly(lat);
    if (!(direct == cardinality_poly_recursive(t))) o.fail(t.to_string());
    if (direct.evaluate(1, 1) != static_cast<unsigned long>(lat.size())) o.fail("C(1,1) on " + t.to_string());
  });
  const auto chain = cardinality_poly(build_lattice(parse_tree("a(b(c))")));
  if (chain.to_string() != "y^2 + 2*y*z + z^2 + y" || chain.evaluate(1, 1) != 5) o.fail("3-chain");
  return o;
}

Outcome coalgebra() {
  Outcome o;
  std::vector<std::size_t> counts;
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t count = 0;
    for_each_forest(make_labels(default_labels(n)), [&](const Forest& f) {
      ++count;
      ++o.cases;
      const CoalgebraElement x(f);
      const auto d = coproduct(f);
      if (!(graded_flip(d) == d)) o.fail("cocommutativity on " + f.to_string());
      if (!(coproduct_at(d, 0) == coproduct_at(d, 1))) o.fail("coassociativity on " + f.to_string());
      if (!(counit_left(d) == x) || !(counit_right(d) == x)) o.fail("counit on " + f.to_string());
      for (const auto& [slots, c] : d.terms()) {
        for (Vertex v : slots[0].nodes()) {
          if (!slots[1].is_root(v)) o.fail("shared node in " + f.to_string());
        }
      }
      for (std::size_t k = 1; k <= 3; ++k) {
        const auto it = iterated_coproduct(x, k);
        for (const auto& [slots, c] : it.terms()) {
          for (const auto& s : slots) {
            for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
              for (Vertex j = 0; j < static_cast<Vertex>(n); ++j) {
                if (s.leq(i, j) && !f.leq(i, j)) o.fail("ascendance on " + f.to_string());
              }
            }
          }
        }
      }
    });
    counts.push_back(count);
  }
  if (counts != std::vector<std::size_t>{1, 3, 16, 125}) o.fail("forest counts");
  return o;
}

Outcome isomorphism() {
  Outcome o;
  std::mt19937 rng(20240611U);
  for (std::size_t n = 1; n <= 4; ++n) {
    ++o.cases;
    const auto cert = iso_check(default_labels(n));
    if (!cert.pass) o.fail("iso_check n=" + std::to_string(n) + " " + cert.witness.dump());
    if (n < 2) continue;
    const auto labels = make_labels(default_labels(n));
    std::uniform_int_distribution<int> vert(0, static_cast<int>(n) - 1);
    std::uniform_int_distribution<int> len(0, 5);
    for (int round = 0; round < 300; ++round) {
      ++o.cases;
      AlgebraWord w{labels, {}};
      for (int k = len(rng); k > 0; --k) {
        Vertex i = vert(rng);
        Vertex j = vert(rng);
        while (j == i) j = vert(rng);
        w.factors.push_back({i, j});
      }
      const auto nf = algebra_reduce(w);
      const auto image = rho(w);
      if (nf.is_zero() != image.is_zero()) o.fail("vanishing of " + to_string(w));
      if (!nf.is_zero() && !(image == nf.sign * rho(monomial_word(*nf.forest)))) {
        o.fail("normal form of " + to_string(w));
      }
    }
  }
  return o;
}

Outcome chordality() {
  Outcome o;
  trees_up_to(6, [&](const RootedTree& t) {
    const auto g = comparability_graph(t);
    for_each_linear_extension(t, [&](const std::vector<Vertex>& order) {
      ++o.cases;
      if (!check_chordal_peo(g, order)) o.fail(t.to_string());
    });
  });
  return o;
}

Outcome relations() {
  Outcome o;
  trees_up_to(6, [&](const RootedTree& t) {
    ++o.cases;
    const auto cert = relation_span_check(build_arrangement(t));
    if (!cert.pass) o.fail(t.to_string() + " " + cert.witness.dump());
  });
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"freeness certificate, all trees n<=5", freeness},
      {"theta and omega logarithmic, all trees n<=6", logarithmicity},
      {"duality pairing is the identity, all trees n<=4", duality},
      {"lattice elements equal the flats, all trees n<=5", lattice_bijection},
      {"characteristic polynomial and chamber count", characteristic},
      {"cardinality polynomial recursion, all trees n<=6", cardinality},
      {"coalgebra axioms, all forests n<=4", coalgebra},
      {"isomorphism with the dual algebra, n<=4", isomorphism},
      {"linear extensions are perfect elimination orderings, n<=6", chordality},
      {"elementary relations span, all trees n<=6", relations},
  };
  bool all = true;
  int index = 1;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %s (%zu cases, %.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.cases, secs, o.pass ? "" : ": ", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
    ++index;
  }
  return all ? 0 : 1;
}
