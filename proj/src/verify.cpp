#include "treearr/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "treearr/arrangement.hpp"
#include "treearr/coalg.hpp"
#include "treearr/lattice.hpp"
#include "treearr/treecore.hpp"

namespace treearr {

bool SweepReport::pass() const {
  return std::all_of(properties.begin(), properties.end(), [](const auto& p) { return p.pass; });
}

std::string SweepReport::to_text() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < tree_counts.size(); ++k) {
    out << "n=" << k + 1 << ": " << tree_counts[k] << " trees, " << forest_counts[k]
        << " forests\n";
  }
  for (const auto& p : properties) {
    out << (p.pass ? "PASS " : "FAIL ") << p.name << " (n<=" << p.max_n << ", " << p.cases
        << " cases)";
    if (!p.pass) out << ": " << p.counterexample;
    out << '\n';
  }
  return out.str();
}

namespace {

using TreeCheck = std::function<std::string(const RootedTree&)>;
using ForestCheck = std::function<std::string(const Forest&)>;

// An empty string from a check means the case passed.
PropertyResult over_trees(const std::string& name, std::size_t bound, std::size_t max_n,
                          const TreeCheck& check) {
  PropertyResult r{name, std::min(bound, max_n), 0, true, {}};
  for (std::size_t n = 1; n <= r.max_n && r.pass; ++n) {
    for_each_tree(make_labels(default_labels(n)), [&](const RootedTree& t) {
      if (!r.pass) return;
      ++r.cases;
      if (auto msg = check(t); !msg.empty()) {
        r.pass = false;
        r.counterexample = t.to_string() + ": " + msg;
      }
    });
  }
  return r;
}

PropertyResult over_forests(const std::string& name, std::size_t bound, std::size_t max_n,
                            const ForestCheck& check) {
  PropertyResult r{name, std::min(bound, max_n), 0, true, {}};
  for (std::size_t n = 1; n <= r.max_n && r.pass; ++n) {
    for_each_forest(make_labels(default_labels(n)), [&](const Forest& f) {
      if (!r.pass) return;
      ++r.cases;
      if (auto msg = check(f); !msg.empty()) {
        r.pass = false;
        r.counterexample = f.to_string() + ": " + msg;
      }
    });
  }
  return r;
}

std::string forest_pair_orders(std::size_t n) {
  const auto forests = enumerate_forests(default_labels(n));
  for (const auto& a : forests) {
    if (!is_subforest(a, a) || !precedes(a, a)) return "not reflexive at " + a.to_string();
    for (const auto& b : forests) {
      const bool ab = is_subforest(a, b);
      if (ab && !(a == b) && is_subforest(b, a)) {
        return "⊆ not antisymmetric at " + a.to_string() + ", " + b.to_string();
      }
      if (precedes(a, b) && !(a == b) && precedes(b, a)) {
        return "⪯ not antisymmetric at " + a.to_string() + ", " + b.to_string();
      }
      if (ab) {
        const auto na = a.nodes();
        const auto nb = b.nodes();
        if (!std::includes(nb.begin(), nb.end(), na.begin(), na.end())) {
          return "nodes not included for " + a.to_string() + " ⊆ " + b.to_string();
        }
        if (na == nb && !(a == b)) return "equal nodes but distinct: " + a.to_string();
      }
      for (const auto& c : forests) {
        if (ab && is_subforest(b, c) && !is_subforest(a, c)) return "⊆ not transitive";
        if (precedes(a, b) && precedes(b, c) && !precedes(a, c)) return "⪯ not transitive";
      }
    }
  }
  return {};
}

std::string coalgebra_axioms(const Forest& f) {
  const CoalgebraElement x(f);
  const TensorElement delta = coproduct(f);
  if (!(graded_flip(delta) == delta)) return "not graded cocommutative";
  if (!(coproduct_at(delta, 0) == coproduct_at(delta, 1))) return "not coassociative";
  if (!(counit_left(delta) == x) || !(counit_right(delta) == x)) return "counit law fails";
  for (const auto& [slots, c] : delta.terms()) {
    const auto n1 = slots[0].nodes();
    const auto n2 = slots[1].nodes();
    std::vector<Vertex> common;
    std::set_intersection(n1.begin(), n1.end(), n2.begin(), n2.end(), std::back_inserter(common));
    if (!common.empty()) return "tensor factors share a node";
  }
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto iter = iterated_coproduct(x, k);
    if (!(iter == split_coproduct(f, k))) return "iterated coproduct differs from split formula";
    for (const auto& [slots, c] : iter.terms()) {
      for (const auto& s : slots) {
        for (Vertex v : s.nodes()) {
          for (auto p = s.parent(v); p; p = s.parent(*p)) {
            if (!f.leq(*p, v)) return "ascendance relation not in the forest";
          }
        }
      }
    }
  }
  return {};
}

std::string dual_associativity(std::size_t n) {
  const auto forests = enumerate_forests(default_labels(n));
  for (const auto& a : forests) {
    for (const auto& b : forests) {
      const DualElement da(a);
      const DualElement db(b);
      const auto ab = dual_multiply(da, db);
      const bool odd = (degree(a) * degree(b)) % 2 == 1;
      if (!(ab == (odd ? -1 : 1) * dual_multiply(db, da))) {
        return "not graded commutative at " + a.to_string() + ", " + b.to_string();
      }
      for (const auto& c : forests) {
        const DualElement dc(c);
        if (!(dual_multiply(ab, dc) == dual_multiply(da, dual_multiply(db, dc)))) {
          return "not associative at " + a.to_string() + ", " + b.to_string() + ", " +
                 c.to_string();
        }
      }
    }
  }
  return {};
}

std::string reduction_soundness(std::size_t n, std::size_t words) {
  const auto labels = make_labels(default_labels(n));
  if (n < 2) return {};
  std::mt19937 rng(20240611U + static_cast<unsigned>(n));
  std::uniform_int_distribution<int> vertex(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> length(0, 5);
  for (std::size_t k = 0; k < words; ++k) {
    AlgebraWord w{labels, {}};
    const int len = length(rng);
    for (int e = 0; e < len; ++e) {
      Vertex i = vertex(rng);
      Vertex j = vertex(rng);
      while (j == i) j = vertex(rng);
      w.factors.push_back({i, j});
    }
    const auto image = rho(w);
    const auto nf = algebra_reduce(w);
    if (nf.is_zero() != image.is_zero()) return "vanishing disagrees for " + to_string(w);
    if (!nf.is_zero() && !(image == nf.sign * rho(monomial_word(*nf.forest)))) {
      return "normal form disagrees for " + to_string(w);
    }
  }
  return {};
}

}  // namespace

SweepReport sweep(std::size_t max_n, long grid_offset) {
  if (max_n == 0 || max_n > 6) throw std::invalid_argument("max-n must be between 1 and 6");
  SweepReport report;
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto labels = make_labels(default_labels(n));
    std::size_t trees = 0;
    std::size_t forests = 0;
    for_each_tree(labels, [&](const RootedTree&) { ++trees; });
    for_each_forest(labels, [&](const Forest&) { ++forests; });
    report.tree_counts.push_back(trees);
    report.forest_counts.push_back(forests);
  }
  auto& props = report.properties;

  {
    PropertyResult r{"enumeration counts n^(n-1) and (n+1)^(n-1)", max_n, max_n, true, {}};
    for (std::size_t n = 1; n <= max_n; ++n) {
      std::size_t tn = 1;
      std::size_t fn = 1;
      for (std::size_t k = 1; k < n; ++k) {
        tn *= n;
        fn *= n + 1;
      }
      if (report.tree_counts[n - 1] != tn || report.forest_counts[n - 1] != fn) {
        r.pass = false;
        r.counterexample = "n=" + std::to_string(n);
      }
    }
    props.push_back(r);
  }

  props.push_back(over_forests("leq is a partial order", 5, max_n, [](const Forest& f) {
    const auto n = static_cast<Vertex>(f.size());
    for (Vertex i = 0; i < n; ++i) {
      if (!f.leq(i, i)) return std::string("not reflexive");
      for (Vertex j = 0; j < n; ++j) {
        if (i != j && f.leq(i, j) && f.leq(j, i)) return std::string("not antisymmetric");
        for (Vertex k = 0; k < n; ++k) {
          if (f.leq(i, j) && f.leq(j, k) && !f.leq(i, k)) return std::string("not transitive");
        }
      }
    }
    return std::string();
  }));

  {
    PropertyResult r{"⊆ and ⪯ are partial orders; node inclusion for ⊆", std::min<std::size_t>(4, max_n),
                     0, true, {}};
    for (std::size_t n = 1; n <= r.max_n && r.pass; ++n) {
      ++r.cases;
      if (auto msg = forest_pair_orders(n); !msg.empty()) {
        r.pass = false;
        r.counterexample = msg;
      }
    }
    props.push_back(r);
  }

  props.push_back(over_trees("linear extensions are perfect elimination orderings", 6, max_n,
                             [](const RootedTree& t) {
                               std::string msg;
                               const auto g = comparability_graph(t);
                               for_each_linear_extension(t, [&](const std::vector<Vertex>& order) {
                                 if (msg.empty() && !check_chordal_peo(g, order)) {
                                   msg = "order fails";
                                 }
                               });
                               return msg;
                             }));

  props.push_back(over_trees("theta_i and omega_i are logarithmic", 6, max_n,
                             [](const RootedTree& t) {
                               const auto arr = build_arrangement(t);
                               for (Vertex i = 0; i < static_cast<Vertex>(t.size()); ++i) {
                                 if (!is_logarithmic(arr, theta(arr, i))) {
                                   return "theta_" + t.label(i);
                                 }
                                 if (!omega_is_logarithmic(arr, i)) return "omega_" + t.label(i);
                               }
                               return std::string();
                             }));

  props.push_back(over_trees("saito determinant and exponents", 5, max_n,
                             [grid_offset](const RootedTree& t) {
                               const auto cert = saito_check(build_arrangement(t), grid_offset);
                               return cert.pass ? std::string() : cert.witness.dump();
                             }));

  props.push_back(over_trees("duality <omega_i, theta_i'> = delta", 4, max_n,
                             [](const RootedTree& t) {
                               const auto cert = duality_check(build_arrangement(t));
                               return cert.pass ? std::string() : cert.witness.dump();
                             }));

  props.push_back(over_trees("chambers = |chi(-1)| = acyclic orientations", 6, max_n,
                             [](const RootedTree& t) {
                               const Integer chambers = chamber_count(t);
                               const Integer chi = abs(char_poly_product(t).evaluate(-1));
                               const auto acyclic = count_acyclic_orientations(comparability_graph(t));
                               if (chambers != chi || chambers != Integer(static_cast<unsigned long>(acyclic))) {
                                 return "chambers " + chambers.get_str() + ", chi " + chi.get_str() +
                                        ", acyclic " + std::to_string(acyclic);
                               }
                               return std::string();
                             }));

  props.push_back(over_trees("lattice: bijection with flats, gradedness, chi agreement", 5, max_n,
                             [](const RootedTree& t) {
                               const auto lat = build_lattice(t);
                               std::set<Partition> sigs;
                               for (const auto& f : lat.elements()) sigs.insert(f.partition());
                               if (sigs != brute_force_flats(t)) return std::string("flats differ");
                               for (const auto& [a, b] : lat.hasse()) {
                                 if (lat.rank()[b] != lat.rank()[a] + 1) return std::string("not graded");
                               }
                               if (!(char_poly_mobius(lat) == char_poly_product(t))) {
                                 return std::string("chi differs");
                               }
                               return std::string();
                             }));

  props.push_back(over_trees("suprema of node-disjoint forests add nodes", 4, max_n,
                             [](const RootedTree& t) {
                               const auto lat = build_lattice(t);
                               for (const auto& a : lat.elements()) {
                                 for (const auto& b : lat.elements()) {
                                   const auto na = a.nodes();
                                   const auto nb = b.nodes();
                                   std::vector<Vertex> both;
                                   std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                                                         std::back_inserter(both));
                                   if (!both.empty()) continue;
                                   std::vector<Vertex> uni;
                                   std::set_union(na.begin(), na.end(), nb.begin(), nb.end(),
                                                  std::back_inserter(uni));
                                   if (supremum(lat, a, b).nodes() != uni) {
                                     return a.to_string() + " v " + b.to_string();
                                   }
                                 }
                               }
                               return std::string();
                             }));

  props.push_back(over_trees("cardinality polynomial recursion", 6, max_n, [](const RootedTree& t) {
    const auto lat = build_lattice(t);
    const auto direct = cardinality_poly(lat);
    if (!(direct == cardinality_poly_recursive(t))) return "direct " + direct.to_string();
    if (direct.evaluate(1, 1) != static_cast<unsigned long>(lat.size())) return std::string("C(1,1)");
    return std::string();
  }));

  props.push_back(over_trees("elementary relations span all relations", 6, max_n,
                             [](const RootedTree& t) {
                               const auto cert = relation_span_check(build_arrangement(t));
                               return cert.pass ? std::string() : cert.witness.dump();
                             }));

  props.push_back(over_forests("coalgebra axioms, node disjointness, ascendance", 4, max_n,
                               coalgebra_axioms));

  {
    PropertyResult r{"dual algebra associative and graded commutative", std::min<std::size_t>(3, max_n),
                     0, true, {}};
    for (std::size_t n = 1; n <= r.max_n && r.pass; ++n) {
      ++r.cases;
      if (auto msg = dual_associativity(n); !msg.empty()) {
        r.pass = false;
        r.counterexample = msg;
      }
    }
    props.push_back(r);
  }

  {
    PropertyResult r{"rho(m_F) support, unit coefficients, unimodular", std::min<std::size_t>(4, max_n),
                     0, true, {}};
    for (std::size_t n = 1; n <= r.max_n && r.pass; ++n) {
      ++r.cases;
      const auto cert = iso_check(default_labels(n));
      if (!cert.pass) {
        r.pass = false;
        r.counterexample = cert.witness.dump();
      }
      if (auto msg = reduction_soundness(n, 200); r.pass && !msg.empty()) {
        r.pass = false;
        r.counterexample = msg;
      }
    }
    props.push_back(r);
  }
  return report;
}

}  // namespace treearr
