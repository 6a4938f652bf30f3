#include "treearr/arrangement.hpp"

#include <algorithm>
#include <numeric>

namespace treearr {

VariableNamer Arrangement::namer() const {
  auto labels = tree.labels();
  return [labels](int v) { return labels->label(v); };
}

Arrangement build_arrangement(const RootedTree& t) {
  Arrangement arr{t, {}};
  const auto n = static_cast<Vertex>(t.size());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (t.less(i, j)) arr.hyperplanes.emplace_back(i, j);
    }
  }
  return arr;
}

FactoredRational defining_form(const Arrangement& arr) {
  return FactoredRational(1, arr.hyperplanes, {});
}

namespace {

void check_vertex(const RootedTree& t, Vertex v) {
  if (v < 0 || static_cast<std::size_t>(v) >= t.size()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
}

std::vector<Vertex> strictly_below(const RootedTree& t, Vertex i) {
  std::vector<Vertex> out;
  for (auto p = t.parent(i); p; p = t.parent(*p)) out.push_back(*p);
  std::sort(out.begin(), out.end());
  return out;
}

// Factors x_k - x_j for k < i, the entry theta_i(x_j) when i <= j.
std::vector<LinearDifference> theta_factors(const RootedTree& t, Vertex i, Vertex j) {
  std::vector<LinearDifference> factors;
  for (Vertex k : strictly_below(t, i)) factors.emplace_back(k, j);
  return factors;
}

std::vector<LinearDifference> oriented_sorted(std::vector<LinearDifference> factors) {
  for (auto& f : factors) f = f.oriented().first;
  std::sort(factors.begin(), factors.end());
  return factors;
}

// Greedy smallest-available-vertex linear extension.
std::vector<Vertex> lex_min_linear_extension(const RootedTree& t) {
  const std::size_t n = t.size();
  std::vector<bool> placed(n, false);
  std::vector<Vertex> order;
  while (order.size() < n) {
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      auto p = t.parent(v);
      if (p && !placed[static_cast<std::size_t>(*p)]) continue;
      placed[static_cast<std::size_t>(v)] = true;
      order.push_back(v);
      break;
    }
  }
  return order;
}

}  // namespace

VectorField theta(const Arrangement& arr, Vertex i) {
  const auto& t = arr.tree;
  check_vertex(t, i);
  VectorField field;
  field.coeffs.resize(t.size());
  for (Vertex j = 0; j < static_cast<Vertex>(t.size()); ++j) {
    if (t.leq(i, j)) field.coeffs[static_cast<std::size_t>(j)] = expand_product(theta_factors(t, i, j));
  }
  return field;
}

bool is_logarithmic(const Arrangement& arr, const VectorField& v) {
  for (const auto& h : arr.hyperplanes) {
    const Polynomial image = v.coeffs.at(static_cast<std::size_t>(h.plus)) -
                             v.coeffs.at(static_cast<std::size_t>(h.minus));
    if (!divide_exact(image, h.to_polynomial())) return false;
  }
  return true;
}

Certificate saito_check(const Arrangement& arr, long grid_offset) {
  const auto& t = arr.tree;
  const std::size_t n = t.size();
  Certificate cert;
  cert.claim = "saito: det[theta_i(x_j)] = c * Q_T with c = +1 or -1";

  std::vector<VectorField> fields;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) fields.push_back(theta(arr, i));

  // Degrees of the basis fields against the depths.
  std::vector<std::size_t> field_degrees;
  bool homogeneous = true;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
    int deg = -1;
    for (const auto& c : fields[static_cast<std::size_t>(i)].coeffs) {
      if (c.is_zero()) continue;
      if (!c.is_homogeneous() || (deg >= 0 && c.total_degree() != deg)) homogeneous = false;
      deg = std::max(deg, c.total_degree());
    }
    field_degrees.push_back(static_cast<std::size_t>(deg));
  }
  auto sorted_degrees = field_degrees;
  std::sort(sorted_degrees.begin(), sorted_degrees.end());
  const auto exps = exponents(t);
  const bool degrees_match = homogeneous && sorted_degrees == exps;
  const std::size_t degree_sum = std::accumulate(field_degrees.begin(), field_degrees.end(),
                                                 std::size_t{0});

  const FactoredRational q_form = defining_form(arr);
  const Polynomial q = q_form.to_polynomial();

  // Triangular route.
  const auto order = lex_min_linear_extension(t);
  bool triangular = true;
  Polynomial diagonal_product = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const auto& row = fields[static_cast<std::size_t>(order[r])].coeffs;
    for (std::size_t c = 0; c < r; ++c) {
      if (!row[static_cast<std::size_t>(order[c])].is_zero()) triangular = false;
    }
    diagonal_product *= row[static_cast<std::size_t>(order[r])];
  }
  int unit = 0;
  if (diagonal_product == q) {
    unit = 1;
  } else if (diagonal_product == -q) {
    unit = -1;
  }
  const bool triangular_pass = triangular && unit != 0;

  // Grid route. deg_m(det) <= sum over rows of the largest degree of x_m in
  // the row; take the larger of that and deg_m(Q_T).
  std::map<int, unsigned> bounds;
  for (Vertex m = 0; m < static_cast<Vertex>(n); ++m) {
    unsigned det_bound = 0;
    for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
      unsigned row_max = 0;
      for (const auto& c : fields[static_cast<std::size_t>(i)].coeffs) {
        row_max = std::max(row_max, c.degree_in(m));
      }
      det_bound += row_max;
    }
    unsigned q_bound = 0;
    for (const auto& h : arr.hyperplanes) q_bound += h.involves(m) ? 1 : 0;
    bounds[m] = std::max(det_bound, q_bound);
  }
  IdentityGrid grid(n, bounds, grid_offset);
  int grid_unit = unit;
  std::size_t visited = 0;
  const bool grid_pass = grid.for_each([&](std::span<const Rational> point) {
    ++visited;
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n, 0));
    for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
      for (Vertex j = 0; j < static_cast<Vertex>(n); ++j) {
        if (!t.leq(i, j)) continue;
        Integer value = 1;
        for (const auto& f : theta_factors(t, i, j)) {
          value *= Integer(point[f.plus].get_num() - point[f.minus].get_num());
        }
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = value;
      }
    }
    const Integer det = bareiss_determinant(std::move(m));
    const Rational q_value = q_form.evaluate(point);
    if (grid_unit == 0) {
      if (det == q_value) {
        grid_unit = 1;
      } else if (det == -q_value) {
        grid_unit = -1;
      } else {
        return false;
      }
    }
    return Rational(det) == grid_unit * q_value;
  });

  cert.pass = triangular_pass && grid_pass && grid_unit == unit && degrees_match &&
              degree_sum == arr.hyperplanes.size();
  auto namer = arr.namer();
  cert.witness["tree"] = t.to_string();
  cert.witness["unit"] = unit;
  cert.witness["defining_form"] = q_form.to_string(namer);
  cert.witness["triangular_route"] = triangular_pass ? "pass" : "fail";
  cert.witness["grid_route"] = grid_pass ? "pass" : "fail";
  cert.witness["grid_points"] = visited;
  std::vector<std::string> order_labels;
  for (Vertex v : order) order_labels.push_back(t.label(v));
  cert.witness["linear_extension"] = order_labels;
  cert.witness["field_degrees"] = field_degrees;
  cert.witness["exponents"] = exps;
  cert.witness["hyperplanes"] = arr.hyperplanes.size();
  return cert;
}

std::vector<std::size_t> exponents(const RootedTree& t) {
  std::vector<std::size_t> out;
  for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) out.push_back(t.depth(v));
  std::sort(out.begin(), out.end());
  return out;
}

OneForm omega(const Arrangement& arr, Vertex i) {
  const auto& t = arr.tree;
  check_vertex(t, i);
  OneForm form;
  form.coeffs.assign(t.size(), FactoredRational::zero());
  std::vector<Vertex> chain = strictly_below(t, i);
  chain.push_back(i);
  for (Vertex j : chain) {
    std::vector<LinearDifference> den;
    for (Vertex k : chain) {
      if (k != j) den.emplace_back(k, j);
    }
    form.coeffs[static_cast<std::size_t>(j)] = FactoredRational(1, {}, std::move(den));
  }
  return form;
}

TwoForm exterior_derivative(const OneForm& w) {
  TwoForm out;
  const auto n = static_cast<Vertex>(w.coeffs.size());
  for (Vertex l = 0; l < n; ++l) {
    for (Vertex j = l + 1; j < n; ++j) {
      LinearFractionSum sum;
      for (const auto& term : w.coeffs[static_cast<std::size_t>(j)].derivative(l)) sum.add(term);
      for (const auto& term : w.coeffs[static_cast<std::size_t>(l)].derivative(j)) sum.add(-term);
      if (!sum.terms().empty()) out.coeffs.emplace(std::pair{l, j}, std::move(sum));
    }
  }
  return out;
}

bool is_logarithmic_form(const Arrangement& arr, const OneForm& w) {
  const auto q = oriented_sorted(arr.hyperplanes);
  for (const auto& c : w.coeffs) {
    if (!c.is_zero() && !multiset_includes(q, c.denominator())) return false;
  }
  for (const auto& [key, sum] : exterior_derivative(w).coeffs) {
    const auto reduced = sum.reduce();
    if (!multiset_includes(q, reduced.denominator)) return false;
  }
  return true;
}

bool omega_is_logarithmic(const Arrangement& arr, Vertex i) {
  return is_logarithmic_form(arr, omega(arr, i));
}

LinearFractionSum pairing(const OneForm& w, const VectorField& v) {
  if (w.coeffs.size() != v.coeffs.size()) throw std::invalid_argument("dimension mismatch");
  LinearFractionSum sum;
  for (std::size_t j = 0; j < w.coeffs.size(); ++j) sum.add(w.coeffs[j], v.coeffs[j]);
  return sum;
}

Certificate duality_check(const Arrangement& arr, IdentityStrategy strategy, long grid_offset) {
  const auto& t = arr.tree;
  const std::size_t n = t.size();
  if (strategy == IdentityStrategy::Automatic) {
    strategy = n <= 5 ? IdentityStrategy::Symbolic : IdentityStrategy::Grid;
  }
  Certificate cert;
  cert.claim = "duality: <omega_i, theta_i'> = delta(i, i')";
  std::vector<OneForm> forms;
  std::vector<VectorField> fields;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
    forms.push_back(omega(arr, i));
    fields.push_back(theta(arr, i));
  }
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  std::size_t pairs = 0;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
    for (Vertex ip = 0; ip < static_cast<Vertex>(n); ++ip) {
      ++pairs;
      const auto sum = pairing(forms[static_cast<std::size_t>(i)], fields[static_cast<std::size_t>(ip)]);
      const long delta = i == ip ? 1 : 0;
      bool ok = false;
      if (strategy == IdentityStrategy::Symbolic) {
        const auto r = sum.reduce();
        ok = r.denominator.empty() && r.numerator == Polynomial(delta);
      } else {
        ok = grid_identity(sum, delta, n, grid_offset);
      }
      if (!ok) failures.push_back({t.label(i), t.label(ip)});
    }
  }
  cert.pass = failures.empty();
  cert.witness["tree"] = t.to_string();
  cert.witness["strategy"] = strategy == IdentityStrategy::Symbolic ? "symbolic" : "grid";
  cert.witness["pairs"] = pairs;
  cert.witness["failures"] = failures;
  return cert;
}

UnivariatePolynomial char_poly_product(const RootedTree& t) {
  UnivariatePolynomial p({Integer(1)});
  for (std::size_t d : exponents(t)) p = p * UnivariatePolynomial::linear_root(static_cast<long>(d));
  return p;
}

Integer chamber_count(const RootedTree& t) {
  Integer count = 1;
  for (std::size_t d : exponents(t)) count *= static_cast<unsigned long>(d + 1);
  return count;
}

std::uint64_t count_acyclic_orientations(const Graph& g) {
  const std::size_t n = g.vertex_count;
  const std::size_t m = g.edges.size();
  if (m >= 63) throw std::invalid_argument("too many edges for exhaustive orientation count");
  if (n > 64) throw std::invalid_argument("too many vertices for exhaustive orientation count");
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::uint64_t count = 0;
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t e = 0; e < m; ++e) {
      auto [a, b] = g.edges[e];
      if ((mask >> e) & 1U) std::swap(a, b);
      out[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    }
    // Peel sinks until stuck.
    std::uint64_t remaining = all;
    bool progress = true;
    while (remaining != 0 && progress) {
      progress = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (((remaining >> v) & 1U) != 0 && (out[v] & remaining) == 0) {
          remaining &= ~(std::uint64_t{1} << v);
          progress = true;
        }
      }
    }
    if (remaining == 0) ++count;
  }
  return count;
}

Certificate relation_span_check(const Arrangement& arr) {
  const auto& t = arr.tree;
  const std::size_t n = t.size();
  const std::size_t m = arr.hyperplanes.size();
  std::map<std::pair<Vertex, Vertex>, std::size_t> column;
  for (std::size_t h = 0; h < m; ++h) {
    column[{arr.hyperplanes[h].plus, arr.hyperplanes[h].minus}] = h;
  }

  // Linear forms as columns over the coordinates.
  std::vector<std::vector<Rational>> forms(n, std::vector<Rational>(m, 0));
  for (std::size_t h = 0; h < m; ++h) {
    forms[static_cast<std::size_t>(arr.hyperplanes[h].plus)][h] = 1;
    forms[static_cast<std::size_t>(arr.hyperplanes[h].minus)][h] = -1;
  }
  const std::size_t rank = rational_rank(forms);
  const auto kernel = rational_kernel(forms, m);

  std::vector<std::vector<Rational>> relations;
  for (const auto& [ij, h_ij] : column) {
    for (const auto& [jk, h_jk] : column) {
      if (jk.first != ij.second) continue;
      std::vector<Rational> r(m, 0);
      r[h_ij] += 1;
      r[h_jk] += 1;
      r[column.at({ij.first, jk.second})] -= 1;
      relations.push_back(std::move(r));
    }
  }
  bool inside = true;
  for (const auto& r : relations) {
    for (std::size_t row = 0; row < n; ++row) {
      Rational s = 0;
      for (std::size_t h = 0; h < m; ++h) s += forms[row][h] * r[h];
      if (s != 0) inside = false;
    }
  }
  const std::size_t span_dim = rational_rank(relations);
  const std::size_t expected_rank = n >= 2 ? n - 1 : 0;

  Certificate cert;
  cert.claim = "relations: elementary chain relations span all linear relations";
  cert.pass = inside && span_dim == kernel.size() && rank == expected_rank &&
              kernel.size() == m - rank;
  cert.witness["tree"] = t.to_string();
  cert.witness["hyperplanes"] = m;
  cert.witness["rank"] = rank;
  cert.witness["kernel_dim"] = kernel.size();
  cert.witness["span_dim"] = span_dim;
  cert.witness["elementary_relations"] = relations.size();
  return cert;
}

}  // namespace treearr
