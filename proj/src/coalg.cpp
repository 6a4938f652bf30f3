#include "treearr/coalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "treearr/exactpoly.hpp"

namespace treearr {

int shuffle_sign(const std::vector<std::vector<Vertex>>& blocks) {
  std::vector<Vertex> seq;
  for (const auto& b : blocks) seq.insert(seq.end(), b.begin(), b.end());
  std::size_t inversions = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

std::size_t degree(const Forest& f) { return f.node_count(); }

std::vector<Forest> gamma(const Forest& f, const std::vector<Vertex>& nodes) {
  const std::size_t n = f.size();
  std::vector<bool> is_node(n, false);
  for (Vertex v : nodes) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || f.is_root(v)) {
      throw std::invalid_argument("requested nodes are not nodes of the forest");
    }
    is_node[static_cast<std::size_t>(v)] = true;
  }
  // Every requested node joins the block of some non-node strictly below it;
  // each block then carries the order induced from f.
  std::vector<std::vector<Vertex>> anchors;
  for (Vertex v : nodes) {
    std::vector<Vertex> below;
    for (auto p = f.parent(v); p; p = f.parent(*p)) {
      if (!is_node[static_cast<std::size_t>(*p)]) below.push_back(*p);
    }
    anchors.push_back(std::move(below));
  }
  std::vector<Forest> out;
  std::vector<std::size_t> choice(nodes.size(), 0);
  while (true) {
    std::vector<Vertex> block_of(n);
    std::iota(block_of.begin(), block_of.end(), 0);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      block_of[static_cast<std::size_t>(nodes[k])] = anchors[k][choice[k]];
    }
    std::vector<Vertex> parent(n, -1);
    for (Vertex v : nodes) {
      const Vertex b = block_of[static_cast<std::size_t>(v)];
      for (auto p = f.parent(v); p; p = f.parent(*p)) {
        if (block_of[static_cast<std::size_t>(*p)] == b) {
          parent[static_cast<std::size_t>(v)] = *p;
          break;
        }
      }
    }
    out.emplace_back(f.labels(), std::move(parent));
    std::size_t k = 0;
    for (; k < nodes.size(); ++k) {
      if (++choice[k] < anchors[k].size()) break;
      choice[k] = 0;
    }
    if (k == nodes.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void add_splits(const Forest& f, Coefficient coeff, std::size_t k,
                const std::function<void(std::vector<Forest>, Coefficient)>& emit) {
  const auto nodes = f.nodes();
  const std::size_t d = nodes.size();
  std::vector<std::size_t> assign(d, 0);
  while (true) {
    std::vector<std::vector<Vertex>> blocks(k);
    for (std::size_t v = 0; v < d; ++v) blocks[assign[v]].push_back(nodes[v]);
    const int sign = shuffle_sign(blocks);
    std::vector<std::vector<Forest>> choices;
    for (const auto& b : blocks) choices.push_back(gamma(f, b));
    std::vector<std::size_t> pick(k, 0);
    while (true) {
      std::vector<Forest> slots;
      for (std::size_t s = 0; s < k; ++s) slots.push_back(choices[s][pick[s]]);
      emit(std::move(slots), sign * coeff);
      std::size_t s = 0;
      for (; s < k; ++s) {
        if (++pick[s] < choices[s].size()) break;
        pick[s] = 0;
      }
      if (s == k) break;
    }
    std::size_t v = 0;
    for (; v < d; ++v) {
      if (++assign[v] < k) break;
      assign[v] = 0;
    }
    if (v == d) break;
  }
}

LabelsPtr labels_of(const DualElement& x) {
  return x.is_zero() ? nullptr : x.terms().begin()->first.labels();
}

}  // namespace

TensorElement split_coproduct(const Forest& f, std::size_t k) {
  if (k == 0) throw std::invalid_argument("split into zero blocks");
  TensorElement out;
  add_splits(f, 1, k, [&](std::vector<Forest> slots, Coefficient c) { out.add(slots, c); });
  return out;
}

TensorElement coproduct(const Forest& f) { return split_coproduct(f, 2); }

TensorElement coproduct(const CoalgebraElement& x) {
  TensorElement out;
  for (const auto& [f, c] : x.terms()) out += c * coproduct(f);
  return out;
}

TensorElement coproduct_at(const TensorElement& x, std::size_t slot) {
  TensorElement out;
  for (const auto& [slots, c] : x.terms()) {
    if (slot >= slots.size()) throw std::out_of_range("tensor slot out of range");
    const auto split = coproduct(slots[slot]);
    for (const auto& [pair, d] : split.terms()) {
      std::vector<Forest> next(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(slot));
      next.insert(next.end(), pair.begin(), pair.end());
      next.insert(next.end(), slots.begin() + static_cast<std::ptrdiff_t>(slot) + 1, slots.end());
      out.add(next, c * d);
    }
  }
  return out;
}

TensorElement iterated_coproduct(const CoalgebraElement& x, std::size_t k) {
  if (k == 0) throw std::invalid_argument("iterated coproduct needs k >= 1");
  TensorElement out;
  for (const auto& [f, c] : x.terms()) out.add({f}, c);
  for (std::size_t step = 1; step < k; ++step) out = coproduct_at(out, 0);
  return out;
}

TensorElement graded_flip(const TensorElement& x) {
  TensorElement out;
  for (const auto& [slots, c] : x.terms()) {
    if (slots.size() != 2) throw std::invalid_argument("flip needs two-slot tensors");
    const bool odd = (degree(slots[0]) * degree(slots[1])) % 2 == 1;
    out.add({slots[1], slots[0]}, odd ? -c : c);
  }
  return out;
}

Coefficient counit(const CoalgebraElement& x) {
  for (const auto& [f, c] : x.terms()) {
    if (degree(f) == 0) return c;
  }
  return 0;
}

CoalgebraElement counit_left(const TensorElement& x) {
  CoalgebraElement out;
  for (const auto& [slots, c] : x.terms()) {
    if (slots.size() != 2) throw std::invalid_argument("counit needs two-slot tensors");
    if (degree(slots[0]) == 0) out.add(slots[1], c);
  }
  return out;
}

CoalgebraElement counit_right(const TensorElement& x) {
  CoalgebraElement out;
  for (const auto& [slots, c] : x.terms()) {
    if (slots.size() != 2) throw std::invalid_argument("counit needs two-slot tensors");
    if (degree(slots[1]) == 0) out.add(slots[0], c);
  }
  return out;
}

DualElement dual_multiply(const DualElement& a, const DualElement& b) {
  DualElement out;
  const LabelsPtr labels = labels_of(a) ? labels_of(a) : labels_of(b);
  if (a.is_zero() || b.is_zero()) return out;
  if (!(*labels_of(a) == *labels_of(b))) throw std::invalid_argument("different label sets");
  std::set<std::size_t> targets;
  for (const auto& [fa, ca] : a.terms()) {
    for (const auto& [fb, cb] : b.terms()) targets.insert(degree(fa) + degree(fb));
  }
  for_each_forest(labels, [&](const Forest& g) {
    if (targets.count(degree(g)) == 0) return;
    Coefficient sum = 0;
    const auto delta = coproduct(g);
    for (const auto& [slots, c] : delta.terms()) {
      const Coefficient ca = a.coefficient(slots[0]);
      if (ca == 0) continue;
      const Coefficient cb = b.coefficient(slots[1]);
      if (cb == 0) continue;
      const bool odd = (degree(slots[0]) * degree(slots[1])) % 2 == 1;
      sum += (odd ? -1 : 1) * c * ca * cb;
    }
    out.add(g, sum);
  });
  return out;
}

DualElement dual_generator(const LabelsPtr& labels, Generator g) {
  std::vector<Vertex> parent(labels->size(), -1);
  if (g.parent == g.child) throw std::invalid_argument("generator with equal endpoints");
  parent.at(static_cast<std::size_t>(g.child)) = g.parent;
  return DualElement(Forest(labels, std::move(parent)));
}

NormalForm algebra_reduce(const AlgebraWord& w) {
  const std::size_t n = w.labels->size();
  std::vector<Vertex> parent(n, -1);
  for (const auto& g : w.factors) {
    if (g.parent == g.child) throw std::invalid_argument("generator with equal endpoints");
    auto& slot = parent.at(static_cast<std::size_t>(g.child));
    // A repeated factor squares to zero; two distinct parents is a fork.
    if (slot >= 0) return {};
    slot = g.parent;
  }
  // Any oriented cycle vanishes.
  for (std::size_t v = 0; v < n; ++v) {
    Vertex cur = static_cast<Vertex>(v);
    for (std::size_t steps = 0; cur >= 0; ++steps) {
      if (steps > n) return {};
      cur = parent[static_cast<std::size_t>(cur)];
    }
  }
  std::vector<Vertex> children;
  for (const auto& g : w.factors) children.push_back(g.child);
  std::vector<std::vector<Vertex>> singletons;
  for (Vertex c : children) singletons.push_back({c});
  NormalForm out;
  out.sign = shuffle_sign(singletons);
  out.forest = Forest(w.labels, std::move(parent));
  return out;
}

AlgebraWord monomial_word(const Forest& f) {
  AlgebraWord w{f.labels(), {}};
  for (Vertex v : f.nodes()) w.factors.push_back({*f.parent(v), v});
  return w;
}

DualElement rho(const AlgebraWord& w) {
  DualElement product(Forest::roots_only(w.labels));
  for (const auto& g : w.factors) {
    product = dual_multiply(product, dual_generator(w.labels, g));
    if (product.is_zero()) break;
  }
  return product;
}

std::set<Forest> imagemono_predicted(const Forest& f) {
  std::set<Forest> out;
  const auto nodes = f.nodes();
  for_each_forest(f.labels(), [&](const Forest& g) {
    if (g.nodes() == nodes && precedes(f, g)) out.insert(g);
  });
  return out;
}

namespace {

std::size_t relation_count(const Forest& f) {
  std::size_t count = 0;
  for (Vertex v = 0; v < static_cast<Vertex>(f.size()); ++v) count += f.depth(v);
  return count;
}

}  // namespace

Certificate iso_check(const std::vector<std::string>& label_names) {
  const auto labels = make_labels(label_names);
  auto forests = enumerate_forests(labels);
  // Strictly more comparable pairs along ⪯ within a node set, so this order
  // is a linear extension of ⪯ restricted to equal node sets.
  std::sort(forests.begin(), forests.end(), [](const Forest& a, const Forest& b) {
    const auto na = a.nodes();
    const auto nb = b.nodes();
    if (na != nb) return na < nb;
    const auto ra = relation_count(a);
    const auto rb = relation_count(b);
    if (ra != rb) return ra < rb;
    return a.to_string() < b.to_string();
  });
  const std::size_t total = forests.size();
  std::map<Forest, std::size_t> position;
  for (std::size_t k = 0; k < total; ++k) position.emplace(forests[k], k);

  std::vector<std::vector<Integer>> matrix(total, std::vector<Integer>(total, 0));
  nlohmann::ordered_json support_failures = nlohmann::ordered_json::array();
  bool unit_coefficients = true;
  bool triangular = true;
  for (std::size_t row = 0; row < total; ++row) {
    const auto image = rho(monomial_word(forests[row]));
    std::set<Forest> support;
    for (const auto& [g, c] : image.terms()) {
      support.insert(g);
      if (c != 1 && c != -1) unit_coefficients = false;
      const std::size_t col = position.at(g);
      matrix[row][col] = c;
      if (col < row) triangular = false;
    }
    if (support != imagemono_predicted(forests[row])) {
      support_failures.push_back(forests[row].to_string());
    }
    if (image.coefficient(forests[row]) == 0) triangular = false;
  }
  const Integer det = bareiss_determinant(matrix);

  Certificate cert;
  cert.claim = "iso: rho(m_F) is supported on {G : F ⪯ G, N(G) = N(F)} with unimodular transition";
  cert.pass = support_failures.empty() && unit_coefficients && triangular &&
              (det == 1 || det == -1);
  cert.witness["labels"] = labels->labels();
  cert.witness["forests"] = total;
  cert.witness["support_failures"] = support_failures;
  cert.witness["unit_coefficients"] = unit_coefficients;
  cert.witness["triangular"] = triangular;
  cert.witness["determinant"] = det.get_str();
  return cert;
}

AlgebraWord parse_word(const std::string& text, const LabelsPtr& labels) {
  AlgebraWord w{labels, {}};
  std::size_t pos = 0;
  auto skip = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  auto label = [&]() {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    if (pos == start) throw ParseError("expected a label", pos);
    const std::string name = text.substr(start, pos - start);
    if (!labels->contains(name)) throw ParseError("unknown label '" + name + "'", start);
    return labels->index(name);
  };
  skip();
  if (pos == text.size()) return w;
  while (true) {
    const std::size_t start = pos;
    const Vertex i = label();
    skip();
    if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-'", pos);
    ++pos;
    const Vertex j = label();
    if (i == j) throw ParseError("generator with equal endpoints", start);
    w.factors.push_back({i, j});
    skip();
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return w;
}

namespace {

template <class Element, class Render>
std::string render_sum(const Element& x, Render render) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : x.terms()) {
    if (!out.empty()) out += ' ';
    out += (c < 0 ? "-" : "+") + std::to_string(c < 0 ? -c : c) + "·" + render(key);
  }
  return out;
}

}  // namespace

std::string to_string(const CoalgebraElement& x) {
  return render_sum(x, [](const Forest& f) { return '[' + f.to_string() + ']'; });
}

std::string to_string(const DualElement& x) {
  return render_sum(x, [](const Forest& f) { return '[' + f.to_string() + "]*"; });
}

std::string to_string(const TensorElement& x) {
  return render_sum(x, [](const std::vector<Forest>& slots) {
    std::string s;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (k > 0) s += "⊗";
      s += '[' + slots[k].to_string() + ']';
    }
    return s;
  });
}

std::string to_string(const AlgebraWord& w) {
  if (w.factors.empty()) return "1";
  std::string out;
  for (const auto& g : w.factors) {
    out += "Ω(" + w.labels->label(g.parent) + "," + w.labels->label(g.child) + ")";
  }
  return out;
}

nlohmann::ordered_json to_json(const TensorElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [slots, c] : x.terms()) {
    std::vector<std::string> names;
    for (const auto& f : slots) names.push_back(f.to_string());
    terms.push_back({{"forests", names}, {"coeff", c}});
  }
  return {{"terms", terms}};
}

nlohmann::ordered_json to_json(const DualElement& x) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [f, c] : x.terms()) {
    terms.push_back({{"forests", std::vector<std::string>{f.to_string()}}, {"coeff", c}});
  }
  return {{"terms", terms}};
}

}  // namespace treearr
