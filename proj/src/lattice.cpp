#include "treearr/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace treearr {

namespace {

// Block index of every vertex.
std::vector<std::size_t> block_ids(const Partition& p, std::size_t n) {
  std::vector<std::size_t> id(n, 0);
  for (std::size_t b = 0; b < p.size(); ++b) {
    for (Vertex v : p[b]) id[static_cast<std::size_t>(v)] = b;
  }
  return id;
}

bool refines(const Partition& finer, const Partition& coarser, std::size_t n) {
  const auto id = block_ids(coarser, n);
  for (const auto& block : finer) {
    for (Vertex v : block) {
      if (id[static_cast<std::size_t>(v)] != id[static_cast<std::size_t>(block.front())]) return false;
    }
  }
  return true;
}

std::optional<Vertex> unique_minimum(const RootedTree& t, const std::vector<Vertex>& block) {
  for (Vertex m : block) {
    if (std::all_of(block.begin(), block.end(), [&](Vertex v) { return t.leq(m, v); })) return m;
  }
  return std::nullopt;
}

Partition normalized(Partition p) {
  for (auto& b : p) std::sort(b.begin(), b.end());
  std::sort(p.begin(), p.end());
  return p;
}

// Restricted growth strings.
void for_each_set_partition(std::size_t n, const std::function<void(const Partition&)>& visit) {
  std::vector<std::size_t> assign(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t blocks) {
    if (v == n) {
      Partition p(blocks);
      for (std::size_t u = 0; u < n; ++u) p[assign[u]].push_back(static_cast<Vertex>(u));
      visit(p);
      return;
    }
    for (std::size_t b = 0; b <= blocks; ++b) {
      assign[v] = b;
      rec(v + 1, std::max(blocks, b + 1));
    }
  };
  if (n == 0) {
    visit({});
    return;
  }
  rec(0, 0);
}

}  // namespace

Forest induced_forest(const RootedTree& t, const Partition& blocks) {
  std::vector<Vertex> parent(t.size(), -1);
  for (const auto& block : blocks) {
    if (!unique_minimum(t, block)) {
      throw std::invalid_argument("block without a unique minimum in the tree order");
    }
    for (Vertex v : block) {
      // Nearest strict ancestor of v inside the block.
      for (auto p = t.parent(v); p; p = t.parent(*p)) {
        if (std::find(block.begin(), block.end(), *p) != block.end()) {
          parent[static_cast<std::size_t>(v)] = *p;
          break;
        }
      }
    }
  }
  return Forest(t.labels(), std::move(parent));
}

Lattice::Lattice(RootedTree tree, std::vector<Forest> elements)
    : tree_(std::move(tree)), elements_(std::move(elements)) {
  const std::size_t n = tree_.size();
  for (const auto& f : elements_) {
    partitions_.push_back(f.partition());
    rank_.push_back(f.node_count());
  }
  for (std::size_t a = 0; a < elements_.size(); ++a) {
    for (std::size_t b = 0; b < elements_.size(); ++b) {
      if (rank_[b] == rank_[a] + 1 && refines(partitions_[a], partitions_[b], n)) {
        hasse_.emplace_back(a, b);
      }
    }
  }
}

std::size_t Lattice::index_of(const Forest& f) const {
  auto it = std::find(elements_.begin(), elements_.end(), f);
  if (it == elements_.end()) {
    throw std::invalid_argument("forest " + f.to_string() + " is not in the lattice");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool Lattice::contains(const Forest& f) const {
  return std::find(elements_.begin(), elements_.end(), f) != elements_.end();
}

bool Lattice::leq(std::size_t a, std::size_t b) const {
  return refines(partitions_.at(a), partitions_.at(b), tree_.size());
}

Lattice build_lattice(const RootedTree& t) {
  std::vector<Forest> elements;
  for_each_set_partition(t.size(), [&](const Partition& p) {
    for (const auto& block : p) {
      if (!unique_minimum(t, block)) return;
    }
    elements.push_back(induced_forest(t, p));
  });
  std::vector<std::pair<std::pair<std::size_t, std::string>, std::size_t>> keys;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    keys.push_back({{elements[k].node_count(), elements[k].to_string()}, k});
  }
  std::sort(keys.begin(), keys.end());
  std::vector<Forest> sorted;
  for (const auto& key : keys) sorted.push_back(elements[key.second]);
  return Lattice(t, std::move(sorted));
}

std::set<Partition> brute_force_flats(const RootedTree& t) {
  const std::size_t n = t.size();
  std::vector<std::pair<Vertex, Vertex>> hyperplanes;
  for (Vertex i = 0; i < static_cast<Vertex>(n); ++i) {
    for (Vertex j = 0; j < static_cast<Vertex>(n); ++j) {
      if (t.less(i, j)) hyperplanes.emplace_back(i, j);
    }
  }
  if (hyperplanes.size() >= 30) throw std::invalid_argument("too many hyperplanes to enumerate");
  std::set<Partition> flats;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << hyperplanes.size()); ++subset) {
    std::vector<Vertex> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    std::function<Vertex(Vertex)> find = [&](Vertex v) {
      while (uf[static_cast<std::size_t>(v)] != v) v = uf[static_cast<std::size_t>(v)];
      return v;
    };
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
      if (((subset >> h) & 1U) == 0) continue;
      uf[static_cast<std::size_t>(find(hyperplanes[h].first))] = find(hyperplanes[h].second);
    }
    std::map<Vertex, std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) blocks[find(v)].push_back(v);
    Partition p;
    for (auto& [root, block] : blocks) p.push_back(std::move(block));
    flats.insert(normalized(std::move(p)));
  }
  return flats;
}

std::vector<Integer> mobius(const Lattice& lat) {
  std::vector<Integer> mu(lat.size(), 0);
  for (std::size_t a = 0; a < lat.size(); ++a) {
    if (a == 0) {
      mu[a] = 1;
      continue;
    }
    Integer sum = 0;
    for (std::size_t b = 0; b < lat.size(); ++b) {
      if (b != a && lat.leq(b, a)) sum += mu[b];
    }
    mu[a] = -sum;
  }
  return mu;
}

UnivariatePolynomial char_poly_mobius(const Lattice& lat) {
  const auto mu = mobius(lat);
  UnivariatePolynomial chi;
  const std::size_t n = lat.tree().size();
  for (std::size_t a = 0; a < lat.size(); ++a) {
    chi += UnivariatePolynomial::monomial(mu[a], static_cast<unsigned>(n - lat.rank()[a]));
  }
  return chi;
}

Forest supremum(const Lattice& lat, const Forest& f1, const Forest& f2) {
  lat.index_of(f1);
  lat.index_of(f2);
  const auto& t = lat.tree();
  const std::size_t n = t.size();
  std::vector<Vertex> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](Vertex v) {
    while (uf[static_cast<std::size_t>(v)] != v) v = uf[static_cast<std::size_t>(v)];
    return v;
  };
  auto unite = [&](Vertex a, Vertex b) { uf[static_cast<std::size_t>(find(a))] = find(b); };
  for (const Forest* f : {&f1, &f2}) {
    for (Vertex v : f->nodes()) unite(v, *f->parent(v));
  }
  // A block without a unique minimum must also hold the meet of its
  // elements; merge until every block has one.
  while (true) {
    std::map<Vertex, std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) blocks[find(v)].push_back(v);
    bool merged = false;
    for (const auto& [root, block] : blocks) {
      if (unique_minimum(t, block)) continue;
      Vertex meet = block.front();
      for (Vertex v : block) {
        while (!t.leq(meet, v)) meet = *t.parent(meet);
      }
      unite(meet, block.front());
      merged = true;
      break;
    }
    if (!merged) {
      Partition p;
      for (auto& [root, block] : blocks) p.push_back(block);
      return induced_forest(t, normalized(std::move(p)));
    }
  }
}

BivariatePolynomial cardinality_poly(const Lattice& lat) {
  BivariatePolynomial c;
  const Vertex root = lat.tree().root();
  for (const auto& f : lat.elements()) {
    const auto roots = f.roots().size();
    const Vertex top = f.root_of(root);
    std::size_t stump = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(f.size()); ++v) {
      if (v != top && f.root_of(v) == top) ++stump;
    }
    c += BivariatePolynomial::monomial(1, static_cast<unsigned>(roots - 1),
                                       static_cast<unsigned>(stump));
  }
  return c;
}

BivariatePolynomial cardinality_poly_recursive(const RootedTree& t) {
  if (t.size() == 1) return 1;
  const auto subtrees = t.children(t.root());
  if (subtrees.size() == 1) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
      if (v != t.root()) keep.push_back(v);
    }
    const auto inner = cardinality_poly_recursive(induced_subtree(t, keep));
    return BivariatePolynomial::z() * inner + BivariatePolynomial::y() * inner.shift_z();
  }
  BivariatePolynomial product = 1;
  for (const auto& part : root_decompose(t)) product = product * cardinality_poly_recursive(part);
  return product;
}

std::string hasse_dot(const Lattice& lat) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < lat.size(); ++k) {
    out << "  n" << k << " [label=\"" << lat.elements()[k].to_string() << "\"];\n";
  }
  std::map<std::size_t, std::vector<std::size_t>> by_rank;
  for (std::size_t k = 0; k < lat.size(); ++k) by_rank[lat.rank()[k]].push_back(k);
  for (const auto& [r, members] : by_rank) {
    out << "  { rank=same;";
    for (auto k : members) out << " n" << k << ';';
    out << " }\n";
  }
  for (const auto& [a, b] : lat.hasse()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json lattice_json(const Lattice& lat) {
  nlohmann::ordered_json j;
  j["schema"] = "treearr.lattice/1";
  j["tree"] = lat.tree().to_string();
  std::vector<std::string> elements;
  for (const auto& f : lat.elements()) elements.push_back(f.to_string());
  j["elements"] = elements;
  j["rank"] = lat.rank();
  nlohmann::ordered_json hasse = nlohmann::ordered_json::array();
  for (const auto& [a, b] : lat.hasse()) hasse.push_back({a, b});
  j["hasse"] = hasse;
  nlohmann::ordered_json mu = nlohmann::ordered_json::array();
  for (const auto& m : mobius(lat)) mu.push_back(m.get_si());
  j["mobius"] = mu;
  return j;
}

}  // namespace treearr
