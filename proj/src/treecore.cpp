#include "treearr/treecore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace treearr {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

// -------------------------------------------------------------- LabelTable

namespace {

bool is_label(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) != 0; });
}

}  // namespace

LabelTable::LabelTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  for (std::size_t k = 0; k < labels_.size(); ++k) {
    if (!is_label(labels_[k])) throw std::invalid_argument("invalid label '" + labels_[k] + "'");
    if (k > 0 && labels_[k] == labels_[k - 1]) {
      throw std::invalid_argument("duplicate label '" + labels_[k] + "'");
    }
    index_.emplace(labels_[k], static_cast<Vertex>(k));
  }
}

Vertex LabelTable::index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw std::out_of_range("unknown vertex '" + label + "'");
  return it->second;
}

LabelsPtr make_labels(std::vector<std::string> labels) {
  return std::make_shared<const LabelTable>(std::move(labels));
}

// ------------------------------------------------------------------ Forest

Forest::Forest(LabelsPtr labels, std::vector<Vertex> parent)
    : labels_(std::move(labels)), parent_(std::move(parent)) {
  if (!labels_) throw std::invalid_argument("forest without a label table");
  const auto n = static_cast<Vertex>(labels_->size());
  if (parent_.size() != labels_->size()) throw std::invalid_argument("parent map size mismatch");
  for (Vertex v = 0; v < n; ++v) {
    Vertex p = parent_[static_cast<std::size_t>(v)];
    if (p < 0) {
      parent_[static_cast<std::size_t>(v)] = -1;
      continue;
    }
    if (p >= n || p == v) throw std::invalid_argument("invalid parent");
  }
  for (Vertex v = 0; v < n; ++v) {
    Vertex cur = v;
    for (Vertex steps = 0; cur >= 0; ++steps) {
      if (steps > n) throw std::invalid_argument("parent map has a cycle");
      cur = parent_[static_cast<std::size_t>(cur)];
    }
  }
}

Forest Forest::roots_only(LabelsPtr labels) {
  const auto n = labels->size();
  return Forest(std::move(labels), std::vector<Vertex>(n, -1));
}

void Forest::check_vertex(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= parent_.size()) {
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  }
}

std::optional<Vertex> Forest::parent(Vertex v) const {
  check_vertex(v);
  const Vertex p = parent_[static_cast<std::size_t>(v)];
  if (p < 0) return std::nullopt;
  return p;
}

std::vector<Vertex> Forest::roots() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] < 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::vector<Vertex> Forest::nodes() const {
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] >= 0) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

std::size_t Forest::node_count() const {
  return static_cast<std::size_t>(
      std::count_if(parent_.begin(), parent_.end(), [](Vertex p) { return p >= 0; }));
}

std::vector<Vertex> Forest::children(Vertex v) const {
  check_vertex(v);
  std::vector<Vertex> out;
  for (std::size_t c = 0; c < parent_.size(); ++c) {
    if (parent_[c] == v) out.push_back(static_cast<Vertex>(c));
  }
  return out;
}

Vertex Forest::root_of(Vertex v) const {
  check_vertex(v);
  while (parent_[static_cast<std::size_t>(v)] >= 0) v = parent_[static_cast<std::size_t>(v)];
  return v;
}

std::size_t Forest::depth(Vertex v) const {
  check_vertex(v);
  std::size_t d = 0;
  while (parent_[static_cast<std::size_t>(v)] >= 0) {
    v = parent_[static_cast<std::size_t>(v)];
    ++d;
  }
  return d;
}

bool Forest::leq(Vertex i, Vertex j) const {
  check_vertex(i);
  check_vertex(j);
  for (Vertex cur = j; cur >= 0; cur = parent_[static_cast<std::size_t>(cur)]) {
    if (cur == i) return true;
  }
  return false;
}

Partition Forest::partition() const {
  std::map<Vertex, std::vector<Vertex>> blocks;
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    blocks[root_of(static_cast<Vertex>(v))].push_back(static_cast<Vertex>(v));
  }
  Partition out;
  for (auto& [root, block] : blocks) out.push_back(std::move(block));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Forest::to_string() const {
  std::vector<std::vector<Vertex>> kids(parent_.size());
  for (std::size_t v = 0; v < parent_.size(); ++v) {
    if (parent_[v] >= 0) kids[static_cast<std::size_t>(parent_[v])].push_back(static_cast<Vertex>(v));
  }
  std::function<void(Vertex, std::string&)> render = [&](Vertex v, std::string& out) {
    out += label(v);
    const auto& ch = kids[static_cast<std::size_t>(v)];
    if (ch.empty()) return;
    out += '(';
    for (std::size_t k = 0; k < ch.size(); ++k) {
      if (k > 0) out += ',';
      render(ch[k], out);
    }
    out += ')';
  };
  std::string out;
  for (Vertex r : roots()) {
    if (!out.empty()) out += ';';
    render(r, out);
  }
  return out;
}

bool operator==(const Forest& a, const Forest& b) {
  if (a.parent_ != b.parent_) return false;
  return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
}

// -------------------------------------------------------------- RootedTree

namespace {

Vertex single_root(const Forest& f) {
  auto r = f.roots();
  if (r.size() != 1) throw std::invalid_argument("a rooted tree needs exactly one root");
  return r.front();
}

}  // namespace

RootedTree::RootedTree(LabelsPtr labels, std::vector<Vertex> parent)
    : Forest(std::move(labels), std::move(parent)), root_(single_root(*this)) {}

RootedTree::RootedTree(const Forest& forest) : Forest(forest), root_(single_root(forest)) {}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  // Returns (label, parent label or empty) pairs in encounter order.
  std::vector<std::pair<std::string, std::string>> parse_forest() {
    skip_space();
    parse_tree("");
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      parse_tree("");
      skip_space();
    }
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return edges_;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  void parse_tree(const std::string& parent) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    if (pos_ == start) {
      if (pos_ == text_.size()) throw ParseError("expected a label, found end of input", pos_);
      throw ParseError(std::string("expected a label, found '") + text_[pos_] + "'", pos_);
    }
    std::string label = text_.substr(start, pos_ - start);
    if (!seen_.insert(label).second) throw ParseError("duplicate label '" + label + "'", start);
    edges_.emplace_back(label, parent);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      parse_tree(label);
      skip_space();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        parse_tree(label);
        skip_space();
      }
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::set<std::string> seen_;
  std::vector<std::pair<std::string, std::string>> edges_;
};

Forest build_forest(const std::vector<std::pair<std::string, std::string>>& edges,
                    const LabelsPtr& labels) {
  std::vector<Vertex> parent(labels->size(), -1);
  for (const auto& [child, par] : edges) {
    if (!par.empty()) parent[static_cast<std::size_t>(labels->index(child))] = labels->index(par);
  }
  return Forest(labels, std::move(parent));
}

}  // namespace

Forest parse_forest(const std::string& text) {
  auto edges = Parser(text).parse_forest();
  std::vector<std::string> names;
  for (const auto& e : edges) names.push_back(e.first);
  return build_forest(edges, make_labels(std::move(names)));
}

Forest parse_forest(const std::string& text, const LabelsPtr& labels) {
  auto edges = Parser(text).parse_forest();
  if (edges.size() != labels->size()) {
    throw std::invalid_argument("forest '" + text + "' does not use the expected label set");
  }
  for (const auto& e : edges) {
    if (!labels->contains(e.first)) {
      throw std::invalid_argument("forest '" + text + "' does not use the expected label set");
    }
  }
  return build_forest(edges, labels);
}

RootedTree parse_tree(const std::string& text) {
  Forest f = parse_forest(text);
  if (f.roots().size() != 1) {
    throw ParseError("a tree has a single outermost label", text.find(';'));
  }
  return RootedTree(f);
}

// -------------------------------------------------------------- the orders

std::size_t depth(const RootedTree& t, Vertex v) { return t.depth(v); }

bool leq(const Forest& f, Vertex i, Vertex j) { return f.leq(i, j); }

namespace {

void require_same_labels(const Forest& a, const Forest& b) {
  if (a.labels() != b.labels() && !(*a.labels() == *b.labels())) {
    throw std::invalid_argument("forests on different label sets");
  }
}

}  // namespace

bool is_subforest(const Forest& f1, const Forest& f2) {
  require_same_labels(f1, f2);
  const auto n = static_cast<Vertex>(f1.size());
  std::vector<Vertex> r1(static_cast<std::size_t>(n));
  std::vector<Vertex> r2(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    r1[static_cast<std::size_t>(v)] = f1.root_of(v);
    r2[static_cast<std::size_t>(v)] = f2.root_of(v);
  }
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      if (r1[static_cast<std::size_t>(i)] != r1[static_cast<std::size_t>(j)]) continue;
      if (r2[static_cast<std::size_t>(i)] != r2[static_cast<std::size_t>(j)]) return false;
      if (f1.leq(i, j) != f2.leq(i, j)) return false;
    }
  }
  return true;
}

bool precedes(const Forest& f1, const Forest& f2) {
  require_same_labels(f1, f2);
  for (Vertex v : f1.nodes()) {
    if (!f2.leq(*f1.parent(v), v)) return false;
  }
  return true;
}

RootedTree graft_root(const RootedTree& t, const std::string& label) {
  if (t.labels()->contains(label)) throw std::invalid_argument("duplicate label '" + label + "'");
  auto names = t.labels()->labels();
  names.push_back(label);
  auto labels = make_labels(std::move(names));
  std::vector<Vertex> parent(labels->size(), -1);
  for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
    const Vertex nv = labels->index(t.label(v));
    if (auto p = t.parent(v)) {
      parent[static_cast<std::size_t>(nv)] = labels->index(t.label(*p));
    } else {
      parent[static_cast<std::size_t>(nv)] = labels->index(label);
    }
  }
  return RootedTree(labels, std::move(parent));
}

RootedTree induced_subtree(const RootedTree& t, const std::vector<Vertex>& keep) {
  std::vector<std::string> names;
  for (Vertex v : keep) names.push_back(t.label(v));
  auto labels = make_labels(std::move(names));
  std::vector<Vertex> parent(labels->size(), -1);
  for (Vertex v : keep) {
    // Nearest kept strict ancestor.
    for (auto p = t.parent(v); p; p = t.parent(*p)) {
      if (labels->contains(t.label(*p))) {
        parent[static_cast<std::size_t>(labels->index(t.label(v)))] = labels->index(t.label(*p));
        break;
      }
    }
  }
  return RootedTree(labels, std::move(parent));
}

std::vector<RootedTree> root_decompose(const RootedTree& t) {
  const auto subtrees = t.children(t.root());
  if (subtrees.empty()) throw std::invalid_argument("a single-vertex tree has no root subtrees");
  if (subtrees.size() == 1) return {t};
  std::vector<RootedTree> out;
  for (Vertex c : subtrees) {
    std::vector<Vertex> keep{t.root()};
    for (Vertex v = 0; v < static_cast<Vertex>(t.size()); ++v) {
      if (t.leq(c, v)) keep.push_back(v);
    }
    out.push_back(induced_subtree(t, keep));
  }
  return out;
}

// --------------------------------------------------------------- chordality

bool Graph::adjacent(Vertex i, Vertex j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges.begin(), edges.end(), std::pair<Vertex, Vertex>{i, j});
}

Graph comparability_graph(const RootedTree& t) {
  Graph g;
  g.vertex_count = t.size();
  const auto n = static_cast<Vertex>(t.size());
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (t.leq(i, j) || t.leq(j, i)) g.edges.emplace_back(i, j);
    }
  }
  return g;
}

bool check_chordal_peo(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.vertex_count;
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Vertex> expected(n);
  std::iota(expected.begin(), expected.end(), 0);
  if (sorted != expected) throw std::invalid_argument("elimination order is not a permutation");

  std::vector<bool> present(n, true);
  for (std::size_t k = n; k-- > 0;) {
    const Vertex v = order[k];
    std::vector<Vertex> nbrs;
    for (Vertex u = 0; u < static_cast<Vertex>(n); ++u) {
      if (u != v && present[static_cast<std::size_t>(u)] && g.adjacent(u, v)) nbrs.push_back(u);
    }
    for (std::size_t a = 0; a < nbrs.size(); ++a) {
      for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
        if (!g.adjacent(nbrs[a], nbrs[b])) return false;
      }
    }
    present[static_cast<std::size_t>(v)] = false;
  }
  return true;
}

bool check_chordal_peo(const RootedTree& t, const std::vector<Vertex>& order) {
  return check_chordal_peo(comparability_graph(t), order);
}

void for_each_linear_extension(const RootedTree& t,
                               const std::function<void(const std::vector<Vertex>&)>& visit) {
  const std::size_t n = t.size();
  std::vector<Vertex> prefix;
  std::vector<bool> placed(n, false);
  std::function<void()> extend = [&]() {
    if (prefix.size() == n) {
      visit(prefix);
      return;
    }
    for (Vertex v = 0; v < static_cast<Vertex>(n); ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      auto p = t.parent(v);
      if (p && !placed[static_cast<std::size_t>(*p)]) continue;
      placed[static_cast<std::size_t>(v)] = true;
      prefix.push_back(v);
      extend();
      prefix.pop_back();
      placed[static_cast<std::size_t>(v)] = false;
    }
  };
  extend();
}

// -------------------------------------------------------------- enumeration

namespace {

bool acyclic(const std::vector<Vertex>& parent) {
  const auto n = static_cast<Vertex>(parent.size());
  for (Vertex v = 0; v < n; ++v) {
    Vertex cur = v;
    for (Vertex steps = 0; cur >= 0; ++steps) {
      if (steps > n) return false;
      cur = parent[static_cast<std::size_t>(cur)];
    }
  }
  return true;
}

// Odometer over parent[v] in {-1} and the other vertices.
void for_each_parent_map(std::size_t n, bool single_root,
                         const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> parent(n, -1);
  while (true) {
    const auto roots = std::count(parent.begin(), parent.end(), -1);
    if ((!single_root || roots == 1) && acyclic(parent)) visit(parent);
    std::size_t v = n;
    for (std::size_t k = 0; k < n; ++k) {
      Vertex& p = parent[k];
      ++p;
      if (p == static_cast<Vertex>(k)) ++p;
      if (p < static_cast<Vertex>(n)) {
        v = k;
        break;
      }
      p = -1;
    }
    if (v == n) return;
  }
}

}  // namespace

void for_each_tree(const LabelsPtr& labels, const std::function<void(const RootedTree&)>& visit) {
  for_each_parent_map(labels->size(), true,
                      [&](const std::vector<Vertex>& p) { visit(RootedTree(labels, p)); });
}

std::vector<RootedTree> enumerate_trees(const std::vector<std::string>& labels) {
  std::vector<RootedTree> out;
  for_each_tree(make_labels(labels), [&](const RootedTree& t) { out.push_back(t); });
  return out;
}

void for_each_forest(const LabelsPtr& labels, const std::function<void(const Forest&)>& visit) {
  for_each_parent_map(labels->size(), false,
                      [&](const std::vector<Vertex>& p) { visit(Forest(labels, p)); });
}

std::vector<Forest> enumerate_forests(const LabelsPtr& labels) {
  std::vector<Forest> out;
  for_each_forest(labels, [&](const Forest& f) { out.push_back(f); });
  return out;
}

std::vector<Forest> enumerate_forests(const std::vector<std::string>& labels) {
  return enumerate_forests(make_labels(labels));
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (k < 26) {
      out.emplace_back(1, static_cast<char>('a' + k));
    } else {
      out.push_back("v" + std::to_string(k));
    }
  }
  return out;
}

}  // namespace treearr
