#ifndef TREEARR_TREECORE_HPP
#define TREEARR_TREECORE_HPP

// Labeled rooted trees and forests viewed as posets.
//
// Vertices are the indices of a LabelTable, which keeps labels sorted so that
// vertex order and label order agree. A forest is a parent map; a rooted tree
// is a forest with exactly one root.

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace treearr {

using Vertex = int;

/// Raised on malformed tree or forest text; carries the byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class LabelTable {
 public:
  /// Sorts the labels; throws std::invalid_argument on duplicates or
  /// non-alphanumeric labels.
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool contains(const std::string& label) const { return index_.count(label) != 0; }
  /// Throws std::out_of_range for unknown labels.
  Vertex index(const std::string& label) const;

  friend bool operator==(const LabelTable& a, const LabelTable& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex> index_;
};

using LabelsPtr = std::shared_ptr<const LabelTable>;

LabelsPtr make_labels(std::vector<std::string> labels);

/// Blocks sorted internally and among themselves.
using Partition = std::vector<std::vector<Vertex>>;

class Forest {
 public:
  /// parent[v] < 0 marks a root. Throws std::invalid_argument on cycles or
  /// size mismatch.
  Forest(LabelsPtr labels, std::vector<Vertex> parent);

  /// The forest made only of roots.
  static Forest roots_only(LabelsPtr labels);

  const LabelsPtr& labels() const { return labels_; }
  std::size_t size() const { return parent_.size(); }
  const std::vector<Vertex>& parents() const { return parent_; }
  std::optional<Vertex> parent(Vertex v) const;
  bool is_root(Vertex v) const { return parent_.at(static_cast<std::size_t>(v)) < 0; }

  std::vector<Vertex> roots() const;
  /// Non-root vertices, ascending.
  std::vector<Vertex> nodes() const;
  std::size_t node_count() const;
  std::vector<Vertex> children(Vertex v) const;
  Vertex root_of(Vertex v) const;
  /// Number of edges from the root of v's component.
  std::size_t depth(Vertex v) const;
  /// i lies on the path from j to its root (reflexive).
  bool leq(Vertex i, Vertex j) const;
  bool less(Vertex i, Vertex j) const { return i != j && leq(i, j); }
  /// Blocks are the components.
  Partition partition() const;

  Vertex vertex(const std::string& label) const { return labels_->index(label); }
  const std::string& label(Vertex v) const { return labels_->label(v); }

  /// Canonical text: trees ordered by root label, children by label.
  std::string to_string() const;

  friend bool operator==(const Forest& a, const Forest& b);
  friend bool operator<(const Forest& a, const Forest& b) { return a.parent_ < b.parent_; }

 protected:
  void check_vertex(Vertex v) const;

 private:
  LabelsPtr labels_;
  std::vector<Vertex> parent_;
};

class RootedTree : public Forest {
 public:
  /// Throws std::invalid_argument unless there is exactly one root.
  RootedTree(LabelsPtr labels, std::vector<Vertex> parent);
  explicit RootedTree(const Forest& forest);

  Vertex root() const { return root_; }

 private:
  Vertex root_;
};

RootedTree parse_tree(const std::string& text);
Forest parse_forest(const std::string& text);
/// Parses against an existing label table; the text must use exactly its labels.
Forest parse_forest(const std::string& text, const LabelsPtr& labels);

/// Throws std::out_of_range for an unknown vertex.
std::size_t depth(const RootedTree& t, Vertex v);
bool leq(const Forest& f, Vertex i, Vertex j);

/// The order ⊆: the partition of f1 refines that of f2 and every tree of f1
/// carries the order induced by f2. Throws std::invalid_argument on
/// mismatched label sets.
bool is_subforest(const Forest& f1, const Forest& f2);

/// The order ⪯: every edge i <- j of f1 satisfies i <= j in f2.
bool precedes(const Forest& f1, const Forest& f2);

/// Grafts the root of t onto a new root labeled `label`.
RootedTree graft_root(const RootedTree& t, const std::string& label);

/// Root plus one root subtree, for each subtree, on its own label set.
std::vector<RootedTree> root_decompose(const RootedTree& t);

/// Restriction of t to the vertices in `keep` with the induced order; throws
/// unless the result has a single root. Uses a label table of just those labels.
RootedTree induced_subtree(const RootedTree& t, const std::vector<Vertex>& keep);

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;  // i < j, sorted

  bool adjacent(Vertex i, Vertex j) const;
};

/// Edge {i, j} for every strict comparable pair.
Graph comparability_graph(const RootedTree& t);

/// Removes the vertices of `order` from last to first, requiring each to be
/// simplicial when removed. Throws std::invalid_argument unless `order` is a
/// permutation of the vertices.
bool check_chordal_peo(const Graph& g, const std::vector<Vertex>& order);
bool check_chordal_peo(const RootedTree& t, const std::vector<Vertex>& order);

/// Calls visit for every linear extension of the tree order (root first).
void for_each_linear_extension(const RootedTree& t,
                               const std::function<void(const std::vector<Vertex>&)>& visit);

/// Every rooted tree on the labels exactly once (n^(n-1) of them).
void for_each_tree(const LabelsPtr& labels, const std::function<void(const RootedTree&)>& visit);
std::vector<RootedTree> enumerate_trees(const std::vector<std::string>& labels);

/// Every rooted forest on the labels exactly once ((n+1)^(n-1) of them).
void for_each_forest(const LabelsPtr& labels, const std::function<void(const Forest&)>& visit);
std::vector<Forest> enumerate_forests(const std::vector<std::string>& labels);
std::vector<Forest> enumerate_forests(const LabelsPtr& labels);

/// Labels "a", "b", ... for sweeps.
std::vector<std::string> default_labels(std::size_t n);

}  // namespace treearr

#endif  // TREEARR_TREECORE_HPP
