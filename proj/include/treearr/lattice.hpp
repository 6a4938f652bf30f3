#ifndef TREEARR_LATTICE_HPP
#define TREEARR_LATTICE_HPP

// The intersection lattice of a tree arrangement, realized as the interval
// [0, T] of forests under the order ⊆.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treearr/exactpoly.hpp"
#include "treearr/treecore.hpp"

namespace treearr {

class Lattice {
 public:
  Lattice(RootedTree tree, std::vector<Forest> elements);

  const RootedTree& tree() const { return tree_; }
  const std::vector<Forest>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Number of nodes of each element.
  const std::vector<std::size_t>& rank() const { return rank_; }
  /// Cover relations (lower, upper) as element indices.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse() const { return hasse_; }

  /// Throws std::invalid_argument when f is not an element.
  std::size_t index_of(const Forest& f) const;
  bool contains(const Forest& f) const;
  /// Order between elements: refinement of partitions.
  bool leq(std::size_t a, std::size_t b) const;

 private:
  RootedTree tree_;
  std::vector<Forest> elements_;
  std::vector<Partition> partitions_;
  std::vector<std::size_t> rank_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
};

/// Elements are the partitions of the vertices whose blocks each have a
/// unique minimum for the tree order, carrying the induced order. Sorted by
/// rank, then canonical text; element 0 is the all-roots forest and the last
/// is the tree itself.
Lattice build_lattice(const RootedTree& t);

/// The forest on the block structure of `blocks` induced from t.
Forest induced_forest(const RootedTree& t, const Partition& blocks);

/// Vertex partitions of the intersections of every subset of hyperplanes.
std::set<Partition> brute_force_flats(const RootedTree& t);

/// mu(0, a) for every element.
std::vector<Integer> mobius(const Lattice& lat);

/// sum_a mu(a) y^(n - rank(a)).
UnivariatePolynomial char_poly_mobius(const Lattice& lat);

/// Least upper bound. Throws std::invalid_argument for non-elements.
Forest supremum(const Lattice& lat, const Forest& f1, const Forest& f2);

/// sum_F y^crk(F) z^stump(F) over the elements.
BivariatePolynomial cardinality_poly(const Lattice& lat);

/// The same polynomial by peeling a valence-one root and splitting at a
/// root of higher valence.
BivariatePolynomial cardinality_poly_recursive(const RootedTree& t);

std::string hasse_dot(const Lattice& lat);
nlohmann::ordered_json lattice_json(const Lattice& lat);

}  // namespace treearr

#endif  // TREEARR_LATTICE_HPP
