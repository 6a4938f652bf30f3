#ifndef TREEARR_ARRANGEMENT_HPP
#define TREEARR_ARRANGEMENT_HPP

// The hyperplane arrangement of a rooted tree: one hyperplane x_i = x_j per
// strict comparable pair i < j, its logarithmic vector fields and 1-forms,
// and the exact certificates around them.

#include <cstdint>
#include <map>
#include <vector>

#include "treearr/certificate.hpp"
#include "treearr/exactpoly.hpp"
#include "treearr/treecore.hpp"

namespace treearr {

struct Arrangement {
  RootedTree tree;
  /// (i, j) with i < j in the tree, stored as x_i - x_j, sorted by (i, j).
  std::vector<LinearDifference> hyperplanes;

  /// Names vertices by label for rendering.
  VariableNamer namer() const;
};

/// Coefficient of d/dx_j at index j.
struct VectorField {
  std::vector<Polynomial> coeffs;
};

/// Coefficient of dx_j at index j.
struct OneForm {
  std::vector<FactoredRational> coeffs;
};

/// Coefficient of dx_l ^ dx_j for l < j.
struct TwoForm {
  std::map<std::pair<Vertex, Vertex>, LinearFractionSum> coeffs;
};

Arrangement build_arrangement(const RootedTree& t);

/// Q_T, the product of x_i - x_j over all hyperplanes.
FactoredRational defining_form(const Arrangement& arr);

/// theta_i(x_j) = prod_{k < i} (x_k - x_j) when i <= j, else 0.
VectorField theta(const Arrangement& arr, Vertex i);

/// Every hyperplane x_j - x_k divides v(x_j) - v(x_k).
bool is_logarithmic(const Arrangement& arr, const VectorField& v);

/// Saito determinant certificate. The triangular route multiplies the
/// diagonal of [theta_i(x_j)] symbolically under the lexicographically
/// smallest linear extension; the grid route evaluates the determinant by
/// fraction-free elimination on an identity grid. The witness records the
/// unit c with det = c * Q_T.
Certificate saito_check(const Arrangement& arr, long grid_offset = 1);

/// Depths of the vertices, ascending.
std::vector<std::size_t> exponents(const RootedTree& t);

/// omega_i = sum_{j <= i} prod_{k <= i, k != j} 1/(x_k - x_j) dx_j.
OneForm omega(const Arrangement& arr, Vertex i);

/// Exterior derivative, coefficients kept as sums of factored rationals.
TwoForm exterior_derivative(const OneForm& w);

/// Q_T w and Q_T dw are polynomial.
bool is_logarithmic_form(const Arrangement& arr, const OneForm& w);
bool omega_is_logarithmic(const Arrangement& arr, Vertex i);

/// <w, v> = sum_j w(dx_j) v(x_j).
LinearFractionSum pairing(const OneForm& w, const VectorField& v);

enum class IdentityStrategy { Automatic, Symbolic, Grid };

/// Certifies <omega_i, theta_i'> = delta_{i,i'} for all pairs. Automatic
/// clears denominators symbolically for n <= 5 and uses grid evaluation
/// beyond.
Certificate duality_check(const Arrangement& arr,
                          IdentityStrategy strategy = IdentityStrategy::Automatic,
                          long grid_offset = 1);

/// prod_i (y - depth(i)).
UnivariatePolynomial char_poly_product(const RootedTree& t);

/// prod_i (depth(i) + 1).
Integer chamber_count(const RootedTree& t);

/// Exhaustive count over all 2^|E| orientations.
std::uint64_t count_acyclic_orientations(const Graph& g);

/// Kernel of the formal span of hyperplanes onto linear forms against the
/// span of the elementary chain relations a_ij + a_jk - a_ik.
Certificate relation_span_check(const Arrangement& arr);

}  // namespace treearr

#endif  // TREEARR_ARRANGEMENT_HPP
