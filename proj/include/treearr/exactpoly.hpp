#ifndef TREEARR_EXACTPOLY_HPP
#define TREEARR_EXACTPOLY_HPP

// Exact polynomial arithmetic over the integers.
//
// Polynomials are sparse maps from monomials to arbitrary-precision integer
// coefficients, kept in graded lexicographic order (x_0 > x_1 > ...).
// Products and quotients of linear differences x_i - x_j are kept factored
// so that rational functions with hyperplane poles can be handled without
// expanding denominators.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treearr {

using Integer = mpz_class;
using Rational = mpq_class;

/// Maps a variable index to the name printed after `x_`.
using VariableNamer = std::function<std::string(int)>;

/// Names variables by their decimal index.
std::string index_name(int var);

class Monomial {
 public:
  Monomial() = default;
  /// Builds from (variable, exponent) pairs; zero exponents are dropped and
  /// repeated variables are merged.
  explicit Monomial(std::vector<std::pair<int, unsigned>> powers);

  static Monomial variable(int var, unsigned exponent = 1);

  const std::vector<std::pair<int, unsigned>>& powers() const { return powers_; }
  unsigned degree() const { return degree_; }
  unsigned degree_in(int var) const;
  bool is_one() const { return powers_.empty(); }

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires a.divides(b).
  friend Monomial quotient(const Monomial& b, const Monomial& a);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<int, unsigned>> powers_;  // sorted by variable
  unsigned degree_ = 0;
};

/// Graded lexicographic comparison; returns true when a > b so that maps keyed
/// with this comparator list the leading term first.
struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, GrlexDescending>;

  Polynomial() = default;
  Polynomial(long c);  // NOLINT: constants convert implicitly
  Polynomial(const Integer& c);  // NOLINT

  static Polynomial variable(int var);
  /// x_plus - x_minus.
  static Polynomial difference(int plus, int minus);
  static Polynomial term(const Integer& coeff, const Monomial& mono);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading (grlex-largest) term; requires a nonzero polynomial.
  const std::pair<const Monomial, Integer>& leading_term() const;

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(int var) const;
  bool is_homogeneous() const;
  std::vector<int> variables() const;

  Polynomial derivative(int var) const;

  /// Exact value at a point; throws std::invalid_argument when a variable of
  /// the polynomial is unassigned.
  Rational evaluate(const std::map<int, Rational>& point) const;
  /// Value at a dense point indexed by variable.
  Rational evaluate(std::span<const Rational> point) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string(const VariableNamer& name = index_name) const;

 private:
  void add_term(const Monomial& mono, const Integer& coeff);
  TermMap terms_;
};

/// Quotient q with p = d * q, or nullopt when d does not divide p exactly.
/// Throws std::invalid_argument when d is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

/// The linear form x_plus - x_minus.
struct LinearDifference {
  int plus = 0;
  int minus = 1;

  LinearDifference() = default;
  LinearDifference(int p, int m);

  /// Orientation with plus < minus; the flag reports whether it flipped.
  std::pair<LinearDifference, bool> oriented() const;
  Polynomial to_polynomial() const { return Polynomial::difference(plus, minus); }
  /// Partial derivative with respect to x_var: +1, -1 or 0.
  int derivative(int var) const { return var == plus ? 1 : (var == minus ? -1 : 0); }
  bool involves(int var) const { return var == plus || var == minus; }

  friend auto operator<=>(const LinearDifference&, const LinearDifference&) = default;
  friend bool operator==(const LinearDifference&, const LinearDifference&) = default;

  std::string to_string(const VariableNamer& name = index_name) const;
};

/// sign * prod(numerator) / prod(denominator), factors linear differences.
/// Always stored canonically: factors oriented with plus < minus, sorted,
/// no factor shared by numerator and denominator, and sign 0 means zero.
class FactoredRational {
 public:
  FactoredRational() : sign_(1) {}
  FactoredRational(int sign, std::vector<LinearDifference> numerator,
                   std::vector<LinearDifference> denominator);

  static FactoredRational zero();
  static FactoredRational one() { return {}; }

  int sign() const { return sign_; }
  bool is_zero() const { return sign_ == 0; }
  const std::vector<LinearDifference>& numerator() const { return numerator_; }
  const std::vector<LinearDifference>& denominator() const { return denominator_; }
  /// Degree of numerator minus degree of denominator.
  int degree() const;

  FactoredRational operator-() const;
  FactoredRational reciprocal() const;
  friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
  friend bool operator==(const FactoredRational&, const FactoredRational&) = default;

  /// Partial derivative as a sum of factored rationals (logarithmic
  /// differentiation of the factor lists).
  std::vector<FactoredRational> derivative(int var) const;

  /// sign * prod(numerator) expanded; throws std::invalid_argument when the
  /// denominator is not empty.
  Polynomial to_polynomial() const;
  Polynomial numerator_polynomial() const;

  /// Throws std::domain_error when a denominator factor vanishes.
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string(const VariableNamer& name = index_name) const;

 private:
  void canonicalize();

  int sign_;
  std::vector<LinearDifference> numerator_;
  std::vector<LinearDifference> denominator_;
};

FactoredRational canonical(const FactoredRational& f);

/// Expands a product of linear differences.
Polynomial expand_product(std::span<const LinearDifference> factors);

/// Multiset operations on sorted factor lists.
std::vector<LinearDifference> multiset_union_max(std::span<const LinearDifference> a,
                                                 std::span<const LinearDifference> b);
std::vector<LinearDifference> multiset_difference(std::span<const LinearDifference> a,
                                                  std::span<const LinearDifference> b);
bool multiset_includes(std::span<const LinearDifference> big,
                       std::span<const LinearDifference> small);

/// A finite sum of terms numerator_t / prod(denominator_t) whose denominators
/// are products of linear differences. Combining brings everything over the
/// least common denominator and cancels every linear factor of the
/// denominator that divides the numerator, which yields the unique reduced
/// form since distinct linear differences are pairwise coprime.
class LinearFractionSum {
 public:
  struct Term {
    Polynomial numerator;
    std::vector<LinearDifference> denominator;  // oriented, sorted
  };
  struct Reduced {
    Polynomial numerator;
    std::vector<LinearDifference> denominator;  // oriented, sorted
  };

  void add(const FactoredRational& f);
  void add(const FactoredRational& f, const Polynomial& factor);
  void add(Polynomial numerator, std::vector<LinearDifference> denominator);

  const std::vector<Term>& terms() const { return terms_; }

  /// Numerator over the common denominator, before cancellation.
  Reduced combine() const;
  Reduced reduce() const;

  /// Per-variable degree bound of combine().numerator, valid without
  /// expanding anything.
  std::map<int, unsigned> numerator_degree_bounds() const;

  Rational evaluate(std::span<const Rational> point) const;

 private:
  std::vector<Term> terms_;
};

/// Deterministic evaluation grid for certifying polynomial identities. Each
/// variable ranges over its own block of consecutive integers; blocks are
/// disjoint so every grid point has pairwise distinct coordinates. A
/// polynomial whose degree in each variable v is at most bound[v] and which
/// vanishes on the whole grid is identically zero.
class IdentityGrid {
 public:
  IdentityGrid(std::size_t dimension, const std::map<int, unsigned>& degree_bounds,
               long offset = 1);

  std::size_t point_count() const;
  /// Calls visit(point) for every grid point; stops early and returns false
  /// as soon as visit returns false.
  bool for_each(const std::function<bool(std::span<const Rational>)>& visit) const;

 private:
  std::vector<std::vector<Rational>> axes_;
};

/// Checks that sum == target as rational functions by exact grid evaluation.
bool grid_identity(const LinearFractionSum& sum, const Rational& target, std::size_t dimension,
                   long offset = 1);

// Exact linear algebra.

/// Determinant by fraction-free (Bareiss) elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);
/// Rank over the rationals.
std::size_t rational_rank(std::vector<std::vector<Rational>> rows);
/// Basis of the right kernel {v : m v = 0} over the rationals; `columns` is
/// the number of unknowns.
std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   std::size_t columns);

/// Dense integer polynomial in one variable, coefficient k multiplies y^k.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<Integer> coeffs);

  static UnivariatePolynomial monomial(const Integer& c, unsigned degree);
  /// y - root.
  static UnivariatePolynomial linear_root(long root);

  const std::vector<Integer>& coefficients() const { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer evaluate(const Integer& y) const;

  UnivariatePolynomial& operator+=(const UnivariatePolynomial& other);
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b);
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Integer polynomial in y and z keyed by (degree in y, degree in z).
class BivariatePolynomial {
 public:
  using TermMap = std::map<std::pair<unsigned, unsigned>, Integer>;

  BivariatePolynomial() = default;
  BivariatePolynomial(long c);  // NOLINT
  static BivariatePolynomial y();
  static BivariatePolynomial z();
  static BivariatePolynomial monomial(const Integer& c, unsigned ydeg, unsigned zdeg);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Integer evaluate(const Integer& y, const Integer& z) const;
  /// P(y, 1 + z).
  BivariatePolynomial shift_z() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& other);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  std::string to_string() const;

 private:
  void add_term(std::pair<unsigned, unsigned> key, const Integer& c);
  TermMap terms_;
};

}  // namespace treearr

#endif  // TREEARR_EXACTPOLY_HPP
