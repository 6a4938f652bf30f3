#ifndef TREEARR_COALG_HPP
#define TREEARR_COALG_HPP

// The graded coalgebra on oriented forests, its dual algebra, and the
// presented algebra on generators Omega_{i,j}.
//
// Orientation convention: a forest F stands for the oriented forest whose
// orientation is the wedge of its nodes in ascending label order followed by
// the auxiliary element R_F. Coproduct signs are shuffle parities of the node
// blocks against that order; tensors and the dual pairing follow the Koszul
// rule with degree = number of nodes.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "treearr/certificate.hpp"
#include "treearr/treecore.hpp"

namespace treearr {

using Coefficient = std::int64_t;

/// Integer combination of keys with no zero coefficients stored.
template <class Key, class Tag>
class Combination {
 public:
  using TermMap = std::map<Key, Coefficient>;

  Combination() = default;
  explicit Combination(const Key& key, Coefficient c = 1) { add(key, c); }

  void add(const Key& key, Coefficient c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Coefficient coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? 0 : it->second;
  }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  friend Combination operator*(Coefficient s, const Combination& x) {
    Combination out;
    for (const auto& [k, c] : x.terms_) out.add(k, s * c);
    return out;
  }
  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  TermMap terms_;
};

struct CoalgebraTag {};
struct DualTag {};
struct TensorTag {};

using CoalgebraElement = Combination<Forest, CoalgebraTag>;
using DualElement = Combination<Forest, DualTag>;
using TensorElement = Combination<std::vector<Forest>, TensorTag>;

/// Edge i <- j, i.e. the generator Omega_{i,j}.
struct Generator {
  Vertex parent;
  Vertex child;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

struct AlgebraWord {
  LabelsPtr labels;
  std::vector<Generator> factors;
};

/// A monomial in normal form: sign * m_F, or zero.
struct NormalForm {
  int sign = 0;
  std::optional<Forest> forest;

  bool is_zero() const { return sign == 0; }
};

/// Parity (+1 or -1) of the permutation sorting the concatenation of the
/// blocks, each ascending, into ascending order.
int shuffle_sign(const std::vector<std::vector<Vertex>>& blocks);

/// All F' ⊆ f with nodes(F') = nodes. Throws std::invalid_argument unless
/// nodes is a subset of the nodes of f.
std::vector<Forest> gamma(const Forest& f, const std::vector<Vertex>& nodes);

/// Degree = number of nodes.
std::size_t degree(const Forest& f);

TensorElement coproduct(const Forest& f);
TensorElement coproduct(const CoalgebraElement& x);

/// Applies the coproduct to one tensor slot.
TensorElement coproduct_at(const TensorElement& x, std::size_t slot);

/// (Δ ⊗ id ⊗ ...) applied k - 1 times; k = 1 gives x as one-slot tensors.
TensorElement iterated_coproduct(const CoalgebraElement& x, std::size_t k);

/// Direct k-block formula: sum over ordered splits of the nodes into k
/// blocks, product of gamma sets, shuffle sign.
TensorElement split_coproduct(const Forest& f, std::size_t k);

/// Koszul flip of a two-slot tensor: F1 ⊗ F2 -> (-1)^{deg F1 deg F2} F2 ⊗ F1.
TensorElement graded_flip(const TensorElement& x);

/// Coefficient of the all-roots forest.
Coefficient counit(const CoalgebraElement& x);

/// (ε ⊗ id) and (id ⊗ ε) on two-slot tensors.
CoalgebraElement counit_left(const TensorElement& x);
CoalgebraElement counit_right(const TensorElement& x);

/// Product in the dual algebra: <a b, G> = <a ⊗ b, Δ G> with the Koszul
/// pairing sign (-1)^{deg b deg F1} on F1 ⊗ F2.
DualElement dual_multiply(const DualElement& a, const DualElement& b);

/// F*_{i,j}: the dual of the one-node forest with edge i <- j.
DualElement dual_generator(const LabelsPtr& labels, Generator g);

/// Normal form of a word modulo the fork, loop and square relations.
NormalForm algebra_reduce(const AlgebraWord& w);

/// The canonical monomial m_F: edges sorted by child label.
AlgebraWord monomial_word(const Forest& f);

/// Product of the dual generators in word order.
DualElement rho(const AlgebraWord& w);

/// {G : f ⪯ G and nodes(G) = nodes(f)}.
std::set<Forest> imagemono_predicted(const Forest& f);

/// Checks rho(m_F) against the predicted support for every forest, the unit
/// coefficients, and that the transition matrix is unimodular.
Certificate iso_check(const std::vector<std::string>& labels);

/// Parses "a-b,c-d" into generators Omega_{a,b} Omega_{c,d}.
AlgebraWord parse_word(const std::string& text, const LabelsPtr& labels);

std::string to_string(const CoalgebraElement& x);
std::string to_string(const DualElement& x);
std::string to_string(const TensorElement& x);
std::string to_string(const AlgebraWord& w);
nlohmann::ordered_json to_json(const TensorElement& x);
nlohmann::ordered_json to_json(const DualElement& x);

}  // namespace treearr

#endif  // TREEARR_COALG_HPP
