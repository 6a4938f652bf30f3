#include "treearr/exactpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace treearr {

std::string index_name(int var) { return std::to_string(var); }

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::pair<int, unsigned>> powers) {
  std::sort(powers.begin(), powers.end());
  for (const auto& [var, exp] : powers) {
    if (var < 0) throw std::invalid_argument("negative variable index");
    if (exp == 0) continue;
    if (!powers_.empty() && powers_.back().first == var) {
      powers_.back().second += exp;
    } else {
      powers_.emplace_back(var, exp);
    }
    degree_ += exp;
  }
}

Monomial Monomial::variable(int var, unsigned exponent) { return Monomial({{var, exponent}}); }

unsigned Monomial::degree_in(int var) const {
  for (const auto& [v, e] : powers_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  auto it = other.powers_.begin();
  for (const auto& [v, e] : powers_) {
    while (it != other.powers_.end() && it->first < v) ++it;
    if (it == other.powers_.end() || it->first != v || it->second < e) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.powers_.begin();
  auto j = b.powers_.begin();
  while (i != a.powers_.end() || j != b.powers_.end()) {
    if (j == b.powers_.end() || (i != a.powers_.end() && i->first < j->first)) {
      out.powers_.push_back(*i++);
    } else if (i == a.powers_.end() || j->first < i->first) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  Monomial out;
  auto it = a.powers_.begin();
  for (const auto& [v, e] : b.powers_) {
    unsigned sub = 0;
    if (it != a.powers_.end() && it->first == v) {
      sub = it->second;
      ++it;
    }
    if (e > sub) out.powers_.emplace_back(v, e - sub);
  }
  out.degree_ = b.degree_ - a.degree_;
  return out;
}

bool GrlexDescending::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first) return pa[i].first < pb[i].first;
    if (pa[i].second != pb[i].second) return pa[i].second > pb[i].second;
  }
  return i < pa.size() && i >= pb.size();
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long c) {
  if (c != 0) terms_.emplace(Monomial(), Integer(c));
}

Polynomial::Polynomial(const Integer& c) {
  if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial Polynomial::variable(int var) { return term(1, Monomial::variable(var)); }

Polynomial Polynomial::difference(int plus, int minus) {
  return variable(plus) - variable(minus);
}

Polynomial Polynomial::term(const Integer& coeff, const Monomial& mono) {
  Polynomial p;
  if (coeff != 0) p.terms_.emplace(mono, coeff);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

const std::pair<const Monomial, Integer>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.begin();
}

int Polynomial::total_degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

unsigned Polynomial::degree_in(int var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(var));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<int> Polynomial::variables() const {
  std::vector<int> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.powers()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.degree_in(var);
    if (e == 0) continue;
    out.add_term(quotient(m, Monomial::variable(var)), c * e);
  }
  return out;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.powers()) {
      auto it = point.find(v);
      if (it == point.end()) {
        throw std::invalid_argument("unassigned variable x_" + std::to_string(v));
      }
      for (unsigned k = 0; k < e; ++k) value *= it->second;
    }
    sum += value;
  }
  return sum;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m.powers()) {
      if (static_cast<std::size_t>(v) >= point.size()) {
        throw std::invalid_argument("unassigned variable x_" + std::to_string(v));
      }
      for (unsigned k = 0; k < e; ++k) value *= point[v];
    }
    sum += value;
  }
  return sum;
}

void Polynomial::add_term(const Monomial& mono, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

namespace {

std::string monomial_string(const Monomial& m, const VariableNamer& name) {
  std::string out;
  for (const auto& [v, e] : m.powers()) {
    if (!out.empty()) out += '*';
    out += "x_" + name(v);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string(const VariableNamer& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += monomial_string(m, name);
    } else {
      out += mag.get_str() + '*' + monomial_string(m, name);
    }
  }
  return out;
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  const auto& [lead_mono, lead_coeff] = d.leading_term();
  Polynomial rest = p;
  Polynomial quot;
  while (!rest.is_zero()) {
    const auto& [mono, coeff] = rest.leading_term();
    if (!lead_mono.divides(mono) || !mpz_divisible_p(coeff.get_mpz_t(), lead_coeff.get_mpz_t())) {
      return std::nullopt;
    }
    Polynomial step = Polynomial::term(Integer(coeff / lead_coeff), quotient(mono, lead_mono));
    rest -= step * d;
    quot += step;
  }
  return quot;
}

// -------------------------------------------------------- LinearDifference

LinearDifference::LinearDifference(int p, int m) : plus(p), minus(m) {
  if (p == m) throw std::invalid_argument("linear difference of a variable with itself");
  if (p < 0 || m < 0) throw std::invalid_argument("negative variable index");
}

std::pair<LinearDifference, bool> LinearDifference::oriented() const {
  if (plus < minus) return {*this, false};
  return {LinearDifference(minus, plus), true};
}

std::string LinearDifference::to_string(const VariableNamer& name) const {
  return "x_" + name(plus) + " - x_" + name(minus);
}

// -------------------------------------------------------- FactoredRational

FactoredRational::FactoredRational(int sign, std::vector<LinearDifference> numerator,
                                   std::vector<LinearDifference> denominator)
    : sign_(sign), numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (sign_ < -1 || sign_ > 1) throw std::invalid_argument("sign must be -1, 0 or 1");
  canonicalize();
}

FactoredRational FactoredRational::zero() { return FactoredRational(0, {}, {}); }

void FactoredRational::canonicalize() {
  if (sign_ == 0) {
    numerator_.clear();
    denominator_.clear();
    return;
  }
  for (auto* list : {&numerator_, &denominator_}) {
    for (auto& f : *list) {
      auto [o, flipped] = f.oriented();
      f = o;
      if (flipped) sign_ = -sign_;
    }
    std::sort(list->begin(), list->end());
  }
  std::vector<LinearDifference> num;
  std::vector<LinearDifference> den;
  auto i = numerator_.begin();
  auto j = denominator_.begin();
  while (i != numerator_.end() && j != denominator_.end()) {
    if (*i < *j) {
      num.push_back(*i++);
    } else if (*j < *i) {
      den.push_back(*j++);
    } else {
      ++i;
      ++j;
    }
  }
  num.insert(num.end(), i, numerator_.end());
  den.insert(den.end(), j, denominator_.end());
  numerator_ = std::move(num);
  denominator_ = std::move(den);
}

int FactoredRational::degree() const {
  return static_cast<int>(numerator_.size()) - static_cast<int>(denominator_.size());
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational out = *this;
  out.sign_ = -sign_;
  return out;
}

FactoredRational FactoredRational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return FactoredRational(sign_, denominator_, numerator_);
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b) {
  if (a.is_zero() || b.is_zero()) return FactoredRational::zero();
  auto num = a.numerator_;
  num.insert(num.end(), b.numerator_.begin(), b.numerator_.end());
  auto den = a.denominator_;
  den.insert(den.end(), b.denominator_.begin(), b.denominator_.end());
  return FactoredRational(a.sign_ * b.sign_, std::move(num), std::move(den));
}

std::vector<FactoredRational> FactoredRational::derivative(int var) const {
  std::vector<FactoredRational> out;
  if (is_zero()) return out;
  for (std::size_t k = 0; k < numerator_.size(); ++k) {
    const int d = numerator_[k].derivative(var);
    if (d == 0) continue;
    auto num = numerator_;
    num.erase(num.begin() + static_cast<std::ptrdiff_t>(k));
    out.emplace_back(sign_ * d, std::move(num), denominator_);
  }
  for (const auto& f : denominator_) {
    const int d = f.derivative(var);
    if (d == 0) continue;
    auto den = denominator_;
    den.push_back(f);
    out.emplace_back(-sign_ * d, numerator_, std::move(den));
  }
  return out;
}

Polynomial FactoredRational::numerator_polynomial() const {
  if (is_zero()) return {};
  Polynomial p = expand_product(numerator_);
  return sign_ < 0 ? -p : p;
}

Polynomial FactoredRational::to_polynomial() const {
  if (!denominator_.empty()) {
    throw std::invalid_argument("factored rational has a nonempty denominator");
  }
  return numerator_polynomial();
}

Rational FactoredRational::evaluate(std::span<const Rational> point) const {
  if (is_zero()) return 0;
  Rational value = sign_;
  for (const auto& f : numerator_) value *= point[f.plus] - point[f.minus];
  for (const auto& f : denominator_) {
    Rational d = point[f.plus] - point[f.minus];
    if (d == 0) throw std::domain_error("evaluation on a pole");
    value /= d;
  }
  return value;
}

namespace {

std::string factor_list_string(const std::vector<LinearDifference>& factors,
                               const VariableNamer& name) {
  std::string out;
  for (std::size_t k = 0; k < factors.size();) {
    std::size_t run = 1;
    while (k + run < factors.size() && factors[k + run] == factors[k]) ++run;
    out += '(' + factors[k].to_string(name) + ')';
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out;
}

}  // namespace

std::string FactoredRational::to_string(const VariableNamer& name) const {
  if (is_zero()) return "0";
  std::string out = sign_ < 0 ? "-" : "";
  out += numerator_.empty() ? "1" : factor_list_string(numerator_, name);
  if (!denominator_.empty()) {
    const bool wrap = denominator_.size() > 1;
    out += wrap ? "/(" : "/";
    out += factor_list_string(denominator_, name);
    if (wrap) out += ')';
  }
  return out;
}

FactoredRational canonical(const FactoredRational& f) {
  return FactoredRational(f.sign(), f.numerator(), f.denominator());
}

Polynomial expand_product(std::span<const LinearDifference> factors) {
  Polynomial p = 1;
  for (const auto& f : factors) p *= f.to_polynomial();
  return p;
}

std::vector<LinearDifference> multiset_union_max(std::span<const LinearDifference> a,
                                                 std::span<const LinearDifference> b) {
  std::vector<LinearDifference> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<LinearDifference> multiset_difference(std::span<const LinearDifference> a,
                                                  std::span<const LinearDifference> b) {
  std::vector<LinearDifference> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool multiset_includes(std::span<const LinearDifference> big,
                       std::span<const LinearDifference> small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// ------------------------------------------------------- LinearFractionSum

namespace {

std::vector<LinearDifference> orient_all(std::vector<LinearDifference> factors, bool& flip) {
  for (auto& f : factors) {
    auto [o, flipped] = f.oriented();
    f = o;
    if (flipped) flip = !flip;
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

}  // namespace

void LinearFractionSum::add(const FactoredRational& f) { add(f, Polynomial(1)); }

void LinearFractionSum::add(const FactoredRational& f, const Polynomial& factor) {
  if (f.is_zero() || factor.is_zero()) return;
  terms_.push_back({f.numerator_polynomial() * factor, f.denominator()});
}

void LinearFractionSum::add(Polynomial numerator, std::vector<LinearDifference> denominator) {
  if (numerator.is_zero()) return;
  bool flip = false;
  auto den = orient_all(std::move(denominator), flip);
  terms_.push_back({flip ? -numerator : std::move(numerator), std::move(den)});
}

LinearFractionSum::Reduced LinearFractionSum::combine() const {
  std::vector<LinearDifference> common;
  for (const auto& t : terms_) common = multiset_union_max(common, t.denominator);
  Polynomial numerator;
  for (const auto& t : terms_) {
    numerator += t.numerator * expand_product(multiset_difference(common, t.denominator));
  }
  return {std::move(numerator), std::move(common)};
}

LinearFractionSum::Reduced LinearFractionSum::reduce() const {
  Reduced r = combine();
  if (r.numerator.is_zero()) {
    r.denominator.clear();
    return r;
  }
  bool progress = true;
  while (progress && !r.denominator.empty()) {
    progress = false;
    for (std::size_t k = 0; k < r.denominator.size(); ++k) {
      if (auto q = divide_exact(r.numerator, r.denominator[k].to_polynomial())) {
        r.numerator = std::move(*q);
        r.denominator.erase(r.denominator.begin() + static_cast<std::ptrdiff_t>(k));
        progress = true;
        break;
      }
    }
  }
  return r;
}

std::map<int, unsigned> LinearFractionSum::numerator_degree_bounds() const {
  std::vector<LinearDifference> common;
  for (const auto& t : terms_) common = multiset_union_max(common, t.denominator);
  std::map<int, unsigned> den_deg;
  for (const auto& f : common) {
    ++den_deg[f.plus];
    ++den_deg[f.minus];
  }
  std::map<int, unsigned> num_deg;
  for (const auto& t : terms_) {
    for (int v : t.numerator.variables()) {
      num_deg[v] = std::max(num_deg[v], t.numerator.degree_in(v));
    }
  }
  std::map<int, unsigned> bounds = den_deg;
  for (const auto& [v, d] : num_deg) bounds[v] += d;
  return bounds;
}

Rational LinearFractionSum::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational value = t.numerator.evaluate(point);
    for (const auto& f : t.denominator) {
      Rational d = point[f.plus] - point[f.minus];
      if (d == 0) throw std::domain_error("evaluation on a pole");
      value /= d;
    }
    sum += value;
  }
  return sum;
}

// ------------------------------------------------------------ IdentityGrid

IdentityGrid::IdentityGrid(std::size_t dimension, const std::map<int, unsigned>& degree_bounds,
                           long offset) {
  axes_.resize(dimension);
  long next = offset;
  for (std::size_t v = 0; v < dimension; ++v) {
    auto it = degree_bounds.find(static_cast<int>(v));
    const unsigned size = (it == degree_bounds.end() ? 0 : it->second) + 1;
    for (unsigned k = 0; k < size; ++k) axes_[v].emplace_back(next++);
  }
  for (const auto& [v, b] : degree_bounds) {
    if (v < 0 || static_cast<std::size_t>(v) >= dimension) {
      throw std::invalid_argument("degree bound for a variable outside the grid");
    }
  }
}

std::size_t IdentityGrid::point_count() const {
  std::size_t count = 1;
  for (const auto& axis : axes_) count *= axis.size();
  return count;
}

bool IdentityGrid::for_each(const std::function<bool(std::span<const Rational>)>& visit) const {
  std::vector<std::size_t> index(axes_.size(), 0);
  std::vector<Rational> point(axes_.size());
  for (std::size_t v = 0; v < axes_.size(); ++v) point[v] = axes_[v][0];
  while (true) {
    if (!visit(point)) return false;
    std::size_t v = 0;
    for (; v < axes_.size(); ++v) {
      if (++index[v] < axes_[v].size()) {
        point[v] = axes_[v][index[v]];
        break;
      }
      index[v] = 0;
      point[v] = axes_[v][0];
    }
    if (v == axes_.size()) return true;
  }
}

bool grid_identity(const LinearFractionSum& sum, const Rational& target, std::size_t dimension,
                   long offset) {
  IdentityGrid grid(dimension, sum.numerator_degree_bounds(), offset);
  return grid.for_each([&](std::span<const Rational> p) { return sum.evaluate(p) == target; });
}

// ------------------------------------------------------------ linear algebra

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Rational>>& rows, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < columns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < columns; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t columns = rows.front().size();
  return row_reduce(rows, columns).size();
}

std::vector<std::vector<Rational>> rational_kernel(std::vector<std::vector<Rational>> m,
                                                   std::size_t columns) {
  for (const auto& row : m) {
    if (row.size() != columns) throw std::invalid_argument("ragged matrix");
  }
  const auto pivots = row_reduce(m, columns);
  std::vector<bool> is_pivot(columns, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(columns, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// -------------------------------------------------- UnivariatePolynomial

UnivariatePolynomial::UnivariatePolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void UnivariatePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::monomial(const Integer& c, unsigned degree) {
  std::vector<Integer> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return UnivariatePolynomial(std::move(coeffs));
}

UnivariatePolynomial UnivariatePolynomial::linear_root(long root) {
  return UnivariatePolynomial({Integer(-root), Integer(1)});
}

Integer UnivariatePolynomial::evaluate(const Integer& y) const {
  Integer value = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * y + *it;
  return value;
}

UnivariatePolynomial& UnivariatePolynomial::operator+=(const UnivariatePolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

UnivariatePolynomial operator*(const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UnivariatePolynomial(std::move(out));
}

namespace {

void append_signed_term(std::string& out, const Integer& c, const std::string& mono) {
  const bool negative = c < 0;
  const Integer mag = abs(c);
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? " - " : " + ";
  }
  if (mono.empty()) {
    out += mag.get_str();
  } else if (mag == 1) {
    out += mono;
  } else {
    out += mag.get_str() + '*' + mono;
  }
}

std::string power_string(const std::string& var, unsigned e) {
  if (e == 0) return "";
  return e == 1 ? var : var + '^' + std::to_string(e);
}

}  // namespace

std::string UnivariatePolynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    append_signed_term(out, coeffs_[k], power_string(var, static_cast<unsigned>(k)));
  }
  return out;
}

// --------------------------------------------------- BivariatePolynomial

BivariatePolynomial::BivariatePolynomial(long c) {
  if (c != 0) terms_.emplace(std::pair<unsigned, unsigned>{0, 0}, Integer(c));
}

BivariatePolynomial BivariatePolynomial::y() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::z() { return monomial(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(const Integer& c, unsigned ydeg, unsigned zdeg) {
  BivariatePolynomial p;
  p.add_term({ydeg, zdeg}, c);
  return p;
}

void BivariatePolynomial::add_term(std::pair<unsigned, unsigned> key, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer BivariatePolynomial::evaluate(const Integer& y, const Integer& z) const {
  Integer sum = 0;
  for (const auto& [key, c] : terms_) {
    Integer yp;
    Integer zp;
    mpz_pow_ui(yp.get_mpz_t(), y.get_mpz_t(), key.first);
    mpz_pow_ui(zp.get_mpz_t(), z.get_mpz_t(), key.second);
    sum += c * yp * zp;
  }
  return sum;
}

BivariatePolynomial BivariatePolynomial::shift_z() const {
  BivariatePolynomial out;
  for (const auto& [key, c] : terms_) {
    // (1 + z)^k = sum binom(k, m) z^m
    Integer binom = 1;
    for (unsigned m = 0; m <= key.second; ++m) {
      out.add_term({key.first, m}, c * binom);
      binom = binom * (key.second - m) / (m + 1);
    }
  }
  return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& other) {
  for (const auto& [key, c] : other.terms_) add_term(key, c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      out.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    }
  }
  return out;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::pair<unsigned, unsigned>, Integer>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const unsigned da = a.first.first + a.first.second;
    const unsigned db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::string out;
  for (const auto& [key, c] : sorted) {
    std::string mono = power_string("y", key.first);
    const std::string zpart = power_string("z", key.second);
    if (!mono.empty() && !zpart.empty()) mono += '*';
    mono += zpart;
    append_signed_term(out, c, mono);
  }
  return out;
}

}  // namespace treearr
