#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "gk/liealg.hpp"

namespace gk {

using Mask = std::uint32_t;

inline int grade_of(Mask m) { return __builtin_popcount(m); }

/// Sparse sum of basis blades indexed by bitsets; zero coefficients are never stored.
/// The tag keeps exterior vectors, forms and Clifford elements apart.
template <class Tag>
class BladeSum {
 public:
  using Terms = std::map<Mask, Scalar>;

  BladeSum() = default;
  static BladeSum scalar(const Scalar& s) {
    BladeSum b;
    b.add(0, s);
    return b;
  }
  static BladeSum blade(Mask m, const Scalar& s = Scalar(1)) {
    BladeSum b;
    b.add(m, s);
    return b;
  }

  void add(Mask m, const Scalar& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, s);
      return;
    }
    it->second += s;
    if (it->second.is_zero()) terms_.erase(it);
  }
  void add_scaled(const BladeSum& o, const Scalar& s) {
    if (s.is_zero()) return;
    for (const auto& [m, c] : o.terms_) add(m, c * s);
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar() : it->second;
  }
  int max_grade() const {
    int g = -1;
    for (const auto& t : terms_) g = std::max(g, grade_of(t.first));
    return g;
  }
  int min_grade() const {
    int g = 1 << 20;
    for (const auto& t : terms_) g = std::min(g, grade_of(t.first));
    return terms_.empty() ? -1 : g;
  }
  BladeSum grade_part(int k) const {
    BladeSum b;
    for (const auto& [m, c] : terms_) {
      if (grade_of(m) == k) b.terms_.emplace(m, c);
    }
    return b;
  }
  BladeSum parity_part(int parity) const {
    BladeSum b;
    for (const auto& [m, c] : terms_) {
      if (grade_of(m) % 2 == parity) b.terms_.emplace(m, c);
    }
    return b;
  }

  BladeSum operator-() const {
    BladeSum b = *this;
    for (auto& t : b.terms_) t.second = -t.second;
    return b;
  }
  BladeSum& operator+=(const BladeSum& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  BladeSum& operator-=(const BladeSum& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend BladeSum operator+(BladeSum a, const BladeSum& b) { return a += b; }
  friend BladeSum operator-(BladeSum a, const BladeSum& b) { return a -= b; }
  friend BladeSum operator*(const Scalar& s, const BladeSum& b) {
    BladeSum r;
    r.add_scaled(b, s);
    return r;
  }
  friend bool operator==(const BladeSum& a, const BladeSum& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const BladeSum& a, const BladeSum& b) { return !(a == b); }

  /// Dense coordinates over all 2^n blades.
  Vec to_dense(std::size_t n) const {
    Vec v(std::size_t{1} << n);
    for (const auto& [m, c] : terms_) v[m] = c;
    return v;
  }
  static BladeSum from_dense(const Vec& v) {
    BladeSum b;
    for (std::size_t m = 0; m < v.size(); ++m) b.add(static_cast<Mask>(m), v[m]);
    return b;
  }

  std::string str(const std::vector<std::string>& labels, const char* sep) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")";
      for (std::size_t k = 0; k < labels.size(); ++k) {
        if (m & (Mask{1} << k)) out += sep + labels[k];
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

struct MultivectorTag {};
struct FormTag {};
struct CliffordTag {};
/// Elements of the exterior algebra of g.
using Multivector = BladeSum<MultivectorTag>;
/// Elements of the exterior algebra of g* (dual basis of the standard basis).
using Form = BladeSum<FormTag>;
/// Elements of Cl(g, kappa) in normal-ordered monomials.
using CliffordElement = BladeSum<CliffordTag>;

using Term = std::pair<Mask, Scalar>;
using TermList = std::vector<Term>;

/// Memo of monomial products; safe under concurrent lookup and insert.
class ProductTable {
 public:
  const TermList* find(std::uint64_t key) const;
  const TermList& insert(std::uint64_t key, TermList value);
  std::size_t size() const;
  /// Snapshot sorted by key.
  std::vector<std::pair<std::uint64_t, TermList>> entries() const;

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, TermList> map_;
};

/// Cl(g, kappa) with xy + yx = 2 kappa(x, y) on the standard basis of g.
class Clifford {
 public:
  explicit Clifford(std::shared_ptr<const LieAlgebra> g);

  const LieAlgebra& g() const { return *g_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return std::size_t{1} << n_; }

  CliffordElement one() const { return CliffordElement::scalar(1); }
  CliffordElement gen(std::size_t i) const { return CliffordElement::blade(Mask{1} << i); }
  /// Degree-one element of a vector of g.
  CliffordElement vec(const Vec& v) const;

  const TermList& monomial_product(Mask a, Mask b) const;
  CliffordElement mul(const CliffordElement& a, const CliffordElement& b) const;
  CliffordElement mul(const CliffordElement& a, const CliffordElement& b, const CliffordElement& c) const {
    return mul(mul(a, b), c);
  }

  /// Exterior algebra operations on Multivector.
  Multivector wedge(const Vec& a, const Multivector& v) const;
  /// Contraction by the covector kappa(x, .).
  Multivector contract_kappa(const Vec& x, const Multivector& v) const;
  /// Contraction by a covector given by its components xi(e_j).
  Multivector contract(const Vec& xi, const Multivector& v) const;
  /// Forms: covector wedge and vector contraction.
  Form wedge_form(const Vec& xi, const Form& f) const;
  Form contract_form(const Vec& a, const Form& f) const;
  /// Exterior product of forms.
  Form wedge_forms(const Form& a, const Form& b) const;

  CliffordElement quantize(const Multivector& v) const;
  Multivector dequantize(const CliffordElement& u) const;

  /// mu: ordered wedge of the full basis, scaled by `mu_scale`.
  Multivector mu() const;
  Multivector star(const Form& f) const;
  Form star_inv(const Multivector& v) const;
  void set_mu_scale(const Scalar& s) { mu_scale_ = s; }
  const Scalar& mu_scale() const { return mu_scale_; }

  /// Dual basis e^i of the standard basis e_i.
  const std::vector<Vec>& dual_basis() const { return dual_; }
  /// Theta = (1/6) sum Lambda(e_i, e_j, e_k) e^i e^j e^k.
  const CliffordElement& theta() const { return theta_; }
  /// tau'_a = (1/4) sum [a, e_i] e^i.
  CliffordElement tau_prime(const Vec& a) const;
  /// Graded commutator [x, u] = x u - (-1)^{|x||u|} u x, split over parities.
  CliffordElement graded_commutator(const CliffordElement& x, const CliffordElement& u) const;
  /// d^Cl u = (1/4)(Theta u - (-1)^{|u|} u Theta).
  CliffordElement dcl(const CliffordElement& u) const;
  /// (a, a') o u = a' u - (-1)^{|u|} u a.
  CliffordElement spinor_action(const Vec& a, const Vec& a2, const CliffordElement& u) const;
  /// Multivector action of (x, kappa(y)): x ^ v + contraction by kappa(y).
  Multivector vec_covec_action(const Vec& x, const Vec& y_dual, const Multivector& v) const;

  /// Columns of a linear operator on Cl given by its values on monomials.
  struct Operator {
    std::vector<CliffordElement> columns;
    CliffordElement apply(const CliffordElement& u) const;
    Matrix to_matrix(std::size_t dim) const;
  };
  Operator operator_of(const std::function<CliffordElement(const CliffordElement&)>& f) const;
  const Operator& dcl_operator() const;

  ProductTable& table() const { return *table_; }
  /// Content digest of (structure constants, Gram, field) keying the on-disk cache.
  std::string digest() const;
  /// Loads/stores the product table under dir/<digest>.bin; both return entry counts.
  std::size_t load_cache(const std::string& dir) const;
  std::size_t save_cache(const std::string& dir) const;

 private:
  const TermList& left_gen(std::size_t i, Mask b) const;

  std::shared_ptr<const LieAlgebra> g_;
  std::size_t n_;
  std::vector<Vec> dual_;
  CliffordElement theta_;
  Scalar mu_scale_ = 1;
  std::shared_ptr<ProductTable> table_;
  std::shared_ptr<ProductTable> left_table_;
  std::shared_ptr<ProductTable> quant_table_;
  mutable std::shared_ptr<Operator> dcl_op_;
  mutable std::mutex dcl_mu_;
};

/// Dimensions of ker d^Cl / im d^Cl: total, even part, odd part.
struct DclCohomology {
  std::size_t total = 0;
  std::size_t even = 0;
  std::size_t odd = 0;
};
DclCohomology dcl_cohomology(const Clifford& cl);

}  // namespace gk
