#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gk/linalg.hpp"

namespace gk {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Products of A-type simple factors (rank 1 or 2) and an abelian part.
struct GroupSpec {
  std::vector<int> simple_ranks;  // A_k factors, k in {1, 2}
  int abelian_rank = 0;
  Matrix center_gram;             // abelian_rank x abelian_rank; empty means default
  int field_d = 1;
  /// Permits odd dimension/rank (used only for d^Cl cohomology of A1 alone).
  bool allow_odd = false;

  /// Parses "A1,U1", "A2", "T2", ... (T<k> is shorthand for k copies of U1).
  static GroupSpec parse(const std::string& text);
  std::string name() const;
  int total_rank() const;
  int total_dim() const;
  /// Identity for tori; 8 * identity when simple factors are present so that an
  /// isotropic t10 exists over Q(i).
  Matrix effective_center_gram() const;
  void validate() const;
};

/// A root eps_p - eps_q of one sl factor.
struct Root {
  std::size_t factor = 0;
  int p = 0;
  int q = 0;
  std::size_t vector_index = 0;  // basis index of the matrix unit e_pq
  Vec values;                    // alpha(h_k) on the Cartan basis
};

class LieAlgebra {
 public:
  explicit LieAlgebra(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  int field_d() const { return spec_.field_d; }
  bool is_abelian() const { return roots_.empty(); }

  Vec bracket(const Vec& a, const Vec& b) const;
  const Vec& basis_bracket(std::size_t i, std::size_t j) const { return brk_[i * dim_ + j]; }
  Scalar kappa(const Vec& a, const Vec& b) const;
  const Matrix& kappa_gram() const { return kappa_; }
  const Matrix& kappa_inverse() const { return kappa_inv_; }
  /// Matrix of ad_a in the basis.
  Matrix ad(const Vec& a) const;
  Vec basis(std::size_t k) const { return unit_vec(dim_, k); }

  /// Cartan subalgebra basis indices (h_i per factor, then z_j).
  const std::vector<std::size_t>& cartan_indices() const { return cartan_; }
  std::size_t rank() const { return cartan_.size(); }
  Subspace cartan() const;
  Subspace center() const;
  /// All roots eps_p - eps_q, p != q.
  const std::vector<Root>& roots() const { return roots_; }
  std::size_t factor_size(std::size_t f) const { return static_cast<std::size_t>(factor_m_[f]); }
  std::size_t factor_count() const { return factor_m_.size(); }
  /// Converts a Cartan-basis coordinate vector to g.
  Vec from_cartan(const Vec& coords) const;
  Vec to_cartan(const Vec& v) const;

  /// Compact conjugation v -> M conj(v); fixes k.
  Vec conj(const Vec& v) const;
  const Matrix& conj_matrix() const { return conj_; }
  Subspace conj(const Subspace& s) const;
  /// Real basis of k (i h_j, e_pq - e_qp, i(e_pq + e_qp), z_j).
  std::vector<Vec> compact_basis() const;

  /// Lambda(a, b, c) = kappa(a, [b, c]) on basis vectors.
  Scalar cartan_three_form(std::size_t a, std::size_t b, std::size_t c) const;

  bool is_subalgebra(const Subspace& s) const;
  bool is_isotropic(const Subspace& s) const;

 private:
  GroupSpec spec_;
  std::size_t dim_ = 0;
  std::vector<int> factor_m_;            // m for each sl(m)
  std::vector<std::size_t> factor_offset_;
  std::vector<std::string> labels_;
  std::vector<Vec> brk_;
  Matrix kappa_;
  Matrix kappa_inv_;
  Matrix conj_;
  std::vector<std::size_t> cartan_;
  std::vector<Root> roots_;
};

/// Positive system, root vectors, coroots and the Weyl vector.
class CartanFrame {
 public:
  /// `borel[f]` is a permutation of {0..m-1} for factor f; eps_p - eps_q is positive
  /// iff p precedes q in it. Empty means the standard system (p < q).
  CartanFrame(std::shared_ptr<const LieAlgebra> alg, std::vector<std::vector<int>> borel = {});

  const LieAlgebra& algebra() const { return *alg_; }
  const std::shared_ptr<const LieAlgebra>& algebra_ptr() const { return alg_; }
  const std::vector<std::vector<int>>& borel() const { return borel_; }
  bool is_positive(const Root& r) const;
  /// Indices into algebra().roots().
  const std::vector<std::size_t>& positive_roots() const { return positive_; }
  /// Simple roots as indices into algebra().roots().
  const std::vector<std::size_t>& simple_roots() const { return simple_; }
  /// a_alpha with kappa(a_alpha, a_-alpha) = 1.
  Vec root_vector(std::size_t root) const;
  std::size_t negative_of(std::size_t root) const;
  /// h_alpha = [a_alpha, a_-alpha].
  Vec coroot(std::size_t root) const;
  Vec weyl() const { return rho_; }
  /// n_+ as a subspace of g.
  Subspace nilradical() const;
  /// Value of a root functional on an element of h.
  Scalar root_value(std::size_t root, const Vec& h) const;

 private:
  std::shared_ptr<const LieAlgebra> alg_;
  std::vector<std::vector<int>> borel_;
  std::vector<std::size_t> positive_;
  std::vector<std::size_t> simple_;
  Vec rho_;
};

/// kappa(rho, rho).
Scalar weyl_norm(const CartanFrame& frame);

struct DualPair {
  std::vector<Vec> b;
  std::vector<Vec> bbar;
};
/// Bases of s1 and s2 with kappa(b_i, bbar_j) = delta_ij; throws SpecError when degenerate.
DualPair dual_basis(const LieAlgebra& alg, const Subspace& s1, const Subspace& s2);
/// Dual bases of all of g: e_i the standard basis, e^i with kappa(e_i, e^j) = delta_ij.
std::vector<Vec> dual_of_standard(const LieAlgebra& alg);

/// Leading principal minors of the Gram of `basis` are all positive (rational case).
bool is_positive_definite(const LieAlgebra& alg, const std::vector<Vec>& basis);
bool is_positive_definite(const Matrix& gram);

}  // namespace gk
