#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "gk/liealg.hpp"

namespace gk {

class LagrangianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// d = g + g with pairing kappa(a', b') - kappa(a, b) and componentwise bracket.
/// Vectors are concatenations (a, a') of length 2 dim g.
class Double {
 public:
  explicit Double(std::shared_ptr<const LieAlgebra> g) : g_(std::move(g)) {}

  const LieAlgebra& g() const { return *g_; }
  std::size_t dim() const { return 2 * g_->dim(); }
  Vec pair(const Vec& a, const Vec& a2) const { return concat(a, a2); }
  Vec first(const Vec& v) const { return slice(v, 0, g_->dim()); }
  Vec second(const Vec& v) const { return slice(v, g_->dim(), g_->dim()); }

  Scalar pairing(const Vec& v, const Vec& w) const;
  Vec bracket(const Vec& v, const Vec& w) const;
  Vec conj(const Vec& v) const;
  Subspace conj(const Subspace& s) const;
  /// s1 (first factor) boxplus s2 (second factor).
  Subspace box(const Subspace& s1, const Subspace& s2) const;
  Subspace left_factor() const;   // g + 0
  Subspace right_factor() const;  // 0 + g

  bool is_isotropic(const Subspace& s) const;
  bool is_subalgebra(const Subspace& s) const;
  /// Isotropic, bracket-closed, of dimension dim g.
  bool is_lagrangian_subalgebra(const Subspace& s) const;
  /// s meets k + k trivially, i.e. s and its conjugate are transversal.
  bool meets_compact_trivially(const Subspace& s) const;

 private:
  std::shared_ptr<const LieAlgebra> g_;
};

/// (a, a') -> (a' - a, kappa(a) + kappa(a')); the covector is returned as the
/// vector kappa^{-1} of it, i.e. as a + a'.
struct VecCovec {
  Vec vec;
  Vec covec_dual;  // x with covector kappa(x, .)
};
VecCovec kappa_star(const LieAlgebra& g, const Vec& a, const Vec& a2);
/// Pairing on g + g*: <(x, xi), (y, eta)> = (xi(y) + eta(x)) / 2.
Scalar vec_covec_pairing(const LieAlgebra& g, const VecCovec& u, const VecCovec& v);

/// l = n_+ + t10 for a positive system and an isotropic complement t10 of t in h.
struct SamelsonSubalgebra {
  std::shared_ptr<const CartanFrame> frame;
  Subspace t10;
  Subspace l;
  Subspace lbar;
  Subspace t01() const;
};

/// Validates t10 and every Samelson invariant; throws LagrangianError otherwise.
SamelsonSubalgebra samelson(std::shared_ptr<const CartanFrame> frame, const Subspace& t10);
/// Conjugate Samelson subalgebra built from the same Borel with t01 in place of t10.
SamelsonSubalgebra samelson_conjugate_cartan(const SamelsonSubalgebra& s);

/// Generalized Belavin-Drinfeld triple; indices refer to frame.simple_roots().
struct BDTriple {
  std::vector<std::size_t> P;
  std::vector<std::size_t> image;  // pi(P[k]) = image[k]
  bool operator==(const BDTriple& o) const { return P == o.P && image == o.image; }
};

bool is_isometry(const CartanFrame& frame, const BDTriple& t);
/// Every (P, P', pi) with |P| = |P'| and pi a bijection; no isometry filter.
std::vector<BDTriple> bd_candidates(const CartanFrame& frame);
/// The isometric candidates. Throws for semisimple rank above 3.
std::vector<BDTriple> enumerate_bd(const CartanFrame& frame);

/// Graph of psi_pi : g_P -> g_P' inside d, with psi(a_{+-alpha}) = a_{+-pi alpha}.
Subspace graph_of_psi(const Double& d, const CartanFrame& frame, const BDTriple& t);
/// Centre z_P of m_P = g_P + h.
Subspace z_of(const CartanFrame& frame, const std::vector<std::size_t>& P);
/// n_P (positive) or n_P^- (negative): root spaces for roots of R_+ outside [P].
Subspace n_of(const CartanFrame& frame, const std::vector<std::size_t>& P, bool negative);
/// Graph of theta restricted to z_P, theta an isometry of h extending pi to a
/// Gram-preserving bijection of the simple roots and fixing the centre;
/// `sign` = -1 gives the graph of -theta.
Subspace default_F(const Double& d, const CartanFrame& frame, const BDTriple& t, int sign = 1);

struct LagrangianSubalgebra {
  Subspace subspace;
  std::optional<BDTriple> triple;
  std::optional<Subspace> F;
};

LagrangianSubalgebra evens_lu(const Double& d, const CartanFrame& frame, const BDTriple& t,
                              const Subspace& F);

struct SplitResult {
  bool split = false;
  Subspace left;   // projection of L cap (g + 0)
  Subspace right;  // projection of L cap (0 + g)
  bool gc_flag = false;
};
SplitResult split_classify(const Double& d, const Subspace& L);

struct GKPair {
  SamelsonSubalgebra l_plus;
  SamelsonSubalgebra l_minus;
  Subspace L_plus;   // l_- boxplus l_+
  Subspace L_minus;  // lbar_- boxplus l_+
  bool induced = false;
  bool canonical = false;
  Vec rho_plus;
  Vec rho_minus;
  std::shared_ptr<const Double> d;
  const LieAlgebra& g() const { return d->g(); }
};

GKPair gk_pair(const SamelsonSubalgebra& l_plus, const SamelsonSubalgebra& l_minus);

struct BismutReport {
  bool mixed_brackets_vanish = true;
  bool left_in_c_minus = true;
  bool right_in_c_plus = true;
  bool ok() const { return mixed_brackets_vanish && left_in_c_minus && right_in_c_plus; }
};
/// [(a,0),(0,b')] = 0 on basis pairs, kappa_*(a,0) in C_- and kappa_*(0,b') in C_+.
BismutReport bismut_flat_check(const Double& d);

}  // namespace gk
