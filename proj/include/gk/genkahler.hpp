#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gk/clifford.hpp"
#include "gk/lagrangian.hpp"

namespace gk {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { Plus, Minus };

/// How the complement p of lbar_+ in lbar_+ + (other) is chosen. Both choices
/// give the same spinor line.
enum class PChoice { Default, Alternate };

struct PureSpinor {
  Side side = Side::Plus;
  std::size_t n = 0;  // dim_C l_+
  std::size_t s = 0;  // dim p
  /// b_1..b_{n+s}: first n span lbar_+, last n span the other factor, final s span p.
  std::vector<Vec> generators;
  CliffordElement element;
  /// The Lagrangian it is meant to define: lbar_- [+] lbar_+ (plus) or l_- [+] lbar_+ (minus).
  Subspace expected;
};

/// Builds u_+ (from lbar_+ + lbar_-) or u_- (from lbar_+ + l_-).
PureSpinor build_pure_spinor(const Clifford& cl, const GKPair& pair, Side side, PChoice choice = PChoice::Default);

/// {(a, a') in d : (a, a') o u = 0}, by exact kernel.
Subspace spinor_annihilator(const Clifford& cl, const CliffordElement& u);

/// Lowest degree of the form (q o star)^{-1}(u).
int type_of(const Clifford& cl, const CliffordElement& u);

/// dim of lbar_+ cap lbar_- (plus side) or lbar_+ cap l_- (minus side).
std::size_t type_parity_dim(const GKPair& pair, Side side);

struct IdentityCheck {
  std::string name;
  bool ok = false;
  CliffordElement residual;  // lhs - rhs
};

struct DclSpinorReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
};

/// d^Cl u_+ = (1/2)(-rho_-, rho_+) o u_+, its u_- analogue, d^Cl u_l = (1/2)(-rho, rho) o u_l
/// for l = l_+, and d^Cl(u_l u_lbar) = (1/2)(rho, rho) o (u_l u_lbar).
DclSpinorReport verify_dcl_spinor(const Clifford& cl, const GKPair& pair);

/// Element u with annihilator lbar (left and right multiplication), the product of a basis of lbar.
CliffordElement samelson_spinor(const Clifford& cl, const Subspace& lbar);

/// a^ o ((1/2)(-rho_-, rho_+) o u_+) = lambda u_+ for a^ in the annihilator of u_+;
/// returns lambda = kappa(a', rho_+) + kappa(a, rho_-). Throws GeometryError when a^
/// does not annihilate u_+ or when the identity fails.
Scalar connection_eigenvalue(const Clifford& cl, const GKPair& pair, const PureSpinor& u, const Vec& a, const Vec& a2);

enum class MetricSide { Plus, Minus };

struct DegreeReport {
  MetricSide side = MetricSide::Plus;
  std::size_t n = 0;
  Vec rho;        // rho_+ or rho_-
  Vec rho10;      // its t_{1,0} component
  Form phi;       // phi - phibar at the identity
  Form curvature; // F = d(phi - phibar)
  Form omega;
  Form curvature_top;  // F ^ omega^{n-1}
  Form omega_top;      // omega^n
  Form volume;         // wedge_i (b_i^* ^ bbar_i^*)
  Scalar numerator;    // n * [F ^ omega^{n-1} : volume]
  Scalar denominator;  // [omega^n : volume]
  Scalar degree;
  Scalar kappa_rho_rho;
  bool chain_ok = false;  // numerator and denominator match the closed forms
  bool ok() const { return chain_ok && degree == Scalar(-2) * kappa_rho_rho; }
};

/// Degree of the canonical bundle at the identity; see README for the normalization.
DegreeReport degree_canonical(const Clifford& cl, const GKPair& pair, MetricSide side);

/// tau_{J_+} and tau_{J_-}.
struct TauJ {
  CliffordElement plus;
  CliffordElement minus;
};
TauJ tau_j(const Clifford& cl, const GKPair& pair);

struct HodgeCell {
  int r = 0, s = 0, p = 0, q = 0;
  std::vector<CliffordElement> basis;
};

struct HodgeGrid {
  std::size_t n = 0;
  PureSpinor u;
  TauJ tau;
  /// u -> tau_{J+} u -+ u tau_{J-}
  Clifford::Operator hat_plus;
  Clifford::Operator hat_minus;
  std::map<std::pair<int, int>, HodgeCell> cells;
};

HodgeGrid hodge_grid(const Clifford& cl, const GKPair& pair);

struct GridReport {
  bool eigen_ok = true;       // every cell vector is an (ir, is) eigenvector
  bool dims_ok = true;        // dim U_{r,s} = C(n,p) C(n,q)
  bool direct_sum = false;    // ranks add up to 2^{2n}
  std::size_t total_rank = 0;
  bool spinor_eigen_ok = false;  // hat_plus u = -in u, hat_minus u = 0
  std::string witness;
  bool ok() const { return eigen_ok && dims_ok && direct_sum && spinor_eigen_ok; }
};

/// `full_rank` ranks the whole 2^{2n} basis at once; otherwise per cell (cells are
/// eigenspaces for distinct eigenvalue pairs, hence independent).
GridReport check_grid(const Clifford& cl, const HodgeGrid& grid, bool full_rank);

/// Components of x in U_{r +- 1, s +- 1}, keyed by (dr, ds).
struct Decomposition {
  std::map<std::pair<int, int>, CliffordElement> parts;
  bool contained = true;
};
/// Splits x, assumed in U_{r', s'} with r' in {r - 1, r + 1} and s' in {s - 1, s + 1}.
Decomposition split_neighbours(const HodgeGrid& grid, const CliffordElement& x, int r, int s);

struct GradedDclReport {
  bool containment = true;
  bool dbar_plus_sq = true;
  bool dbar_minus_sq = true;
  bool dbar_anticommute = true;
  bool d_plus_sq = true;
  bool d_minus_sq = true;
  bool nine_vanish = true;
  bool spinor_lands = true;  // d^Cl u_+ in U_{-n+1, +-1}
  std::size_t vectors = 0;
  std::string witness;
  bool ok() const {
    return containment && dbar_plus_sq && dbar_minus_sq && dbar_anticommute && d_plus_sq && d_minus_sq &&
           nine_vanish && spinor_lands;
  }
};
GradedDclReport graded_dcl(const Clifford& cl, const HodgeGrid& grid);

/// On h [+] h the two generalized complex structures are J (x) J and (-J) (x) J; through
/// kappa_* they act as the complex structure J and the symplectic form of J on t.
/// Throws GeometryError for a non-canonical pair.
bool torus_restriction_check(const GKPair& pair);

/// The matrix on d with eigenvalue i on L and -i on conj(L).
Matrix generalized_complex_matrix(const Double& d, const Subspace& L);

}  // namespace gk
