#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gk/lagrangian.hpp"

namespace gk {

class CohomologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Chevalley-Eilenberg complex with trivial coefficients on a basis s_1..s_m.
/// Cochains of degree k are indexed by k-subsets (bitmasks) in increasing order.
struct CEComplex {
  std::size_t m = 0;
  /// [s_i, s_j] = sum_k c[i][j][k] s_k
  std::vector<std::vector<Vec>> structure;
  /// d[k] : wedge^k -> wedge^{k+1}, rows indexed by (k+1)-subsets.
  std::vector<Matrix> d;
  /// masks[k] lists the k-subsets in the row/column order used by d.
  std::vector<std::vector<std::uint32_t>> masks;

  std::vector<std::size_t> betti() const;
  bool d_squared_zero() const;
};

using Bracket = std::function<Vec(const Vec&, const Vec&)>;

/// Throws CohomologyError when the span of `basis` is not bracket-closed.
CEComplex ce_complex(const std::vector<Vec>& basis, const Bracket& bracket);
CEComplex ce_complex(const LieAlgebra& g, const Subspace& sub);
CEComplex ce_complex(const Double& d, const Subspace& sub);

std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, const Subspace& sub);
std::vector<std::size_t> ce_cohomology(const Double& d, const Subspace& sub);

/// First page wedge^p lbar^* (x) wedge^q t^{0,1} of the other side, d1 = d_lbar (x) id.
struct DoublePage {
  std::size_t n = 0;  // dim lbar
  std::size_t r = 0;  // dim of the t^{0,1} factor
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> e1;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> d1;  // (p, q) -> E1^{p,q} -> E1^{p+1,q}
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> e2;

  bool d1_squared_zero() const;
  std::size_t e2_total() const;
  /// sum over p + q = k of E2^{p,q}
  std::vector<std::size_t> e2_by_degree() const;
};

/// `swapped` builds the page with the roles of the two sides exchanged.
DoublePage e1_page(const GKPair& pair, bool swapped = false);
/// Fills e2 from e1 and d1.
DoublePage e2_page(DoublePage page);

/// CE cohomology of Lbar_+ = lbar_- [+] lbar_+ inside d.
std::vector<std::size_t> total_cohomology(const GKPair& pair);

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b);
std::size_t binomial(std::size_t n, std::size_t k);

struct PicardReport {
  std::size_t rank = 0;
  std::size_t r = 0;
  std::size_t h1_lbar_plus = 0;
  std::size_t tangent_dim = 0;  // dim H^1(Lbar)
  bool ok() const { return h1_lbar_plus == r && tangent_dim == 2 * r; }
};
PicardReport picard_report(const GKPair& pair);

}  // namespace gk
