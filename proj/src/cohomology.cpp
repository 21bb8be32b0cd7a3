#include "gk/cohomology.hpp"

#include <unordered_map>

namespace gk {

namespace {

Matrix kron_identity(const Matrix& a, std::size_t k) {
  Matrix out(a.rows() * k, a.cols() * k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (std::size_t t = 0; t < k; ++t) out.at(i * k + t, j * k + t) = x;
    }
  }
  return out;
}

std::size_t safe_rank(const Matrix& m) { return m.rows() == 0 || m.cols() == 0 ? 0 : rank(m); }

}  // namespace

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t out = 1;
  for (std::size_t j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

std::vector<std::size_t> convolve(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::size_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CEComplex ce_complex(const std::vector<Vec>& basis, const Bracket& bracket) {
  CEComplex ce;
  ce.m = basis.size();
  if (ce.m > 16) throw CohomologyError("CE complex too large");
  if (ce.m == 0) {
    ce.masks = {{0}};
    return ce;
  }
  const std::size_t amb = basis[0].size();
  const Matrix cols = Matrix::from_columns(basis, amb);
  if (rank(cols) != ce.m) throw CohomologyError("CE basis is linearly dependent");
  ce.structure.assign(ce.m, std::vector<Vec>(ce.m));
  for (std::size_t i = 0; i < ce.m; ++i) {
    for (std::size_t j = 0; j < ce.m; ++j) {
      auto x = solve(cols, bracket(basis[i], basis[j]));
      if (!x) throw CohomologyError("not a subalgebra: bracket leaves the span");
      ce.structure[i][j] = std::move(*x);
    }
  }

  ce.masks.assign(ce.m + 1, {});
  for (std::uint32_t a = 0; a < (1u << ce.m); ++a) ce.masks[static_cast<std::size_t>(__builtin_popcount(a))].push_back(a);
  std::vector<std::unordered_map<std::uint32_t, std::size_t>> pos(ce.m + 1);
  for (std::size_t k = 0; k <= ce.m; ++k) {
    for (std::size_t t = 0; t < ce.masks[k].size(); ++t) pos[k][ce.masks[k][t]] = t;
  }

  // (d xi^A)(s_B) = sum_{i<j} (-1)^{i+j} xi^A([s_bi, s_bj], s_{B \ {bi, bj}})
  for (std::size_t k = 0; k < ce.m; ++k) {
    Matrix dk(ce.masks[k + 1].size(), ce.masks[k].size());
    for (std::size_t row = 0; row < ce.masks[k + 1].size(); ++row) {
      const std::uint32_t B = ce.masks[k + 1][row];
      std::vector<std::size_t> b;
      for (std::size_t t = 0; t < ce.m; ++t) {
        if (B & (1u << t)) b.push_back(t);
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) {
          const std::uint32_t rest = B & ~(1u << b[i]) & ~(1u << b[j]);
          const Vec& br = ce.structure[b[i]][b[j]];
          for (std::size_t c = 0; c < ce.m; ++c) {
            if (br[c].is_zero() || (rest & (1u << c))) continue;
            const std::uint32_t A = rest | (1u << c);
            const int moves = __builtin_popcount(rest & ((1u << c) - 1));
            const bool neg = ((i + j) + static_cast<std::size_t>(moves)) % 2 == 1;
            Scalar& e = dk.at(row, pos[k].at(A));
            e += neg ? -br[c] : br[c];
          }
        }
      }
    }
    ce.d.push_back(std::move(dk));
  }
  return ce;
}

CEComplex ce_complex(const LieAlgebra& g, const Subspace& sub) {
  return ce_complex(sub.vectors(), [&g](const Vec& a, const Vec& b) { return g.bracket(a, b); });
}

CEComplex ce_complex(const Double& d, const Subspace& sub) {
  return ce_complex(sub.vectors(), [&d](const Vec& a, const Vec& b) { return d.bracket(a, b); });
}

std::vector<std::size_t> CEComplex::betti() const {
  std::vector<std::size_t> ranks(m + 1, 0);
  for (std::size_t k = 0; k < d.size(); ++k) ranks[k] = safe_rank(d[k]);
  std::vector<std::size_t> out(m + 1);
  for (std::size_t k = 0; k <= m; ++k) {
    const std::size_t dim = masks[k].size();
    out[k] = dim - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  }
  return out;
}

bool CEComplex::d_squared_zero() const {
  for (std::size_t k = 0; k + 1 < d.size(); ++k) {
    if (!(d[k + 1] * d[k]).is_zero()) return false;
  }
  return true;
}

std::vector<std::size_t> ce_cohomology(const LieAlgebra& g, const Subspace& sub) { return ce_complex(g, sub).betti(); }
std::vector<std::size_t> ce_cohomology(const Double& d, const Subspace& sub) { return ce_complex(d, sub).betti(); }

DoublePage e1_page(const GKPair& pair, bool swapped) {
  const LieAlgebra& g = pair.g();
  const Subspace& lbar = swapped ? pair.l_minus.lbar : pair.l_plus.lbar;
  const Subspace t01 = swapped ? pair.l_plus.t01() : pair.l_minus.t01();
  const CEComplex ce = ce_complex(g, lbar);
  DoublePage page;
  page.n = ce.m;
  page.r = t01.dim();
  for (std::size_t q = 0; q <= page.r; ++q) {
    const std::size_t fq = binomial(page.r, q);
    for (std::size_t p = 0; p <= page.n; ++p) {
      page.e1[{p, q}] = binomial(page.n, p) * fq;
      if (p < page.n) page.d1[{p, q}] = kron_identity(ce.d[p], fq);
    }
  }
  return page;
}

DoublePage e2_page(DoublePage page) {
  for (const auto& [pq, dim] : page.e1) {
    const auto [p, q] = pq;
    std::size_t out = 0, in = 0;
    if (auto it = page.d1.find({p, q}); it != page.d1.end()) out = safe_rank(it->second);
    if (p > 0) {
      if (auto it = page.d1.find({p - 1, q}); it != page.d1.end()) in = safe_rank(it->second);
    }
    page.e2[pq] = dim - out - in;
  }
  return page;
}

bool DoublePage::d1_squared_zero() const {
  for (const auto& [pq, m] : d1) {
    auto next = d1.find({pq.first + 1, pq.second});
    if (next != d1.end() && !(next->second * m).is_zero()) return false;
  }
  return true;
}

std::size_t DoublePage::e2_total() const {
  std::size_t t = 0;
  for (const auto& [pq, v] : e2) t += v;
  return t;
}

std::vector<std::size_t> DoublePage::e2_by_degree() const {
  std::vector<std::size_t> out(n + r + 1, 0);
  for (const auto& [pq, v] : e2) out[pq.first + pq.second] += v;
  return out;
}

std::vector<std::size_t> total_cohomology(const GKPair& pair) {
  const Double& d = *pair.d;
  return ce_cohomology(d, d.box(pair.l_minus.lbar, pair.l_plus.lbar));
}

PicardReport picard_report(const GKPair& pair) {
  PicardReport rep;
  rep.rank = pair.g().rank();
  rep.r = rep.rank / 2;
  const auto hp = ce_cohomology(pair.g(), pair.l_plus.lbar);
  rep.h1_lbar_plus = hp.size() > 1 ? hp[1] : 0;
  const auto tot = total_cohomology(pair);
  rep.tangent_dim = tot.size() > 1 ? tot[1] : 0;
  return rep;
}

}  // namespace gk
