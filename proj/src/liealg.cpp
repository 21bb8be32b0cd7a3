#include "gk/liealg.hpp"

#include <algorithm>
#include <sstream>

namespace gk {

namespace {

using IntMat = std::vector<std::vector<long>>;

IntMat unit_matrix(int m, int p, int q) {
  IntMat a(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
  a[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = 1;
  return a;
}

IntMat commutator(const IntMat& a, const IntMat& b) {
  const std::size_t m = a.size();
  IntMat c(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    }
  }
  return c;
}

}  // namespace

GroupSpec GroupSpec::parse(const std::string& text) {
  GroupSpec spec;
  std::stringstream ss(text);
  std::string tok;
  bool any = false;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok == "A1") {
      spec.simple_ranks.push_back(1);
    } else if (tok == "A2") {
      spec.simple_ranks.push_back(2);
    } else if (tok == "U1") {
      spec.abelian_rank += 1;
    } else if (tok.size() >= 2 && tok[0] == 'T' &&
               std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) {
      spec.abelian_rank += std::stoi(tok.substr(1));
    } else {
      throw SpecError("unknown group token '" + tok + "'");
    }
    any = true;
  }
  if (!any) throw SpecError("empty group spec");
  return spec;
}

std::string GroupSpec::name() const {
  std::string out;
  for (int k : simple_ranks) {
    if (!out.empty()) out += ",";
    out += "A" + std::to_string(k);
  }
  if (abelian_rank > 0) {
    if (!out.empty()) out += ",";
    out += simple_ranks.empty() ? "T" + std::to_string(abelian_rank)
                                : std::string(abelian_rank == 1 ? "U1" : "T" + std::to_string(abelian_rank));
  }
  return out;
}

int GroupSpec::total_rank() const {
  int r = abelian_rank;
  for (int k : simple_ranks) r += k;
  return r;
}

int GroupSpec::total_dim() const {
  int n = abelian_rank;
  for (int k : simple_ranks) n += (k + 1) * (k + 1) - 1;
  return n;
}

Matrix GroupSpec::effective_center_gram() const {
  const auto a = static_cast<std::size_t>(abelian_rank);
  if (center_gram.rows() == a && center_gram.cols() == a && a > 0) return center_gram;
  Matrix g = Matrix::identity(a);
  if (!simple_ranks.empty()) {
    for (std::size_t k = 0; k < a; ++k) g.at(k, k) = 8;
  }
  return g;
}

void GroupSpec::validate() const {
  for (int k : simple_ranks) {
    if (k != 1 && k != 2) throw SpecError("only A1 and A2 simple factors are supported");
  }
  if (abelian_rank < 0) throw SpecError("negative abelian rank");
  if (total_dim() == 0) throw SpecError("zero-dimensional group");
  if (!allow_odd) {
    if (total_dim() % 2 != 0) throw SpecError("odd total dimension " + std::to_string(total_dim()));
    if (total_rank() % 2 != 0) throw SpecError("odd total rank " + std::to_string(total_rank()));
  }
  if (!is_squarefree(field_d)) throw SpecError("field_d must be squarefree and positive");
  const auto a = static_cast<std::size_t>(abelian_rank);
  if (center_gram.rows() != 0 || center_gram.cols() != 0) {
    if (center_gram.rows() != a || center_gram.cols() != a) {
      throw SpecError("center gram has wrong size");
    }
  }
  const Matrix g = effective_center_gram();
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      if (!g.at(i, j).is_rational()) throw SpecError("center gram must be rational");
      if (g.at(i, j) != g.at(j, i)) throw SpecError("center gram must be symmetric");
    }
  }
  if (!is_positive_definite(g)) throw SpecError("center gram must be positive definite");
}

LieAlgebra::LieAlgebra(const GroupSpec& spec) : spec_(spec) {
  spec_.validate();
  const bool tag = spec_.simple_ranks.size() > 1;
  // Matrix realization of each sl basis element, used for structure constants.
  struct Elem {
    std::size_t factor;
    IntMat mat;
  };
  std::vector<Elem> elems;
  for (std::size_t f = 0; f < spec_.simple_ranks.size(); ++f) {
    const int m = spec_.simple_ranks[f] + 1;
    factor_m_.push_back(m);
    factor_offset_.push_back(labels_.size());
    const std::string suffix = tag ? "_" + std::to_string(f + 1) : "";
    for (int i = 0; i + 1 < m; ++i) {
      IntMat h = unit_matrix(m, i, i);
      h[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(i + 1)] = -1;
      cartan_.push_back(labels_.size());
      labels_.push_back("h" + std::to_string(i + 1) + suffix);
      elems.push_back({f, h});
    }
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (p == q) continue;
        labels_.push_back("e" + std::to_string(p + 1) + std::to_string(q + 1) + suffix);
        elems.push_back({f, unit_matrix(m, p, q)});
      }
    }
  }
  const std::size_t semisimple = labels_.size();
  for (int j = 0; j < spec_.abelian_rank; ++j) {
    cartan_.push_back(labels_.size());
    labels_.push_back("z" + std::to_string(j + 1));
  }
  dim_ = labels_.size();

  // Coordinates of a traceless matrix of factor f.
  auto coords = [&](std::size_t f, const IntMat& x) {
    Vec v(dim_);
    const int m = factor_m_[f];
    std::size_t idx = factor_offset_[f];
    long partial = 0;
    for (int i = 0; i + 1 < m; ++i) {
      partial += x[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
      v[idx++] = Scalar(partial);
    }
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (p == q) continue;
        v[idx++] = Scalar(x[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      }
    }
    return v;
  };

  brk_.assign(dim_ * dim_, Vec(dim_));
  for (std::size_t i = 0; i < semisimple; ++i) {
    for (std::size_t j = 0; j < semisimple; ++j) {
      if (elems[i].factor != elems[j].factor) continue;
      brk_[i * dim_ + j] = coords(elems[i].factor, commutator(elems[i].mat, elems[j].mat));
    }
  }

  // kappa = -tr(ad_a ad_b) on the semisimple part, center gram on z.
  std::vector<Matrix> ads;
  ads.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) ads.push_back(ad(basis(i)));
  kappa_ = Matrix(dim_, dim_);
  for (std::size_t i = 0; i < semisimple; ++i) {
    for (std::size_t j = 0; j < semisimple; ++j) {
      Scalar tr;
      for (std::size_t a = 0; a < dim_; ++a) {
        for (std::size_t b = 0; b < dim_; ++b) {
          const Scalar& x = ads[i].at(a, b);
          const Scalar& y = ads[j].at(b, a);
          if (!x.is_zero() && !y.is_zero()) tr.add_product(x, y);
        }
      }
      kappa_.at(i, j) = -tr;
    }
  }
  const Matrix cg = spec_.effective_center_gram();
  for (std::size_t i = 0; i < cg.rows(); ++i) {
    for (std::size_t j = 0; j < cg.cols(); ++j) kappa_.at(semisimple + i, semisimple + j) = cg.at(i, j);
  }
  auto inv = inverse(kappa_);
  if (!inv) throw SpecError("kappa is degenerate");
  kappa_inv_ = *inv;

  // Compact conjugation.
  conj_ = Matrix(dim_, dim_);
  for (std::size_t f = 0; f < factor_m_.size(); ++f) {
    const int m = factor_m_[f];
    std::size_t idx = factor_offset_[f];
    for (int i = 0; i + 1 < m; ++i, ++idx) conj_.at(idx, idx) = -1;
    const std::size_t first_unit = idx;
    auto unit_index = [&](int p, int q) {
      // position of e_pq among the off-diagonal units in (p, q) lexicographic order
      return first_unit + static_cast<std::size_t>(p * (m - 1) + (q < p ? q : q - 1));
    };
    for (int p = 0; p < m; ++p) {
      for (int q = 0; q < m; ++q) {
        if (p == q) continue;
        conj_.at(unit_index(q, p), unit_index(p, q)) = -1;
        Root r;
        r.factor = f;
        r.p = p;
        r.q = q;
        r.vector_index = unit_index(p, q);
        roots_.push_back(r);
      }
    }
  }
  for (std::size_t j = semisimple; j < dim_; ++j) conj_.at(j, j) = 1;

  for (auto& r : roots_) {
    r.values = Vec(cartan_.size());
    for (std::size_t k = 0; k < cartan_.size(); ++k) {
      r.values[k] = basis_bracket(cartan_[k], r.vector_index)[r.vector_index];
    }
  }
}

Vec LieAlgebra::bracket(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("bracket: wrong vector length");
  Vec out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const Vec& c = brk_[i * dim_ + j];
      Scalar ab;
      bool have = false;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (c[k].is_zero()) continue;
        if (!have) {
          ab = a[i] * b[j];
          have = true;
        }
        out[k].add_product(ab, c[k]);
      }
    }
  }
  return out;
}

Scalar LieAlgebra::kappa(const Vec& a, const Vec& b) const {
  if (a.size() != dim_ || b.size() != dim_) throw DimensionError("kappa: wrong vector length");
  Scalar s;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      const Scalar& k = kappa_.at(i, j);
      if (k.is_zero() || b[j].is_zero()) continue;
      s.add_product(a[i] * k, b[j]);
    }
  }
  return s;
}

Matrix LieAlgebra::ad(const Vec& a) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Vec col = bracket(a, basis(j));
    for (std::size_t i = 0; i < dim_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

Subspace LieAlgebra::cartan() const {
  std::vector<Vec> vs;
  for (auto k : cartan_) vs.push_back(basis(k));
  return Subspace::span(dim_, vs);
}

Subspace LieAlgebra::center() const {
  std::vector<Vec> vs;
  for (std::size_t j = dim_ - static_cast<std::size_t>(spec_.abelian_rank); j < dim_; ++j) {
    vs.push_back(basis(j));
  }
  return Subspace::span(dim_, vs);
}

Vec LieAlgebra::from_cartan(const Vec& c) const {
  if (c.size() != cartan_.size()) throw DimensionError("Cartan coordinate vector has wrong length");
  Vec v(dim_);
  for (std::size_t k = 0; k < cartan_.size(); ++k) v[cartan_[k]] = c[k];
  return v;
}

Vec LieAlgebra::to_cartan(const Vec& v) const {
  Vec c(cartan_.size());
  for (std::size_t k = 0; k < cartan_.size(); ++k) c[k] = v[cartan_[k]];
  return c;
}

Vec LieAlgebra::conj(const Vec& v) const { return conj_.apply(gk::conj(v)); }

Subspace LieAlgebra::conj(const Subspace& s) const {
  std::vector<Vec> vs;
  for (const auto& v : s.vectors()) vs.push_back(conj(v));
  return Subspace::span(s.ambient_dim(), vs);
}

std::vector<Vec> LieAlgebra::compact_basis() const {
  const Scalar i = Scalar::imag_unit();
  std::vector<Vec> out;
  for (std::size_t f = 0; f < factor_m_.size(); ++f) {
    for (int k = 0; k + 1 < factor_m_[f]; ++k) out.push_back(i * basis(factor_offset_[f] + static_cast<std::size_t>(k)));
  }
  for (const auto& r : roots_) {
    if (r.p > r.q) continue;
    const std::size_t a = r.vector_index;
    std::size_t b = 0;
    for (const auto& s : roots_) {
      if (s.factor == r.factor && s.p == r.q && s.q == r.p) b = s.vector_index;
    }
    out.push_back(basis(a) - basis(b));
    out.push_back(i * (basis(a) + basis(b)));
  }
  for (std::size_t j = dim_ - static_cast<std::size_t>(spec_.abelian_rank); j < dim_; ++j) {
    out.push_back(basis(j));
  }
  return out;
}

Scalar LieAlgebra::cartan_three_form(std::size_t a, std::size_t b, std::size_t c) const {
  return kappa(basis(a), basis_bracket(b, c));
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
  const auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!s.contains(bracket(vs[i], vs[j]))) return false;
    }
  }
  return true;
}

bool LieAlgebra::is_isotropic(const Subspace& s) const {
  const auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      if (!kappa(vs[i], vs[j]).is_zero()) return false;
    }
  }
  return true;
}

CartanFrame::CartanFrame(std::shared_ptr<const LieAlgebra> alg_ptr,
                         std::vector<std::vector<int>> borel)
    : alg_(std::move(alg_ptr)), borel_(std::move(borel)) {
  const LieAlgebra& alg = *alg_;
  if (borel_.empty()) {
    for (std::size_t f = 0; f < alg.factor_count(); ++f) {
      std::vector<int> id(alg.factor_size(f));
      for (std::size_t k = 0; k < id.size(); ++k) id[k] = static_cast<int>(k);
      borel_.push_back(id);
    }
  }
  if (borel_.size() != alg.factor_count()) throw SpecError("Borel data has wrong factor count");
  for (std::size_t f = 0; f < borel_.size(); ++f) {
    std::vector<int> sorted = borel_[f];
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted.size() != alg.factor_size(f) || sorted[k] != static_cast<int>(k)) {
        throw SpecError("Borel data is not a permutation");
      }
    }
  }
  const auto& roots = alg.roots();
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (is_positive(roots[k])) positive_.push_back(k);
  }
  for (std::size_t f = 0; f < borel_.size(); ++f) {
    for (std::size_t a = 0; a + 1 < borel_[f].size(); ++a) {
      for (std::size_t k = 0; k < roots.size(); ++k) {
        if (roots[k].factor == f && roots[k].p == borel_[f][a] && roots[k].q == borel_[f][a + 1]) {
          simple_.push_back(k);
        }
      }
    }
  }
  rho_ = Vec(alg.dim());
  for (auto k : positive_) rho_ = rho_ + coroot(k);
  rho_ = Scalar::rational(1, 2) * rho_;
}

bool CartanFrame::is_positive(const Root& r) const {
  const auto& perm = borel_[r.factor];
  const auto ip = std::find(perm.begin(), perm.end(), r.p) - perm.begin();
  const auto iq = std::find(perm.begin(), perm.end(), r.q) - perm.begin();
  return ip < iq;
}

std::size_t CartanFrame::negative_of(std::size_t root) const {
  const auto& roots = alg_->roots();
  const Root& r = roots.at(root);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (roots[k].factor == r.factor && roots[k].p == r.q && roots[k].q == r.p) return k;
  }
  throw SpecError("root without negative");
}

Vec CartanFrame::root_vector(std::size_t root) const {
  const Root& r = alg_->roots().at(root);
  const Vec e = alg_->basis(r.vector_index);
  if (r.p < r.q) return e;
  const Vec f = alg_->basis(alg_->roots()[negative_of(root)].vector_index);
  return alg_->kappa(f, e).inv() * e;
}

Vec CartanFrame::coroot(std::size_t root) const {
  return alg_->bracket(root_vector(root), root_vector(negative_of(root)));
}

Subspace CartanFrame::nilradical() const {
  std::vector<Vec> vs;
  for (auto k : positive_) vs.push_back(root_vector(k));
  return Subspace::span(alg_->dim(), vs);
}

Scalar CartanFrame::root_value(std::size_t root, const Vec& h) const {
  const Vec c = alg_->to_cartan(h);
  const Vec& vals = alg_->roots().at(root).values;
  Scalar s;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!c[k].is_zero()) s.add_product(c[k], vals[k]);
  }
  return s;
}

Scalar weyl_norm(const CartanFrame& frame) {
  return frame.algebra().kappa(frame.weyl(), frame.weyl());
}

DualPair dual_basis(const LieAlgebra& alg, const Subspace& s1, const Subspace& s2) {
  if (s1.dim() != s2.dim()) throw SpecError("dual_basis: subspaces of different dimension");
  const auto b1 = s1.vectors();
  const auto b2 = s2.vectors();
  const std::size_t k = b1.size();
  Matrix p(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) p.at(i, j) = alg.kappa(b1[i], b2[j]);
  }
  auto pinv = inverse(p);
  if (!pinv) throw SpecError("dual_basis: kappa pairing is degenerate");
  DualPair out;
  out.b = b1;
  for (std::size_t j = 0; j < k; ++j) {
    Vec v(alg.dim());
    for (std::size_t m = 0; m < k; ++m) {
      const Scalar& c = pinv->at(m, j);
      if (!c.is_zero()) v = v + c * b2[m];
    }
    out.bbar.push_back(v);
  }
  return out;
}

std::vector<Vec> dual_of_standard(const LieAlgebra& alg) {
  std::vector<Vec> out;
  const Matrix& inv = alg.kappa_inverse();
  for (std::size_t j = 0; j < alg.dim(); ++j) out.push_back(inv.column(j));
  return out;
}

bool is_positive_definite(const Matrix& g) {
  if (g.rows() != g.cols()) return false;
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    Matrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = g.at(i, j);
    }
    const Scalar det = determinant(minor);
    if (!det.is_rational() || det.rational_sign() <= 0) return false;
  }
  return true;
}

bool is_positive_definite(const LieAlgebra& alg, const std::vector<Vec>& basis) {
  Matrix g(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) g.at(i, j) = alg.kappa(basis[i], basis[j]);
  }
  return is_positive_definite(g);
}

}  // namespace gk
