#include "gk/lagrangian.hpp"

#include <algorithm>
#include <numeric>

namespace gk {

Scalar Double::pairing(const Vec& v, const Vec& w) const {
  return g_->kappa(second(v), second(w)) - g_->kappa(first(v), first(w));
}

Vec Double::bracket(const Vec& v, const Vec& w) const {
  return concat(g_->bracket(first(v), first(w)), g_->bracket(second(v), second(w)));
}

Vec Double::conj(const Vec& v) const { return concat(g_->conj(first(v)), g_->conj(second(v))); }

Subspace Double::conj(const Subspace& s) const {
  std::vector<Vec> vs;
  for (const auto& v : s.vectors()) vs.push_back(conj(v));
  return Subspace::span(dim(), vs);
}

Subspace Double::box(const Subspace& s1, const Subspace& s2) const {
  const std::size_t n = g_->dim();
  if (s1.ambient_dim() != n || s2.ambient_dim() != n) throw DimensionError("box: factor dimension mismatch");
  std::vector<Vec> vs;
  for (const auto& v : s1.vectors()) vs.push_back(concat(v, zero_vec(n)));
  for (const auto& v : s2.vectors()) vs.push_back(concat(zero_vec(n), v));
  return Subspace::span(dim(), vs);
}

Subspace Double::left_factor() const { return box(Subspace::full(g_->dim()), Subspace(g_->dim())); }

Subspace Double::right_factor() const { return box(Subspace(g_->dim()), Subspace::full(g_->dim())); }

bool Double::is_isotropic(const Subspace& s) const {
  const auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) {
      if (!pairing(vs[i], vs[j]).is_zero()) return false;
    }
  }
  return true;
}

bool Double::is_subalgebra(const Subspace& s) const {
  const auto vs = s.vectors();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!s.contains(bracket(vs[i], vs[j]))) return false;
    }
  }
  return true;
}

bool Double::is_lagrangian_subalgebra(const Subspace& s) const {
  return s.dim() == g_->dim() && is_isotropic(s) && is_subalgebra(s);
}

bool Double::meets_compact_trivially(const Subspace& s) const { return s.intersect(conj(s)).dim() == 0; }

VecCovec kappa_star(const LieAlgebra&, const Vec& a, const Vec& a2) { return {a2 - a, a + a2}; }

Scalar vec_covec_pairing(const LieAlgebra& g, const VecCovec& u, const VecCovec& v) {
  return Scalar::rational(1, 2) * (g.kappa(u.covec_dual, v.vec) + g.kappa(v.covec_dual, u.vec));
}

Subspace SamelsonSubalgebra::t01() const { return frame->algebra().conj(t10); }

SamelsonSubalgebra samelson(std::shared_ptr<const CartanFrame> frame, const Subspace& t10) {
  const LieAlgebra& g = frame->algebra();
  const Subspace h = g.cartan();
  if (t10.ambient_dim() != g.dim()) throw LagrangianError("t10 has wrong ambient dimension");
  if (!h.contains(t10)) throw LagrangianError("t10 is not contained in the Cartan subalgebra");
  if (2 * t10.dim() != g.rank()) throw LagrangianError("t10 must have dimension rank/2");
  if (!g.is_isotropic(t10)) throw LagrangianError("t10 is not kappa-isotropic");
  const Subspace t01 = g.conj(t10);
  if (t10.intersect(t01).dim() != 0) throw LagrangianError("t10 meets the real form t");

  SamelsonSubalgebra s;
  s.frame = frame;
  s.t10 = t10;
  s.l = frame->nilradical() + t10;
  s.lbar = g.conj(s.l);
  if (2 * s.l.dim() != g.dim()) throw LagrangianError("l does not have dimension n");
  if (!g.is_subalgebra(s.l)) throw LagrangianError("l is not a subalgebra");
  if (!g.is_isotropic(s.l)) throw LagrangianError("l is not isotropic");
  if (s.l.intersect(s.lbar).dim() != 0) throw LagrangianError("l meets k");
  for (const auto& hv : h.vectors()) {
    for (const auto& v : s.l.vectors()) {
      if (!s.l.contains(g.bracket(hv, v))) throw LagrangianError("[t, l] is not contained in l");
    }
  }
  return s;
}

SamelsonSubalgebra samelson_conjugate_cartan(const SamelsonSubalgebra& s) {
  return samelson(s.frame, s.t01());
}

namespace {

Scalar coroot_gram(const CartanFrame& f, std::size_t a, std::size_t b) {
  const auto& simple = f.simple_roots();
  return f.algebra().kappa(f.coroot(simple[a]), f.coroot(simple[b]));
}

// Permutation of the simple-root indices extending t and preserving the coroot Gram.
std::optional<std::vector<std::size_t>> extend_to_gamma(const CartanFrame& frame, const BDTriple& t) {
  const std::size_t r = frame.simple_roots().size();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t k = 0; k < t.P.size() && ok; ++k) ok = perm[t.P[k]] == t.image[k];
    for (std::size_t a = 0; a < r && ok; ++a) {
      for (std::size_t b = 0; b < r && ok; ++b) {
        ok = coroot_gram(frame, a, b) == coroot_gram(frame, perm[a], perm[b]);
      }
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

bool is_isometry(const CartanFrame& frame, const BDTriple& t) {
  if (t.P.size() != t.image.size()) return false;
  for (std::size_t a = 0; a < t.P.size(); ++a) {
    for (std::size_t b = 0; b < t.P.size(); ++b) {
      if (coroot_gram(frame, t.P[a], t.P[b]) != coroot_gram(frame, t.image[a], t.image[b])) return false;
    }
  }
  return true;
}

std::vector<BDTriple> bd_candidates(const CartanFrame& frame) {
  const std::size_t r = frame.simple_roots().size();
  if (r > 3) throw LagrangianError("Belavin-Drinfeld enumeration is bounded at rank 3");
  std::vector<BDTriple> out;
  for (unsigned pm = 0; pm < (1u << r); ++pm) {
    std::vector<std::size_t> P;
    for (std::size_t k = 0; k < r; ++k) {
      if (pm & (1u << k)) P.push_back(k);
    }
    for (unsigned qm = 0; qm < (1u << r); ++qm) {
      std::vector<std::size_t> Q;
      for (std::size_t k = 0; k < r; ++k) {
        if (qm & (1u << k)) Q.push_back(k);
      }
      if (Q.size() != P.size()) continue;
      std::vector<std::size_t> img = Q;
      do {
        out.push_back({P, img});
      } while (std::next_permutation(img.begin(), img.end()));
    }
  }
  return out;
}

std::vector<BDTriple> enumerate_bd(const CartanFrame& frame) {
  std::vector<BDTriple> out;
  for (auto& t : bd_candidates(frame)) {
    if (is_isometry(frame, t)) out.push_back(std::move(t));
  }
  return out;
}

Subspace graph_of_psi(const Double& d, const CartanFrame& frame, const BDTriple& t) {
  if (!is_isometry(frame, t)) throw LagrangianError("pi is not an isometry");
  const auto& simple = frame.simple_roots();
  std::vector<Vec> pairs;
  for (std::size_t k = 0; k < t.P.size(); ++k) {
    const std::size_t a = simple[t.P[k]];
    const std::size_t b = simple[t.image[k]];
    pairs.push_back(d.pair(frame.root_vector(a), frame.root_vector(b)));
    pairs.push_back(d.pair(frame.root_vector(frame.negative_of(a)), frame.root_vector(frame.negative_of(b))));
  }
  Subspace graph = Subspace::span(d.dim(), pairs);
  // Close under brackets.
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const Vec br = d.bracket(pairs[i], pairs[j]);
      if (graph.contains(br)) continue;
      pairs.push_back(br);
      graph = graph + Subspace::span(d.dim(), {br});
    }
  }
  // A graph meets 0 + g trivially.
  if (graph.intersect(d.right_factor()).dim() != 0) {
    throw LagrangianError("psi_pi is not well defined");
  }
  return graph;
}

Subspace z_of(const CartanFrame& frame, const std::vector<std::size_t>& P) {
  const LieAlgebra& g = frame.algebra();
  std::vector<Vec> rows;
  for (auto k : P) rows.push_back(g.roots()[frame.simple_roots()[k]].values);
  if (rows.empty()) return g.cartan();
  const Subspace ker = rref(Matrix::from_rows(rows, g.rank())).kernel;
  std::vector<Vec> vs;
  for (const auto& c : ker.vectors()) vs.push_back(g.from_cartan(c));
  return Subspace::span(g.dim(), vs);
}

Subspace n_of(const CartanFrame& frame, const std::vector<std::size_t>& P, bool negative) {
  const LieAlgebra& g = frame.algebra();
  std::vector<Vec> pv;
  for (auto k : P) pv.push_back(g.roots()[frame.simple_roots()[k]].values);
  const Subspace span_p = Subspace::span(g.rank(), pv);
  std::vector<Vec> vs;
  for (auto r : frame.positive_roots()) {
    if (span_p.contains(g.roots()[r].values)) continue;
    vs.push_back(frame.root_vector(negative ? frame.negative_of(r) : r));
  }
  return Subspace::span(g.dim(), vs);
}

Subspace default_F(const Double& d, const CartanFrame& frame, const BDTriple& t, int sign) {
  const LieAlgebra& g = frame.algebra();
  auto perm = extend_to_gamma(frame, t);
  if (!perm) throw LagrangianError("pi does not extend to an isometry of the simple roots");
  const auto& simple = frame.simple_roots();
  // Basis of h: coroots of simple roots, then the centre.
  std::vector<Vec> src, dst;
  for (std::size_t a = 0; a < simple.size(); ++a) {
    src.push_back(frame.coroot(simple[a]));
    dst.push_back(frame.coroot(simple[(*perm)[a]]));
  }
  for (const auto& z : g.center().vectors()) {
    src.push_back(z);
    dst.push_back(z);
  }
  const Matrix srcm = Matrix::from_columns(src, g.dim());
  std::vector<Vec> vs;
  for (const auto& x : z_of(frame, t.P).vectors()) {
    auto c = solve(srcm, x);
    if (!c) throw LagrangianError("z_P is not inside h");
    Vec y(g.dim());
    for (std::size_t k = 0; k < c->size(); ++k) y = y + (*c)[k] * dst[k];
    vs.push_back(d.pair(x, Scalar(sign) * y));
  }
  return Subspace::span(d.dim(), vs);
}

LagrangianSubalgebra evens_lu(const Double& d, const CartanFrame& frame, const BDTriple& t,
                              const Subspace& F) {
  if (!is_isometry(frame, t)) throw LagrangianError("pi is not an isometry");
  std::vector<std::size_t> Pp(t.image.begin(), t.image.end());
  std::sort(Pp.begin(), Pp.end());
  const Subspace zP = z_of(frame, t.P);
  const Subspace zPp = z_of(frame, Pp);
  if (!d.box(zP, zPp).contains(F)) throw LagrangianError("F is not inside z_P + z_P'");
  if (2 * F.dim() != zP.dim() + zPp.dim() || !d.is_isotropic(F)) {
    throw LagrangianError("F is not Lagrangian in z_P + z_P'");
  }
  const std::size_t n = frame.algebra().dim();
  Subspace L = F + d.box(n_of(frame, t.P, false), Subspace(n)) + d.box(Subspace(n), n_of(frame, Pp, true)) +
               graph_of_psi(d, frame, t);
  if (!d.is_lagrangian_subalgebra(L)) throw LagrangianError("l(pi, F) is not a Lagrangian subalgebra");
  return {L, t, F};
}

SplitResult split_classify(const Double& d, const Subspace& L) {
  SplitResult r;
  const Subspace a = L.intersect(d.left_factor());
  const Subspace b = L.intersect(d.right_factor());
  r.split = a.dim() + b.dim() == L.dim();
  const std::size_t n = d.g().dim();
  std::vector<Vec> av, bv;
  for (const auto& v : a.vectors()) av.push_back(d.first(v));
  for (const auto& v : b.vectors()) bv.push_back(d.second(v));
  r.left = Subspace::span(n, av);
  r.right = Subspace::span(n, bv);
  r.gc_flag = d.meets_compact_trivially(L);
  return r;
}

GKPair gk_pair(const SamelsonSubalgebra& l_plus, const SamelsonSubalgebra& l_minus) {
  if (l_plus.frame->algebra_ptr() != l_minus.frame->algebra_ptr()) {
    throw LagrangianError("Samelson subalgebras live in different algebras");
  }
  GKPair p;
  p.l_plus = l_plus;
  p.l_minus = l_minus;
  p.d = std::make_shared<const Double>(l_plus.frame->algebra_ptr());
  p.L_plus = p.d->box(l_minus.l, l_plus.l);
  p.L_minus = p.d->box(l_minus.lbar, l_plus.l);
  p.induced = l_plus.frame->borel() == l_minus.frame->borel();
  p.canonical = l_plus.l == l_minus.l;
  p.rho_plus = l_plus.frame->weyl();
  p.rho_minus = l_minus.frame->weyl();
  for (const Subspace* L : {&p.L_plus, &p.L_minus}) {
    if (!p.d->is_lagrangian_subalgebra(*L)) throw LagrangianError("pair does not give a Lagrangian subalgebra");
    if (!p.d->meets_compact_trivially(*L)) throw LagrangianError("Lagrangian meets k + k");
  }
  return p;
}

BismutReport bismut_flat_check(const Double& d) {
  BismutReport r;
  const LieAlgebra& g = d.g();
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a) {
    const Vec x = g.basis(a);
    const Vec left = d.pair(x, zero_vec(n));
    const Vec right = d.pair(zero_vec(n), x);
    for (std::size_t b = 0; b < n; ++b) {
      const Vec y = g.basis(b);
      if (!is_zero(d.bracket(left, d.pair(zero_vec(n), y)))) r.mixed_brackets_vanish = false;
    }
    const VecCovec km = kappa_star(g, x, zero_vec(n));
    const VecCovec kp = kappa_star(g, zero_vec(n), x);
    // C_-: covector = -kappa(vector); C_+: covector = +kappa(vector).
    if (km.covec_dual != -km.vec) r.left_in_c_minus = false;
    if (kp.covec_dual != kp.vec) r.right_in_c_plus = false;
  }
  return r;
}

}  // namespace gk
