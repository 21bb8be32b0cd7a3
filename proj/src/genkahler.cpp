#include "gk/genkahler.hpp"

namespace gk {

namespace {

const Scalar kI = Scalar::imag_unit();

CliffordElement product_of(const Clifford& cl, const std::vector<Vec>& vs) {
  CliffordElement out = cl.one();
  for (const auto& v : vs) out = cl.mul(out, cl.vec(v));
  return out;
}

// Covector kappa(x, .) in components on the standard basis.
Vec covector(const LieAlgebra& g, const Vec& x) {
  Vec xi(g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) xi[j] = g.kappa(x, g.basis(j));
  return xi;
}

Form one_form(const Vec& xi) {
  Form f;
  for (std::size_t j = 0; j < xi.size(); ++j) f.add(Mask{1} << j, xi[j]);
  return f;
}

Scalar factorial(std::size_t n) {
  Scalar f(1);
  for (std::size_t k = 2; k <= n; ++k) f = f * Scalar(static_cast<long>(k));
  return f;
}

Scalar power(const Scalar& x, std::size_t k) {
  Scalar out(1);
  for (std::size_t j = 0; j < k; ++j) out = out * x;
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

// t_{1,0} component of an element of h = t10 + t01.
Vec component_10(const LieAlgebra& g, const SamelsonSubalgebra& l, const Vec& h) {
  const auto t10 = l.t10.vectors();
  const auto t01 = l.t01().vectors();
  std::vector<Vec> cols = t10;
  cols.insert(cols.end(), t01.begin(), t01.end());
  const auto x = solve(Matrix::from_columns(cols, g.dim()), h);
  if (!x) throw GeometryError("element is not in the Cartan subalgebra");
  Vec out = zero_vec(g.dim());
  for (std::size_t k = 0; k < t10.size(); ++k) out = out + (*x)[k] * t10[k];
  return out;
}

std::string cell_name(int r, int s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

}  // namespace

PureSpinor build_pure_spinor(const Clifford& cl, const GKPair& pair, Side side, PChoice choice) {
  const Double& d = *pair.d;
  const Subspace& lbar_plus = pair.l_plus.lbar;
  const Subspace other = side == Side::Plus ? pair.l_minus.lbar : pair.l_minus.l;
  const Subspace t_other = side == Side::Plus ? pair.l_minus.t01() : pair.l_minus.t10;
  const Subspace common = lbar_plus.intersect(other);

  PureSpinor u;
  u.side = side;
  u.n = lbar_plus.dim();
  u.s = u.n - common.dim();
  const auto head = common.complement_in(lbar_plus);
  // p inside the Cartan part of `other` where possible, then inside `other`.
  std::vector<Vec> p;
  Subspace cur = common;
  for (const Subspace* src : {&t_other, &other}) {
    for (const auto& v : src->vectors()) {
      if (p.size() == u.s) break;
      if (cur.contains(v)) continue;
      p.push_back(v);
      cur = cur + Subspace::span(cur.ambient_dim(), {v});
    }
  }
  if (p.size() != u.s) throw GeometryError("could not complete the spinor basis");
  if (choice == PChoice::Alternate && !p.empty()) {
    Vec shift = zero_vec(pair.g().dim());
    for (const auto& v : common.vectors()) shift = shift + v;
    if (is_zero(shift)) {
      for (std::size_t k = 1; k < p.size(); ++k) p[k] = p[k] + p[0];
      p[0] = Scalar(2) * p[0];
    } else {
      for (auto& v : p) v = v + shift;
    }
  }
  u.generators = head;
  for (const auto& v : common.vectors()) u.generators.push_back(v);
  u.generators.insert(u.generators.end(), p.begin(), p.end());
  u.element = product_of(cl, u.generators);
  if (u.element.is_zero()) throw GeometryError("degenerate pure spinor generators");
  u.expected = side == Side::Plus ? d.box(pair.l_minus.lbar, lbar_plus) : d.box(pair.l_minus.l, lbar_plus);
  return u;
}

Subspace spinor_annihilator(const Clifford& cl, const CliffordElement& u) {
  const std::size_t n = cl.n();
  std::vector<Vec> cols;
  const Vec zero = zero_vec(n);
  for (std::size_t k = 0; k < 2 * n; ++k) {
    const Vec a = k < n ? unit_vec(n, k) : zero;
    const Vec a2 = k < n ? zero : unit_vec(n, k - n);
    cols.push_back(cl.spinor_action(a, a2, u).to_dense(n));
  }
  return rref(Matrix::from_columns(cols, cl.dim())).kernel;
}

int type_of(const Clifford& cl, const CliffordElement& u) {
  if (u.is_zero()) throw GeometryError("type of the zero element");
  return cl.star_inv(cl.dequantize(u)).min_grade();
}

std::size_t type_parity_dim(const GKPair& pair, Side side) {
  const Subspace& other = side == Side::Plus ? pair.l_minus.lbar : pair.l_minus.l;
  return pair.l_plus.lbar.intersect(other).dim();
}

bool DclSpinorReport::ok() const {
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  return !checks.empty();
}

CliffordElement samelson_spinor(const Clifford& cl, const Subspace& lbar) { return product_of(cl, lbar.vectors()); }

DclSpinorReport verify_dcl_spinor(const Clifford& cl, const GKPair& pair) {
  DclSpinorReport rep;
  const Scalar half = Scalar::rational(1, 2);
  auto check = [&](const std::string& name, const CliffordElement& u, const Vec& x, const Vec& x2) {
    IdentityCheck c;
    c.name = name;
    c.residual = cl.dcl(u) - half * cl.spinor_action(x, x2, u);
    c.ok = c.residual.is_zero() && !u.is_zero();
    rep.checks.push_back(std::move(c));
  };
  const Vec& rp = pair.rho_plus;
  const Vec& rm = pair.rho_minus;
  check("u_plus", build_pure_spinor(cl, pair, Side::Plus).element, -rm, rp);
  check("u_minus", build_pure_spinor(cl, pair, Side::Minus).element, rm, rp);
  const CliffordElement ul = samelson_spinor(cl, pair.l_plus.lbar);
  check("u_l", ul, -rp, rp);
  check("u_l_lbar", cl.mul(ul, samelson_spinor(cl, pair.l_plus.l)), rp, rp);
  return rep;
}

Scalar connection_eigenvalue(const Clifford& cl, const GKPair& pair, const PureSpinor& u, const Vec& a, const Vec& a2) {
  const LieAlgebra& g = pair.g();
  if (!cl.spinor_action(a, a2, u.element).is_zero()) throw GeometryError("element does not annihilate the spinor");
  const Vec x = u.side == Side::Plus ? -pair.rho_minus : pair.rho_minus;
  const Vec& x2 = pair.rho_plus;
  const auto shifted = Scalar::rational(1, 2) * cl.spinor_action(x, x2, u.element);
  const Scalar lambda = g.kappa(a2, x2) - g.kappa(a, x);
  if (cl.spinor_action(a, a2, shifted) != lambda * u.element) throw GeometryError("connection eigen-identity fails");
  return lambda;
}

DegreeReport degree_canonical(const Clifford& cl, const GKPair& pair, MetricSide side) {
  const LieAlgebra& g = pair.g();
  const SamelsonSubalgebra& l = side == MetricSide::Plus ? pair.l_plus : pair.l_minus;
  DegreeReport rep;
  rep.side = side;
  rep.n = l.l.dim();
  rep.rho = side == MetricSide::Plus ? pair.rho_plus : pair.rho_minus;
  rep.rho10 = component_10(g, l, rep.rho);
  rep.kappa_rho_rho = g.kappa(rep.rho, rep.rho);

  // phi_+ = kappa(theta^r, rho10_+), phi_- = -kappa(theta^l, rho10_-); phi - phibar at e.
  const Vec psi = rep.rho10 - g.conj(rep.rho10);
  const Vec phi_vec = side == MetricSide::Plus ? covector(g, psi) : -covector(g, psi);
  rep.phi = one_form(phi_vec);
  // Right-invariant: (d xi)(a, b) = -xi([a, b]); left-invariant: +xi([a, b]).
  const Scalar dsign = side == MetricSide::Plus ? Scalar(-1) : Scalar(1);
  const std::size_t N = g.dim();
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = i + 1; j < N; ++j) {
      const Vec& br = g.basis_bracket(i, j);
      Scalar v;
      for (std::size_t k = 0; k < N; ++k) {
        if (!br[k].is_zero()) v += br[k] * phi_vec[k];
      }
      rep.curvature.add((Mask{1} << i) | (Mask{1} << j), dsign * v);
    }
  }

  const DualPair dp = dual_basis(g, l.l, l.lbar);
  rep.omega = Form();
  rep.volume = Form::scalar(1);
  for (std::size_t k = 0; k < rep.n; ++k) {
    // b_k^* = kappa(bbar_k, .), bbar_k^* = kappa(b_k, .)
    const Form bk = one_form(covector(g, dp.bbar[k]));
    const Form bbk = one_form(covector(g, dp.b[k]));
    const Form pairk = cl.wedge_forms(bk, bbk);
    rep.omega += pairk;
    rep.volume = cl.wedge_forms(rep.volume, pairk);
  }
  rep.omega = (kI * Scalar::rational(1, 2)) * rep.omega;
  Form power_n1 = Form::scalar(1);
  for (std::size_t k = 0; k + 1 < rep.n; ++k) power_n1 = cl.wedge_forms(power_n1, rep.omega);
  rep.curvature_top = cl.wedge_forms(rep.curvature, power_n1);
  rep.omega_top = cl.wedge_forms(power_n1, rep.omega);

  const Mask top = static_cast<Mask>((std::size_t{1} << N) - 1);
  const Scalar vol = rep.volume.coeff(top);
  if (vol.is_zero()) throw GeometryError("degenerate volume form");
  // (F ^ omega^{n-1} / (n-1)!) / (omega^n / n!)
  rep.numerator = Scalar(static_cast<long>(rep.n)) * rep.curvature_top.coeff(top) / vol;
  rep.denominator = rep.omega_top.coeff(top) / vol;
  rep.degree = kI * Scalar::rational(1, 2) * rep.numerator / rep.denominator;

  const Scalar nf = factorial(rep.n);
  const Scalar two_n1 = power(Scalar(2), rep.n - 1);
  const Scalar expect_num = -(Scalar(2) * nf * power(kI, rep.n - 1) / two_n1) * rep.kappa_rho_rho;
  const Scalar expect_den = nf * power(kI, rep.n) / (Scalar(2) * two_n1);
  rep.chain_ok = rep.numerator == expect_num && rep.denominator == expect_den;
  return rep;
}

TauJ tau_j(const Clifford& cl, const GKPair& pair) {
  const LieAlgebra& g = pair.g();
  const DualPair dpp = dual_basis(g, pair.l_plus.l, pair.l_plus.lbar);
  const DualPair dpm = dual_basis(g, pair.l_minus.l, pair.l_minus.lbar);
  const auto n = static_cast<long>(dpp.b.size());
  const Scalar half_i = kI * Scalar::rational(1, 2);
  TauJ t;
  t.plus = CliffordElement::scalar(-(Scalar(n) * half_i));
  t.minus = CliffordElement::scalar(Scalar(n) * half_i);
  for (std::size_t j = 0; j < dpp.b.size(); ++j) {
    t.plus += half_i * cl.mul(cl.vec(dpp.b[j]), cl.vec(dpp.bbar[j]));
    t.minus -= half_i * cl.mul(cl.vec(dpm.bbar[j]), cl.vec(dpm.b[j]));
  }
  return t;
}

HodgeGrid hodge_grid(const Clifford& cl, const GKPair& pair) {
  const LieAlgebra& g = pair.g();
  HodgeGrid grid;
  grid.u = build_pure_spinor(cl, pair, Side::Plus);
  grid.n = grid.u.n;
  grid.tau = tau_j(cl, pair);
  const TauJ& t = grid.tau;
  grid.hat_plus = cl.operator_of([&](const CliffordElement& x) { return cl.mul(t.plus, x) - cl.mul(x, t.minus); });
  grid.hat_minus = cl.operator_of([&](const CliffordElement& x) { return cl.mul(t.plus, x) + cl.mul(x, t.minus); });

  const auto bp = pair.l_plus.l.vectors();
  const auto bm = pair.l_minus.l.vectors();
  const std::size_t n = grid.n;
  // Monomials of wedge l_+ times u, and monomials of wedge l_-; isotropy makes the
  // Clifford products equal to the wedge products.
  std::vector<CliffordElement> left(std::size_t{1} << n), right(std::size_t{1} << n);
  for (std::size_t m = 0; m < left.size(); ++m) {
    std::vector<Vec> vp, vm;
    for (std::size_t j = 0; j < n; ++j) {
      if (m & (std::size_t{1} << j)) {
        vp.push_back(bp[j]);
        vm.push_back(bm[j]);
      }
    }
    left[m] = cl.mul(product_of(cl, vp), grid.u.element);
    right[m] = product_of(cl, vm);
  }
  (void)g;
  const int ni = static_cast<int>(n);
  for (std::size_t mp = 0; mp < left.size(); ++mp) {
    for (std::size_t mq = 0; mq < right.size(); ++mq) {
      const int p = grade_of(static_cast<Mask>(mp));
      const int q = grade_of(static_cast<Mask>(mq));
      const int r = p + q - ni;
      const int s = p - q;
      HodgeCell& c = grid.cells[{r, s}];
      c.r = r;
      c.s = s;
      c.p = p;
      c.q = q;
      c.basis.push_back(cl.mul(left[mp], right[mq]));
    }
  }
  return grid;
}

GridReport check_grid(const Clifford& cl, const HodgeGrid& grid, bool full_rank) {
  GridReport rep;
  const std::size_t n = grid.n;
  std::vector<Vec> all;
  std::size_t rank_sum = 0;
  for (const auto& [key, cell] : grid.cells) {
    const Scalar er = kI * Scalar(cell.r);
    const Scalar es = kI * Scalar(cell.s);
    std::vector<Vec> dense;
    for (const auto& w : cell.basis) {
      if (grid.hat_plus.apply(w) != er * w || grid.hat_minus.apply(w) != es * w) {
        if (rep.eigen_ok) rep.witness = "eigenvalue mismatch in cell " + cell_name(cell.r, cell.s);
        rep.eigen_ok = false;
      }
      dense.push_back(w.to_dense(cl.n()));
    }
    const std::size_t expect = binomial(n, static_cast<std::size_t>(cell.p)) * binomial(n, static_cast<std::size_t>(cell.q));
    const std::size_t rk = rank(Matrix::from_rows(dense, cl.dim()));
    if (rk != expect || cell.basis.size() != expect) {
      if (rep.dims_ok) rep.witness = "dimension mismatch in cell " + cell_name(cell.r, cell.s);
      rep.dims_ok = false;
    }
    rank_sum += rk;
    if (full_rank) all.insert(all.end(), dense.begin(), dense.end());
  }
  rep.total_rank = full_rank ? rank(Matrix::from_rows(all, cl.dim())) : rank_sum;
  rep.direct_sum = rep.total_rank == cl.dim() && (full_rank || rep.eigen_ok);
  const auto& u = grid.u.element;
  rep.spinor_eigen_ok = grid.hat_plus.apply(u) == -(kI * Scalar(static_cast<long>(n))) * u &&
                        grid.hat_minus.apply(u).is_zero();
  return rep;
}

Decomposition split_neighbours(const HodgeGrid& grid, const CliffordElement& x, int r, int s) {
  Decomposition dec;
  const Scalar inv_2i = Scalar(1) / (Scalar(2) * kI);
  auto split = [&](const Clifford::Operator& op, const CliffordElement& y, int centre) {
    const Scalar lo = kI * Scalar(centre - 1);
    const Scalar hi = kI * Scalar(centre + 1);
    const CliffordElement opy = op.apply(y);
    CliffordElement up = inv_2i * (opy - lo * y);
    CliffordElement down = y - up;
    if (op.apply(up) != hi * up || op.apply(down) != lo * down) dec.contained = false;
    return std::make_pair(up, down);
  };
  const auto [rp, rm] = split(grid.hat_plus, x, r);
  for (const auto& [dr, y] : {std::make_pair(1, rp), std::make_pair(-1, rm)}) {
    const auto [sp, sm] = split(grid.hat_minus, y, s);
    dec.parts[{dr, 1}] = sp;
    dec.parts[{dr, -1}] = sm;
  }
  return dec;
}

GradedDclReport graded_dcl(const Clifford& cl, const HodgeGrid& grid) {
  GradedDclReport rep;
  const auto& op = cl.dcl_operator();
  auto note = [&](bool& flag, const std::string& what, int r, int s) {
    if (flag && rep.witness.empty()) rep.witness = what + " at cell " + cell_name(r, s);
    flag = false;
  };
  for (const auto& [key, cell] : grid.cells) {
    const int r = cell.r, s = cell.s;
    for (const auto& w : cell.basis) {
      ++rep.vectors;
      const Decomposition first = split_neighbours(grid, op.apply(w), r, s);
      if (!first.contained) note(rep.containment, "d^Cl leaves the neighbouring cells", r, s);
      std::map<std::pair<int, int>, Decomposition> second;
      std::map<std::pair<int, int>, CliffordElement> nine;
      for (const auto& [off, part] : first.parts) {
        if (part.is_zero()) continue;
        Decomposition d2 = split_neighbours(grid, op.apply(part), r + off.first, s + off.second);
        if (!d2.contained) note(rep.containment, "d^Cl leaves the neighbouring cells", r + off.first, s + off.second);
        for (const auto& [off2, p2] : d2.parts) nine[{off.first + off2.first, off.second + off2.second}] += p2;
        second.emplace(off, std::move(d2));
      }
      auto comp = [&](std::pair<int, int> a, std::pair<int, int> b) {
        auto it = second.find(a);
        return it == second.end() ? CliffordElement() : it->second.parts.at(b);
      };
      if (!comp({1, 1}, {1, 1}).is_zero()) note(rep.dbar_plus_sq, "dbar_+^2 != 0", r, s);
      if (!comp({1, -1}, {1, -1}).is_zero()) note(rep.dbar_minus_sq, "dbar_-^2 != 0", r, s);
      if (!(comp({1, 1}, {1, -1}) + comp({1, -1}, {1, 1})).is_zero()) {
        note(rep.dbar_anticommute, "dbar_+ dbar_- + dbar_- dbar_+ != 0", r, s);
      }
      if (!comp({-1, -1}, {-1, -1}).is_zero()) note(rep.d_plus_sq, "delta_+^2 != 0", r, s);
      if (!comp({-1, 1}, {-1, 1}).is_zero()) note(rep.d_minus_sq, "delta_-^2 != 0", r, s);
      for (const auto& [off, c] : nine) {
        if (!c.is_zero()) note(rep.nine_vanish, "bidegree component of (d^Cl)^2 != 0", r, s);
      }
    }
  }
  const int n = static_cast<int>(grid.n);
  const Decomposition du = split_neighbours(grid, op.apply(grid.u.element), -n, 0);
  rep.spinor_lands = du.contained && du.parts.at({-1, 1}).is_zero() && du.parts.at({-1, -1}).is_zero();
  return rep;
}

Matrix generalized_complex_matrix(const Double& d, const Subspace& L) {
  const Subspace Lbar = d.conj(L);
  std::vector<Vec> cols = L.vectors();
  for (const auto& v : Lbar.vectors()) cols.push_back(v);
  const std::size_t n = d.dim();
  if (cols.size() != n) throw GeometryError("L and its conjugate do not span d");
  const Matrix P = Matrix::from_columns(cols, n);
  const auto Pinv = inverse(P);
  if (!Pinv) throw GeometryError("L meets its conjugate");
  Matrix D(n, n);
  for (std::size_t k = 0; k < n; ++k) D.at(k, k) = k < L.dim() ? kI : -kI;
  return P * D * *Pinv;
}

bool torus_restriction_check(const GKPair& pair) {
  if (!pair.canonical) throw GeometryError("torus restriction needs a canonical pair");
  const Double& d = *pair.d;
  const LieAlgebra& g = pair.g();
  const Matrix Jp = generalized_complex_matrix(d, pair.L_plus);
  const Matrix Jm = generalized_complex_matrix(d, pair.L_minus);
  const SamelsonSubalgebra& l = pair.l_plus;
  // J on h: i on t10, -i on t01.
  auto J = [&](const Vec& h) {
    const Vec x = component_10(g, l, h);
    return kI * x - kI * (h - x);
  };
  const Vec zero = zero_vec(g.dim());
  bool ok = true;
  for (std::size_t c : g.cartan_indices()) {
    const Vec h = g.basis(c);
    for (int side = 0; side < 2; ++side) {
      const Vec a = side == 0 ? h : zero;
      const Vec a2 = side == 0 ? zero : h;
      const Vec v = d.pair(a, a2);
      const Vec wp = Jp.apply(v);
      const Vec wm = Jm.apply(v);
      ok = ok && wp == d.pair(J(a), J(a2)) && wm == d.pair(-J(a), J(a2));
      // Through kappa_*: J_+ is J on vectors and on covectors, J_- swaps them.
      const auto kp = kappa_star(g, d.first(wp), d.second(wp));
      const auto km = kappa_star(g, d.first(wm), d.second(wm));
      ok = ok && kp.vec == J(a2 - a) && kp.covec_dual == J(a2 + a);
      ok = ok && km.vec == J(a2 + a) && km.covec_dual == J(a2 - a);
    }
  }
  return ok;
}

}  // namespace gk
