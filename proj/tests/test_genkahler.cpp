#include <random>

#include "doctest.h"
#include "gk/genkahler.hpp"
#include "gk/presets.hpp"
#include "test_support.hpp"

using gk::CliffordElement;
using gk::Scalar;
using gk::Subspace;
using gk::Vec;
using testsupport::algebra;

namespace {

const Scalar I = Scalar::imag_unit();

gk::GKPair pair_of(const std::shared_ptr<const gk::LieAlgebra>& g, gk::Preset p) {
  gk::PairChoice c;
  c.preset = p;
  return gk::make_pair(g, c);
}

bool proportional(const CliffordElement& a, const CliffordElement& b, std::size_t n) {
  return gk::rank(gk::Matrix::from_rows({a.to_dense(n), b.to_dense(n)}, std::size_t{1} << n)) == 1;
}

}  // namespace

TEST_CASE("pure spinors: annihilator, type parity, choice independence") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    gk::Clifford cl(g);
    for (auto preset : gk::all_presets()) {
      CAPTURE(name);
      CAPTURE(gk::preset_name(preset));
      const auto pair = pair_of(g, preset);
      const std::size_t n = g->dim() / 2;
      for (auto side : {gk::Side::Plus, gk::Side::Minus}) {
        const auto u = gk::build_pure_spinor(cl, pair, side);
        CHECK(u.generators.size() == n + u.s);
        const Subspace ann = gk::spinor_annihilator(cl, u.element);
        CHECK(ann.dim() == 2 * n);
        CHECK(ann == u.expected);
        CHECK(pair.d->is_lagrangian_subalgebra(ann));
        const int type = gk::type_of(cl, u.element);
        CHECK(type % 2 == static_cast<int>(gk::type_parity_dim(pair, side) % 2));
        // Another complement p gives the same line.
        const auto u2 = gk::build_pure_spinor(cl, pair, side, gk::PChoice::Alternate);
        CHECK(proportional(u.element, u2.element, cl.n()));
        CHECK(gk::spinor_annihilator(cl, u2.element) == ann);
        // Rescaling changes nothing.
        const auto scaled = Scalar::from_parts(2, -3, 0, 0, 1) * u.element;
        CHECK(gk::spinor_annihilator(cl, scaled) == ann);
        CHECK(gk::type_of(cl, scaled) == type);
      }
      // The plus spinor defines the conjugate of L_+.
      CHECK(gk::build_pure_spinor(cl, pair, gk::Side::Plus).expected == pair.d->conj(pair.L_plus));
      CHECK(gk::build_pure_spinor(cl, pair, gk::Side::Minus).expected == pair.d->conj(pair.L_minus));
    }
  }
}

TEST_CASE("type examples") {
  {
    auto g = algebra("T2");
    gk::Clifford cl(g);
    const auto u = gk::build_pure_spinor(cl, pair_of(g, gk::Preset::Canonical), gk::Side::Plus);
    CHECK(u.s == 0);
    CHECK(gk::type_of(cl, u.element) == 1);
    for (const Scalar sc : {Scalar(3), I}) {
      gk::Clifford c2(g);
      c2.set_mu_scale(sc);
      CHECK(gk::type_of(c2, u.element) == 1);
    }
    // induced pair: l_- = t01, the plus structure is of symplectic type.
    const auto u1 = gk::build_pure_spinor(cl, pair_of(g, gk::Preset::InducedPair1), gk::Side::Plus);
    CHECK(gk::type_of(cl, u1.element) == 0);
  }
  {
    auto g = algebra("A1,U1");
    gk::Clifford cl(g);
    const auto u = gk::build_pure_spinor(cl, pair_of(g, gk::Preset::Canonical), gk::Side::Plus);
    CHECK(u.generators.size() == 2);
    CHECK(gk::type_of(cl, u.element) % 2 == 0);
  }
}

TEST_CASE("d^Cl on pure spinors") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    gk::Clifford cl(g);
    for (auto preset : gk::all_presets()) {
      CAPTURE(name);
      CAPTURE(gk::preset_name(preset));
      const auto pair = pair_of(g, preset);
      const auto rep = gk::verify_dcl_spinor(cl, pair);
      CHECK(rep.checks.size() == 4);
      for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.ok);
      }
      // Calabi-Yau dichotomy.
      const bool closed = cl.dcl(gk::build_pure_spinor(cl, pair, gk::Side::Plus).element).is_zero();
      const bool closed_minus = cl.dcl(gk::build_pure_spinor(cl, pair, gk::Side::Minus).element).is_zero();
      CHECK(closed == g->is_abelian());
      CHECK(closed_minus == g->is_abelian());
    }
  }
}

TEST_CASE("connection eigenvalue") {
  auto g = algebra("A1,U1");
  gk::Clifford cl(g);
  const auto pair = pair_of(g, gk::Preset::Canonical);
  const auto u = gk::build_pure_spinor(cl, pair, gk::Side::Plus);
  const Subspace ann = gk::spinor_annihilator(cl, u.element);
  const gk::Double& d = *pair.d;
  // Root directions: lbar contains f = e21, which is kappa-orthogonal to rho.
  const Vec f = g->basis(2);
  CHECK(g->kappa(f, pair.rho_plus).is_zero());
  CHECK(gk::connection_eigenvalue(cl, pair, u, f, gk::zero_vec(4)) == Scalar(0));
  CHECK(gk::connection_eigenvalue(cl, pair, u, gk::zero_vec(4), f) == Scalar(0));
  // Cartan direction t01.
  const Vec t01 = pair.l_plus.t01().vector(0);
  const Scalar lam = gk::connection_eigenvalue(cl, pair, u, gk::zero_vec(4), t01);
  CHECK(lam == g->kappa(t01, pair.rho_plus));
  CHECK_FALSE(lam.is_zero());
  // Linearity on random elements of the annihilator.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-3, 3);
  for (int k = 0; k < 10; ++k) {
    Vec x = gk::zero_vec(8), y = gk::zero_vec(8);
    for (const auto& v : ann.vectors()) {
      x = x + Scalar(num(rng)) * v;
      y = y + Scalar(num(rng)) * v;
    }
    const Scalar c = Scalar::from_parts(num(rng), num(rng), 0, 0, 1);
    const Vec z = x + c * y;
    const auto ev = [&](const Vec& w) { return gk::connection_eigenvalue(cl, pair, u, d.first(w), d.second(w)); };
    CHECK(ev(z) == ev(x) + c * ev(y));
    const Vec w = x;
    CHECK(ev(w) == g->kappa(d.first(w) + d.second(w), pair.rho_plus));
  }
  CHECK_THROWS_AS(gk::connection_eigenvalue(cl, pair, u, gk::zero_vec(4), g->basis(1)), gk::GeometryError);
}

TEST_CASE("canonical degree") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    gk::Clifford cl(g);
    for (auto preset : gk::all_presets()) {
      CAPTURE(name);
      CAPTURE(gk::preset_name(preset));
      const auto pair = pair_of(g, preset);
      for (auto side : {gk::MetricSide::Plus, gk::MetricSide::Minus}) {
        const auto rep = gk::degree_canonical(cl, pair, side);
        CHECK(rep.chain_ok);
        CHECK(rep.ok());
        CHECK(rep.kappa_rho_rho == gk::weyl_norm(gk::CartanFrame(g)));
        CHECK(rep.degree.is_rational());
      }
    }
  }
  auto g = algebra("A1,U1");
  gk::Clifford cl(g);
  const auto rep = gk::degree_canonical(cl, pair_of(g, gk::Preset::Canonical), gk::MetricSide::Plus);
  CHECK(rep.kappa_rho_rho == Scalar::rational(-1, 8));
  CHECK(rep.degree == Scalar::rational(1, 4));
  auto t = algebra("T2");
  gk::Clifford ct(t);
  CHECK(gk::degree_canonical(ct, pair_of(t, gk::Preset::Canonical), gk::MetricSide::Plus).degree.is_zero());
}

TEST_CASE("tau_J against the adjoint oracle") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    gk::Clifford cl(g);
    for (auto preset : {gk::Preset::Canonical, gk::Preset::OppositeBorel}) {
      CAPTURE(name);
      const auto pair = pair_of(g, preset);
      const auto t = gk::tau_j(cl, pair);
      CHECK(t.plus.parity_part(1).is_zero());
      CHECK(t.minus.parity_part(1).is_zero());
      // [tau_J, a] = J a with J = i on l, -i on lbar.
      for (const auto* l : {&pair.l_plus, &pair.l_minus}) {
        const auto& tau = l == &pair.l_plus ? t.plus : t.minus;
        for (const auto& b : l->l.vectors()) CHECK(cl.mul(tau, cl.vec(b)) - cl.mul(cl.vec(b), tau) == I * cl.vec(b));
        for (const auto& b : l->lbar.vectors()) CHECK(cl.mul(tau, cl.vec(b)) - cl.mul(cl.vec(b), tau) == -I * cl.vec(b));
      }
    }
  }
}

TEST_CASE("hodge grid and graded d^Cl") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    gk::Clifford cl(g);
    for (auto preset : gk::all_presets()) {
      CAPTURE(name);
      CAPTURE(gk::preset_name(preset));
      const auto pair = pair_of(g, preset);
      const auto grid = gk::hodge_grid(cl, pair);
      const std::size_t n = grid.n;
      CHECK(grid.cells.size() == (n + 1) * (n + 1));
      const auto rep = gk::check_grid(cl, grid, true);
      CHECK(rep.eigen_ok);
      CHECK(rep.dims_ok);
      CHECK(rep.direct_sum);
      CHECK(rep.total_rank == cl.dim());
      CHECK(rep.spinor_eigen_ok);
      const auto gd = gk::graded_dcl(cl, grid);
      CAPTURE(gd.witness);
      CHECK(gd.ok());
      CHECK(gd.vectors == cl.dim());
    }
  }
  // A1+U1 cell dimensions 1,2,1 per axis.
  auto g = algebra("A1,U1");
  gk::Clifford cl(g);
  const auto grid = gk::hodge_grid(cl, pair_of(g, gk::Preset::Canonical));
  CHECK(grid.cells.at({-2, 0}).basis.size() == 1);
  CHECK(grid.cells.at({-1, 1}).basis.size() == 2);
  CHECK(grid.cells.at({0, 0}).basis.size() == 4);
  CHECK(grid.cells.at({2, 0}).basis.size() == 1);
}

TEST_CASE("torus restriction") {
  for (const std::string name : {"T2", "A1,U1", "A1,A1", "A2"}) {
    auto g = algebra(name);
    CHECK(gk::torus_restriction_check(pair_of(g, gk::Preset::Canonical)));
    CHECK_THROWS_AS(gk::torus_restriction_check(pair_of(g, gk::Preset::InducedPair1)), gk::GeometryError);
  }
}
