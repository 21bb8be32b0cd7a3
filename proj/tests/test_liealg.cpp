#include "doctest.h"
#include "gk/liealg.hpp"
#include "test_support.hpp"

using gk::Scalar;
using gk::Vec;
using testsupport::algebra;
using testsupport::S;

namespace {

// Oracle: on sl(m) the Killing form is 2m tr(XY), so kappa = -2m tr(XY).
// Matrices are rebuilt here from the basis labels.
using Mat = std::vector<std::vector<long>>;

Mat label_matrix(const std::string& label, int m) {
  Mat x(static_cast<std::size_t>(m), std::vector<long>(static_cast<std::size_t>(m), 0));
  const auto p = static_cast<std::size_t>(label[1] - '1');
  if (label[0] == 'h') {
    x[p][p] = 1;
    x[p + 1][p + 1] = -1;
  } else {
    x[p][static_cast<std::size_t>(label[2] - '1')] = 1;
  }
  return x;
}

long trace_product(const Mat& a, const Mat& b) {
  long t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) t += a[i][k] * b[k][i];
  }
  return t;
}

}  // namespace

TEST_CASE("kappa matches the trace oracle on sl2 and sl3") {
  for (auto [name, m] : {std::pair<std::string, int>{"A1,U1", 2}, {"A2", 3}}) {
    auto alg = algebra(name);
    const auto& labels = alg->labels();
    for (std::size_t i = 0; i < alg->dim(); ++i) {
      for (std::size_t j = 0; j < alg->dim(); ++j) {
        if (labels[i][0] == 'z' || labels[j][0] == 'z') continue;
        const long expected = -2L * m * trace_product(label_matrix(labels[i], m), label_matrix(labels[j], m));
        CHECK(alg->kappa_gram().at(i, j) == Scalar(expected));
      }
    }
  }
}

TEST_CASE("A1+U1 data") {
  auto alg = algebra("A1,U1");
  REQUIRE(alg->dim() == 4);
  // basis: h, e(=e12), f(=e21), z
  const Vec h = alg->basis(0), e = alg->basis(1), f = alg->basis(2), z = alg->basis(3);
  CHECK(alg->kappa(e, f) == Scalar(-4));
  CHECK(alg->kappa(h, h) == Scalar(-8));
  CHECK(alg->kappa(z, z) == Scalar(8));
  gk::CartanFrame frame(alg);
  REQUIRE(frame.positive_roots().size() == 1);
  const std::size_t a = frame.positive_roots()[0];
  CHECK(frame.root_vector(a) == e);
  CHECK(frame.root_vector(frame.negative_of(a)) == Scalar::rational(-1, 4) * f);
  CHECK(frame.coroot(a) == Scalar::rational(-1, 4) * h);
  CHECK(frame.weyl() == Scalar::rational(-1, 8) * h);
  CHECK(gk::weyl_norm(frame) == Scalar::rational(-1, 8));
}

TEST_CASE("torus data") {
  auto alg = algebra("T2");
  CHECK(alg->dim() == 2);
  CHECK(alg->roots().empty());
  CHECK(alg->kappa_gram() == gk::Matrix::identity(2));
  gk::CartanFrame frame(alg);
  CHECK(gk::is_zero(frame.weyl()));
  CHECK(gk::weyl_norm(frame).is_zero());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) CHECK(alg->cartan_three_form(a, b, c).is_zero());
}

TEST_CASE("A2 data") {
  auto alg = algebra("A2");
  CHECK(alg->dim() == 8);
  CHECK(alg->roots().size() == 6);
  // kappa on the Cartan: -B with B(h_i,h_i) = 12, B(h_1,h_2) = -6.
  CHECK(alg->kappa(alg->basis(0), alg->basis(0)) == Scalar(-12));
  CHECK(alg->kappa(alg->basis(0), alg->basis(1)) == Scalar(6));
  // Gram on i t = span(i h_1, i h_2) is positive definite.
  const Scalar i = Scalar::imag_unit();
  CHECK(gk::is_positive_definite(*alg, {i * alg->basis(0), i * alg->basis(1)}));
}

TEST_CASE("weyl norm agrees with the strange formula") {
  // (rho, rho) for the Killing form is dim/24 per simple factor; kappa = -B.
  for (auto [name, expected] : {std::pair<std::string, Scalar>{"A1,U1", Scalar::rational(-1, 8)},
                                {"A1,A1", Scalar::rational(-1, 4)},
                                {"A2", Scalar::rational(-1, 3)},
                                {"T2", Scalar(0)}}) {
    auto alg = algebra(name);
    gk::CartanFrame frame(alg);
    CHECK(gk::weyl_norm(frame) == expected);
  }
}

TEST_CASE("structural invariants on every test group") {
  for (const auto& name : testsupport::test_groups()) {
    CAPTURE(name);
    auto alg = algebra(name);
    const std::size_t n = alg->dim();
    bool jacobi = true, antisym = true, invariant = true, symmetric = true, lambda_alt = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        const Vec ea = alg->basis(a), eb = alg->basis(b);
        if (alg->bracket(ea, eb) != -alg->bracket(eb, ea)) antisym = false;
        if (alg->kappa(ea, eb) != alg->kappa(eb, ea)) symmetric = false;
        for (std::size_t c = 0; c < n; ++c) {
          const Vec ec = alg->basis(c);
          const Vec j = alg->bracket(ea, alg->bracket(eb, ec)) + alg->bracket(eb, alg->bracket(ec, ea)) +
                        alg->bracket(ec, alg->bracket(ea, eb));
          if (!gk::is_zero(j)) jacobi = false;
          if (!(alg->kappa(alg->bracket(ea, eb), ec) + alg->kappa(eb, alg->bracket(ea, ec))).is_zero())
            invariant = false;
          if (!(alg->cartan_three_form(a, b, c) + alg->cartan_three_form(b, a, c)).is_zero() ||
              !(alg->cartan_three_form(a, b, c) + alg->cartan_three_form(a, c, b)).is_zero())
            lambda_alt = false;
        }
      }
    }
    CHECK(jacobi);
    CHECK(antisym);
    CHECK(invariant);
    CHECK(symmetric);
    CHECK(lambda_alt);
    // Positive definiteness on k.
    const auto kb = alg->compact_basis();
    CHECK(kb.size() == n);
    CHECK(gk::is_positive_definite(*alg, kb));
    // Compact basis is fixed by conjugation; conjugation is an involutive automorphism.
    for (const auto& v : kb) CHECK(alg->conj(v) == v);
    for (std::size_t a = 0; a < n; ++a) {
      const Vec ea = alg->basis(a);
      CHECK(alg->conj(alg->conj(ea)) == ea);
      CHECK(alg->conj(Scalar::imag_unit() * ea) == -Scalar::imag_unit() * alg->conj(ea));
      for (std::size_t b = 0; b < n; ++b) {
        const Vec eb = alg->basis(b);
        CHECK(alg->conj(alg->bracket(ea, eb)) == alg->bracket(alg->conj(ea), alg->conj(eb)));
      }
    }
    // Fixed points are exactly the real span of kb: dim of {v : conj v = v} over R is n,
    // checked via conj(v) = v iff v = sum c_k kb_k with real c_k.
    gk::Matrix kbm = gk::Matrix::from_columns(kb, n);
    CHECK(gk::rank(kbm) == n);

    gk::CartanFrame frame(alg);
    CHECK(n == alg->rank() + alg->roots().size());
    for (std::size_t r = 0; r < alg->roots().size(); ++r) {
      const Vec av = frame.root_vector(r);
      for (auto k : alg->cartan_indices()) {
        const Vec hk = alg->basis(k);
        CHECK(alg->bracket(hk, av) == frame.root_value(r, hk) * av);
      }
      CHECK(alg->kappa(av, frame.root_vector(frame.negative_of(r))) == Scalar(1));
      // conj(a_alpha) lies in g_{-alpha}
      const Vec cv = alg->conj(av);
      const auto neg = frame.negative_of(r);
      CHECK(gk::Subspace::span(n, {frame.root_vector(neg)}).contains(cv));
    }
    for (auto r : frame.positive_roots()) {
      const Vec ha = frame.coroot(r);
      CHECK(alg->conj(ha) == -ha);  // h_alpha in i t
      for (auto k : alg->cartan_indices()) {
        CHECK(alg->kappa(ha, alg->basis(k)) == frame.root_value(r, alg->basis(k)));
      }
    }
  }
}

TEST_CASE("cartan three-form value on sl2") {
  auto alg = algebra("A1,U1");
  const Scalar i = Scalar::imag_unit();
  const Vec h = alg->basis(0), e = alg->basis(1), f = alg->basis(2);
  // [e - f, i(e + f)] = 2 i h and kappa(i h, 2 i h) = 16.
  CHECK(alg->kappa(i * h, alg->bracket(e - f, i * (e + f))) == Scalar(16));
}

TEST_CASE("dual bases") {
  auto alg = algebra("A1,U1");
  gk::CartanFrame frame(alg);
  const Scalar i = Scalar::imag_unit();
  const gk::Subspace t10 = gk::Subspace::span(4, {i * alg->basis(0) - i * alg->basis(3)});
  const gk::Subspace l = frame.nilradical() + t10;
  const gk::Subspace lbar = alg->conj(l);
  const auto dp = gk::dual_basis(*alg, l, lbar);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      CHECK(alg->kappa(dp.b[a], dp.bbar[b]) == Scalar(a == b ? 1 : 0));
  CHECK(lbar.contains(dp.bbar[0]));
  CHECK_THROWS_AS(gk::dual_basis(*alg, t10, t10), gk::SpecError);

  auto torus = algebra("T2");
  const auto full = gk::dual_basis(*torus, gk::Subspace::full(2), gk::Subspace::full(2));
  CHECK(full.bbar[0] == torus->basis(0));
  CHECK(full.bbar[1] == torus->basis(1));

  const auto dual = gk::dual_of_standard(*alg);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) CHECK(alg->kappa(alg->basis(a), dual[b]) == Scalar(a == b ? 1 : 0));
}

TEST_CASE("borel twists") {
  auto alg = algebra("A2");
  gk::CartanFrame std_frame(alg);
  gk::CartanFrame twisted(alg, {{2, 1, 0}});
  CHECK(twisted.weyl() == -std_frame.weyl());
  CHECK(gk::weyl_norm(twisted) == gk::weyl_norm(std_frame));
  CHECK(std_frame.simple_roots().size() == 2);
  CHECK_THROWS_AS(gk::CartanFrame(alg, {{0, 0, 1}}), gk::SpecError);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(gk::GroupSpec::parse("B2"), gk::SpecError);
  CHECK_THROWS_AS(gk::LieAlgebra(gk::GroupSpec::parse("A1")), gk::SpecError);
  CHECK_THROWS_AS(gk::LieAlgebra(gk::GroupSpec::parse("A1,A2")), gk::SpecError);
  gk::GroupSpec bad = gk::GroupSpec::parse("T2");
  bad.center_gram = gk::Matrix::from_rows({{S("1"), S("2")}, {S("2"), S("1")}}, 2);
  CHECK_THROWS_AS(gk::LieAlgebra{bad}, gk::SpecError);
  gk::GroupSpec odd = gk::GroupSpec::parse("A1");
  odd.allow_odd = true;
  CHECK(gk::LieAlgebra(odd).dim() == 3);
  CHECK(gk::GroupSpec::parse("A1,U1").name() == "A1,U1");
  CHECK(gk::GroupSpec::parse("T2").name() == "T2");
}
