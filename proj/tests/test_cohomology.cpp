#include "doctest.h"
#include "gk/cohomology.hpp"
#include "gk/presets.hpp"
#include "test_support.hpp"

using gk::Scalar;
using gk::Subspace;
using gk::Vec;
using testsupport::algebra;

namespace {

std::vector<std::size_t> binomials(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(gk::binomial(n, k));
  return out;
}

// Abstract algebra on K^m from structure constants, independent of LieAlgebra.
gk::Bracket from_table(std::vector<std::vector<Vec>> table) {
  return [table](const Vec& a, const Vec& b) {
    Vec out = gk::zero_vec(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        if (a[i].is_zero() || b[j].is_zero()) continue;
        out = out + (a[i] * b[j]) * table[i][j];
      }
    }
    return out;
  };
}

std::vector<Vec> standard(std::size_t m) {
  std::vector<Vec> out;
  for (std::size_t k = 0; k < m; ++k) out.push_back(gk::unit_vec(m, k));
  return out;
}

}  // namespace

TEST_CASE("CE oracles on abstract algebras") {
  using gk::unit_vec;
  const Vec z3 = gk::zero_vec(3);
  // Abelian: binomials.
  {
    std::vector<std::vector<Vec>> t(4, std::vector<Vec>(4, gk::zero_vec(4)));
    auto ce = gk::ce_complex(standard(4), from_table(t));
    CHECK(ce.betti() == binomials(4));
  }
  // Heisenberg [x, y] = z: Betti numbers (1, 2, 2, 1).
  {
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, z3));
    t[0][1] = unit_vec(3, 2);
    t[1][0] = -unit_vec(3, 2);
    auto ce = gk::ce_complex(standard(3), from_table(t));
    CHECK(ce.d_squared_zero());
    CHECK(ce.betti() == std::vector<std::size_t>{1, 2, 2, 1});
  }
  // sl2 with [h,e] = 2e, [h,f] = -2f, [e,f] = h: Betti numbers (1, 0, 0, 1).
  {
    std::vector<std::vector<Vec>> t(3, std::vector<Vec>(3, z3));
    t[0][1] = Scalar(2) * unit_vec(3, 1);
    t[1][0] = Scalar(-2) * unit_vec(3, 1);
    t[0][2] = Scalar(-2) * unit_vec(3, 2);
    t[2][0] = Scalar(2) * unit_vec(3, 2);
    t[1][2] = unit_vec(3, 0);
    t[2][1] = -unit_vec(3, 0);
    auto ce = gk::ce_complex(standard(3), from_table(t));
    CHECK(ce.d_squared_zero());
    CHECK(ce.betti() == std::vector<std::size_t>{1, 0, 0, 1});
  }
  // Two-dimensional non-abelian [x, y] = y: (1, 1, 0).
  {
    std::vector<std::vector<Vec>> t(2, std::vector<Vec>(2, gk::zero_vec(2)));
    t[0][1] = unit_vec(2, 1);
    t[1][0] = -unit_vec(2, 1);
    CHECK(gk::ce_complex(standard(2), from_table(t)).betti() == std::vector<std::size_t>{1, 1, 0});
  }
}

TEST_CASE("CE of g and of subalgebras") {
  // Whole algebras: H*(sl2 + u1) = H*(sl2) (x) H*(u1).
  auto g = algebra("A1,U1");
  auto ce = gk::ce_complex(*g, Subspace::full(4));
  CHECK(ce.d_squared_zero());
  CHECK(ce.betti() == std::vector<std::size_t>{1, 1, 0, 1, 1});
  auto a2 = algebra("A2");
  // sl3: exterior algebra on generators of degree 3 and 5.
  CHECK(gk::ce_cohomology(*a2, Subspace::full(8)) == std::vector<std::size_t>{1, 0, 0, 1, 0, 1, 0, 0, 1});
  // Non-subalgebra rejected.
  CHECK_THROWS_AS(gk::ce_cohomology(*g, Subspace::span(4, {g->basis(1), g->basis(2)})), gk::CohomologyError);
}

TEST_CASE("lbar cohomology, pages, total, Kunneth, Picard") {
  for (const auto& name : testsupport::test_groups()) {
    auto g = algebra(name);
    const std::size_t r = g->rank() / 2;
    for (auto preset : gk::all_presets()) {
      CAPTURE(name);
      CAPTURE(gk::preset_name(preset));
      gk::PairChoice c;
      c.preset = preset;
      const auto pair = gk::make_pair(g, c);
      auto ce = gk::ce_complex(*g, pair.l_plus.lbar);
      CHECK(ce.d_squared_zero());
      std::vector<std::size_t> expect_l = binomials(r);
      expect_l.resize(ce.m + 1, 0);
      CHECK(ce.betti() == expect_l);

      const auto page = gk::e2_page(gk::e1_page(pair));
      CHECK(page.d1_squared_zero());
      for (const auto& [pq, dim] : page.e1) CHECK(dim == gk::binomial(page.n, pq.first) * gk::binomial(r, pq.second));
      for (const auto& [pq, dim] : page.e2) CHECK(dim == gk::binomial(r, pq.first) * gk::binomial(r, pq.second));
      CHECK(page.e2_total() == (std::size_t{1} << (2 * r)));
      // d1 on q = 0 is the CE differential of lbar_+.
      for (std::size_t p = 0; p < page.n; ++p) CHECK(page.d1.at({p, 0}) == ce.d[p]);

      const auto total = gk::total_cohomology(pair);
      std::vector<std::size_t> expect_t = binomials(2 * r);
      expect_t.resize(total.size(), 0);
      CHECK(total == expect_t);
      // Kunneth for lbar_- [+] lbar_+.
      const auto hm = gk::ce_cohomology(*g, pair.l_minus.lbar);
      CHECK(gk::convolve(hm, ce.betti()) == total);
      // E2 agrees with the total by degree, and the swapped sequence has the same total.
      auto by_deg = page.e2_by_degree();
      by_deg.resize(total.size(), 0);
      CHECK(by_deg == total);
      const auto swapped = gk::e2_page(gk::e1_page(pair, true));
      CHECK(swapped.e2_total() == page.e2_total());

      const auto pic = gk::picard_report(pair);
      CHECK(pic.r == r);
      CHECK(pic.ok());
    }
  }
}
