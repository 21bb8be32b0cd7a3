#include <random>

#include "doctest.h"
#include "gk/linalg.hpp"
#include "gk/scalar.hpp"

using gk::Matrix;
using gk::Scalar;
using gk::Subspace;
using gk::Vec;

namespace {

// Independent model of Q(i)[sqrt d]: pairs (A, B) of Gaussian rationals for A + B sqrt d.
struct Gauss {
  mpq_class re, im;
};
Gauss gmul(const Gauss& a, const Gauss& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Gauss gadd(const Gauss& a, const Gauss& b) { return {a.re + b.re, a.im + b.im}; }

struct Oracle {
  Gauss a, b;
  long d;
  Oracle operator*(const Oracle& o) const {
    Gauss bd = gmul(b, o.b);
    bd.re *= d;
    bd.im *= d;
    return {gadd(gmul(a, o.a), bd), gadd(gmul(a, o.b), gmul(b, o.a)), d};
  }
  Scalar to_scalar() const { return Scalar::from_parts(a.re, a.im, b.re, b.im, static_cast<int>(d)); }
};

Oracle to_oracle(const Scalar& s, long d) {
  return {{s.coeff(0), s.coeff(1)}, {s.coeff(2), s.coeff(3)}, d};
}

Scalar random_scalar(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  auto q = [&] { return mpq_class(num(rng), den(rng)); };
  return Scalar::from_parts(q(), q(), q(), q(), d);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int d, int zero_bias) {
  std::uniform_int_distribution<int> pick(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (pick(rng) >= zero_bias) m.at(i, j) = random_scalar(rng, d);
    }
  }
  return m;
}

Scalar S(const char* text, int d = 1) { return Scalar::parse(text, d); }

}  // namespace

TEST_CASE("gaussian norm and field basics") {
  CHECK((S("1+1*i") * S("1-1*i")) == Scalar(2));
  CHECK(Scalar::imag_unit() * Scalar::imag_unit() == Scalar(-1));
  CHECK(Scalar::root(3) * Scalar::root(3) == Scalar(3));
  CHECK(Scalar::root(1) == Scalar(1));
  std::mt19937 rng(7);
  for (int k = 0; k < 50; ++k) {
    Scalar x = random_scalar(rng, 3);
    if (x.is_zero()) continue;
    CHECK(x / x == Scalar(1));
  }
}

TEST_CASE("inverse in Q(i)[sqrt 3]") {
  const Scalar one_plus_r = Scalar(1) + Scalar::root(3);
  const Scalar expected = S("-1/2+1/2*r", 3);
  CHECK(Scalar(1) / one_plus_r == expected);
  CHECK(expected * one_plus_r == Scalar(1));
}

TEST_CASE("conjugation") {
  CHECK(Scalar::imag_unit().conj() == -Scalar::imag_unit());
  const Scalar ir = Scalar::imag_unit() * Scalar::root(3);
  CHECK(ir.conj() == -ir);
  CHECK(Scalar::root(3).conj() == Scalar::root(3));
  std::mt19937 rng(11);
  for (int k = 0; k < 50; ++k) {
    Scalar x = random_scalar(rng, 3);
    Scalar y = random_scalar(rng, 3);
    CHECK(x.conj().conj() == x);
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x * x.conj()).is_real());
  }
}

TEST_CASE("multiplication agrees with an independent model") {
  std::mt19937 rng(3);
  for (int d : {1, 2, 3, 5}) {
    for (int k = 0; k < 40; ++k) {
      Scalar x = random_scalar(rng, d);
      Scalar y = random_scalar(rng, d);
      CHECK(x * y == (to_oracle(x, d) * to_oracle(y, d)).to_scalar());
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(5);
  for (int k = 0; k < 60; ++k) {
    Scalar a = random_scalar(rng, 3), b = random_scalar(rng, 3), c = random_scalar(rng, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == Scalar(1));
    Scalar acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), gk::DivisionByZero);
  CHECK_FALSE(Scalar(0).inverse().has_value());
  CHECK_THROWS_AS(Scalar::root(2) + Scalar::root(3), gk::FieldError);
  CHECK_THROWS_AS(Scalar::root(4), gk::FieldError);
  CHECK_THROWS_AS(S("1/"), gk::FieldError);
  CHECK_THROWS_AS(S("abc"), gk::FieldError);
  CHECK_THROWS_AS(S(""), gk::FieldError);
  CHECK_THROWS_AS(S("1*i*i"), gk::FieldError);
  // A rational value combines with any field.
  CHECK((Scalar(2) + Scalar::root(3)).radicand() == 3);
}

TEST_CASE("literal round trip") {
  CHECK(S("1/2+1/2*i*r", 3).str() == "1/2+1/2*i*r");
  CHECK(S("-i").str() == "-1*i");
  CHECK(S("3/6").str() == "1/2");
  CHECK(S(" 2 - 4/2 ").str() == "0");
  CHECK(S("r", 1) == Scalar(1));
  std::mt19937 rng(13);
  for (int k = 0; k < 40; ++k) {
    Scalar x = random_scalar(rng, 3);
    CHECK(S(x.str().c_str(), 3) == x);
  }
}

TEST_CASE("rref examples") {
  auto id = gk::rref(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.dim() == 0);

  auto z = gk::rref(Matrix(2, 5));
  CHECK(z.rank == 0);
  CHECK(z.kernel.dim() == 5);

  Matrix m = Matrix::from_rows({{S("1"), S("i")}, {S("i"), S("-1")}}, 2);
  auto r = gk::rref(m);
  CHECK(r.rank == 1);
  CHECK(r.kernel.dim() == 1);
  // Oracle: m (1, i) = 0 directly.
  const Vec k1{S("1"), S("i")};
  CHECK(gk::is_zero(m.apply(k1)));
  CHECK(r.kernel.contains(k1));
  // (i, 1) is not a null vector: m (i, 1) = (2i, -2).
  const Vec wrong{S("i"), S("1")};
  CHECK(m.apply(wrong) == Vec{S("2*i"), S("-2")});
  CHECK_FALSE(r.kernel.contains(wrong));
}

TEST_CASE("rref invariants on random matrices") {
  std::mt19937 rng(17);
  for (int k = 0; k < 25; ++k) {
    const std::size_t rows = 2 + static_cast<std::size_t>(k % 4);
    const std::size_t cols = 3 + static_cast<std::size_t>(k % 3);
    Matrix m = random_matrix(rng, rows, cols, 3, 5);
    // Make some rows dependent.
    if (rows > 2) {
      for (std::size_t c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c) * S("2-i") + m.at(1, c);
    }
    auto r = gk::rref(m);
    CHECK(gk::rref(r.reduced).reduced == r.reduced);
    CHECK(r.rank + r.kernel.dim() == cols);
    CHECK(gk::rank(m.transpose()) == r.rank);
    for (const auto& v : r.kernel.vectors()) CHECK(gk::is_zero(m.apply(v)));
  }
}

TEST_CASE("subspace lattice") {
  auto e = [](std::size_t k) { return gk::unit_vec(4, k); };
  Subspace a = Subspace::span(4, {e(0) + e(1), e(2)});
  Subspace b = Subspace::span(4, {e(1), e(2) + e(3)});
  CHECK(a.intersect(b).dim() == 0);
  CHECK(a.intersect(a) == a);
  CHECK((Subspace::span(4, {e(0)}) + Subspace::span(4, {e(1)})).dim() == 2);
  CHECK((a + b).dim() == 4);
  CHECK_THROWS_AS(a + Subspace(3), gk::DimensionError);

  std::mt19937 rng(19);
  for (int k = 0; k < 25; ++k) {
    std::vector<Vec> va, vb;
    const Matrix ma = random_matrix(rng, 1 + static_cast<std::size_t>(k % 4), 5, 1, 4);
    const Matrix mb = random_matrix(rng, 1 + static_cast<std::size_t>((k + 2) % 4), 5, 1, 4);
    Subspace sa = Subspace::span(5, ma.row_list());
    Subspace sb = Subspace::span(5, mb.row_list());
    if (k % 3 == 0) sb = sb + Subspace::span(5, {ma.row(0)});
    Subspace sum = sa + sb;
    Subspace cap = sa.intersect(sb);
    CHECK(sa.dim() + sb.dim() == sum.dim() + cap.dim());
    CHECK(sa.contains(cap));
    CHECK(sb.contains(cap));
    CHECK(sum.contains(sa));
    // Canonical representatives.
    CHECK(Subspace::span(5, sa.vectors()) == sa);
  }
}

TEST_CASE("coordinates and complements") {
  Subspace s = Subspace::span(3, {{S("1"), S("2"), S("0")}, {S("0"), S("1"), S("i")}});
  Vec v = Vec{S("2"), S("5"), S("i")};
  auto c = s.coordinates(v);
  REQUIRE(c.has_value());
  Vec back = gk::zero_vec(3);
  for (std::size_t k = 0; k < s.dim(); ++k) back = back + (*c)[k] * s.vector(k);
  CHECK(back == v);
  Subspace line = Subspace::span(3, {v});
  auto extra = line.complement_in(s);
  CHECK(extra.size() == 1);
  CHECK((line + Subspace::span(3, extra)) == s);
}

TEST_CASE("eigenvector predicate") {
  Matrix id = Matrix::identity(3);
  Vec v{S("1"), S("i"), S("2")};
  CHECK(gk::is_eigenvector(id, v, 1));
  CHECK_FALSE(gk::is_eigenvector(id, v, 2));
  Matrix dg(2, 2);
  dg.at(0, 0) = S("i");
  dg.at(1, 1) = S("-i");
  CHECK(gk::is_eigenvector(dg, gk::unit_vec(2, 0), S("i")));
  CHECK_THROWS_AS(gk::is_eigenvector(id, gk::zero_vec(3), 1), gk::DimensionError);
  CHECK_THROWS_AS(gk::is_eigenvector(id, gk::zero_vec(2), 1), gk::DimensionError);
}

TEST_CASE("determinant and inverse") {
  Matrix m = Matrix::from_rows({{S("2"), S("1")}, {S("i"), S("r", 3)}}, 2);
  CHECK(gk::determinant(m) == S("2*r-i", 3));
  auto inv = gk::inverse(m);
  REQUIRE(inv.has_value());
  CHECK(m * *inv == Matrix::identity(2));
  CHECK_FALSE(gk::inverse(Matrix(2, 2)).has_value());
}
