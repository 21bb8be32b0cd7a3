#include "gk/linalg.hpp"

#include <utility>

namespace gk {

namespace {

void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

struct Echelon {
  std::vector<Vec> rows;  // nonzero rows only, in RREF
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan with leftmost pivots, skipping zero entries.
Echelon reduce(std::vector<Vec> rows, std::size_t cols) {
  Echelon out;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < rows.size(); ++c) {
    std::size_t sel = rows.size();
    for (std::size_t r = prow; r < rows.size(); ++r) {
      if (!rows[r][c].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == rows.size()) continue;
    std::swap(rows[prow], rows[sel]);
    Vec& pr = rows[prow];
    if (!pr[c].is_one()) {
      const Scalar inv = pr[c].inv();
      for (std::size_t k = c; k < cols; ++k) {
        if (!pr[k].is_zero()) pr[k] = pr[k] * inv;
      }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == prow || rows[r][c].is_zero()) continue;
      const Scalar f = -rows[r][c];
      Vec& row = rows[r];
      for (std::size_t k = c; k < cols; ++k) {
        if (!pr[k].is_zero()) row[k].add_product(f, pr[k]);
      }
    }
    out.pivots.push_back(c);
    ++prow;
  }
  rows.resize(prow);
  out.rows = std::move(rows);
  return out;
}

}  // namespace

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t k) {
  Vec v(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) r[k] += b[k];
  }
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r = a;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!b[k].is_zero()) r[k] -= b[k];
  }
  return r;
}

Vec operator-(const Vec& a) {
  Vec r = a;
  for (auto& x : r) x = -x;
  return r;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) r[k] = s * v[k];
  }
  return r;
}

Vec conj(const Vec& v) {
  Vec r = v;
  for (auto& x : r) x = x.conj();
  return r;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec slice(const Vec& v, std::size_t from, std::size_t len) {
  if (from + len > v.size()) throw DimensionError("slice out of range");
  return Vec(v.begin() + static_cast<std::ptrdiff_t>(from),
             v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  if (r >= rows_) throw DimensionError("row index out of range");
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  if (c >= cols_) throw DimensionError("column index out of range");
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Vec> Matrix::row_list() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector dimension mismatch");
  Vec out(rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& x = at(r, c);
      if (!x.is_zero()) out[r].add_product(x, v[c]);
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
  Matrix p(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        const Scalar& y = o.at(k, c);
        if (!y.is_zero()) p.at(r, c).add_product(x, y);
      }
    }
  }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!o.a_[k].is_zero()) s.a_[k] += o.a_[k];
  }
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum dimension mismatch");
  Matrix s = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (!o.a_[k].is_zero()) s.a_[k] -= o.a_[k];
  }
  return s;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

RrefResult rref(const Matrix& m) {
  Echelon e = reduce(m.row_list(), m.cols());
  RrefResult res;
  res.rank = e.rows.size();
  res.pivots = e.pivots;
  res.reduced = Matrix(m.rows(), m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) res.reduced.at(r, c) = e.rows[r][c];
  }
  std::vector<Vec> kernel;
  std::size_t p = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (p < e.pivots.size() && e.pivots[p] == f) {
      ++p;
      continue;
    }
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    kernel.push_back(std::move(v));
  }
  res.kernel = Subspace::span(m.cols(), kernel);
  return res;
}

std::size_t rank(const Matrix& m) { return reduce(m.row_list(), m.cols()).rows.size(); }

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  std::vector<Vec> a = m.row_list();
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = n;
    for (std::size_t r = c; r < n; ++r) {
      if (!a[r][c].is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel == n) return 0;
    if (sel != c) {
      std::swap(a[sel], a[c]);
      det = -det;
    }
    det *= a[c][c];
    const Scalar inv = a[c][c].inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const Scalar f = -(a[r][c] * inv);
      for (std::size_t k = c; k < n; ++k) {
        if (!a[c][k].is_zero()) a[r][k].add_product(f, a[c][k]);
      }
    }
  }
  return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vec> rows = m.row_list();
  for (std::size_t r = 0; r < n; ++r) {
    rows[r].resize(2 * n);
    rows[r][n + r] = 1;
  }
  Echelon e = reduce(std::move(rows), 2 * n);
  if (e.rows.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = e.rows[r][n + c];
  }
  return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw DimensionError("solve dimension mismatch");
  std::vector<Vec> rows = m.row_list();
  for (std::size_t r = 0; r < rows.size(); ++r) rows[r].push_back(b[r]);
  Echelon e = reduce(std::move(rows), m.cols() + 1);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = e.rows[r][m.cols()];
  return x;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionError("spanning vector has wrong length");
  }
  Echelon e = reduce(vectors, ambient);
  Subspace s(ambient);
  s.basis_ = Matrix::from_rows(e.rows, ambient);
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = Matrix::identity(ambient);
  for (std::size_t k = 0; k < ambient; ++k) s.pivots_.push_back(k);
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != n_) throw DimensionError("vector has wrong ambient dimension");
  Vec coords(dim());
  Vec rest = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar c = rest[pivots_[r]];
    coords[r] = c;
    if (c.is_zero()) continue;
    const Scalar f = -c;
    for (std::size_t k = pivots_[r]; k < n_; ++k) {
      const Scalar& b = basis_.at(r, k);
      if (!b.is_zero()) rest[k].add_product(f, b);
    }
  }
  if (!gk::is_zero(rest)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.n_ != n_) throw DimensionError("subspace ambient dimension mismatch");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.vector(r))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw DimensionError("subspace ambient dimension mismatch");
  std::vector<Vec> rows = basis_.row_list();
  for (auto& v : o.basis_.row_list()) rows.push_back(std::move(v));
  return span(n_, rows);
}

Subspace Subspace::annihilator() const { return rref(basis_).kernel; }

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw DimensionError("subspace ambient dimension mismatch");
  std::vector<Vec> constraints = annihilator().vectors();
  for (auto& v : o.annihilator().vectors()) constraints.push_back(std::move(v));
  return rref(Matrix::from_rows(constraints, n_)).kernel;
}

Subspace Subspace::conj() const {
  std::vector<Vec> rows;
  for (const auto& v : vectors()) rows.push_back(gk::conj(v));
  return span(n_, rows);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != n_) throw DimensionError("image: matrix does not act on this space");
  std::vector<Vec> rows;
  for (const auto& v : vectors()) rows.push_back(m.apply(v));
  return span(m.rows(), rows);
}

std::vector<Vec> Subspace::complement_in(const Subspace& super) const {
  if (!super.contains(*this)) throw DimensionError("complement_in: not a subspace of super");
  std::vector<Vec> out;
  Subspace cur = *this;
  for (const auto& v : super.vectors()) {
    if (cur.contains(v)) continue;
    out.push_back(v);
    cur = cur + span(n_, {v});
  }
  return out;
}

bool is_eigenvector(const Matrix& m, const Vec& v, const Scalar& lambda) {
  if (m.rows() != m.cols()) throw DimensionError("eigenvector test needs a square matrix");
  if (v.size() != m.cols()) throw DimensionError("eigenvector length mismatch");
  if (is_zero(v)) throw DimensionError("zero vector is not an eigenvector candidate");
  return m.apply(v) == lambda * v;
}

}  // namespace gk
