#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gk/scalar.hpp"

namespace gk {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& v);
Vec conj(const Vec& v);
/// Concatenation (a, b).
Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& v, std::size_t from, std::size_t len);

/// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vec>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;
  std::vector<Vec> row_list() const;

  Matrix transpose() const;
  Vec apply(const Vec& v) const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

class Subspace;

struct RrefResult;

/// Canonical reduced row-echelon form with leftmost pivots.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Determinant of a square matrix (Gaussian elimination).
Scalar determinant(const Matrix& m);
/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);
/// A solution x of m x = b, if one exists.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Subspace of K^n stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient) : n_(ambient), basis_(0, ambient) {}

  static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vec vector(std::size_t k) const { return basis_.row(k); }
  std::vector<Vec> vectors() const { return basis_.row_list(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v with respect to the RREF basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Vectors {y : sum_k x_k y_k = 0 for all x in this} (bilinear annihilator).
  Subspace annihilator() const;
  Subspace conj() const;
  /// Image under a linear map given by its matrix.
  Subspace image(const Matrix& m) const;
  /// Basis vectors extending this subspace to `super` (this must lie in super).
  std::vector<Vec> complement_in(const Subspace& super) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend RrefResult rref(const Matrix& m);
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  Subspace kernel;
};

bool is_eigenvector(const Matrix& m, const Vec& v, const Scalar& lambda);

}  // namespace gk
