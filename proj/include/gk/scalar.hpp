#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gk {

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public FieldError {
 public:
  DivisionByZero() : FieldError("division by zero in Q(i)[sqrt d]") {}
};

/// Exact element c0 + c1*i + c2*r + c3*i*r of Q(i)[r], r = sqrt(d).
///
/// The radicand d is carried by the value. Elements with c2 = c3 = 0 are
/// d-agnostic and combine with any field; mixing two different radicands
/// raises FieldError. With d = 1 the sqrt coefficients are folded into
/// c0/c1, so the canonical form is always coefficient-wise comparable.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : c_{mpq_class(v), 0, 0, 0} {}  // NOLINT(implicit)
  explicit Scalar(const mpq_class& re) : c_{re, 0, 0, 0} {}

  static Scalar rational(long num, long den = 1);
  static Scalar from_parts(const mpq_class& c0, const mpq_class& c1,
                           const mpq_class& c2, const mpq_class& c3, int d);
  static Scalar imag_unit();
  /// sqrt(d); requires d squarefree and positive.
  static Scalar root(int d);

  const mpq_class& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  int radicand() const { return d_; }

  bool is_zero() const {
    return sgn(c_[0]) == 0 && sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
  }
  bool is_rational() const { return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0; }
  /// Fixed by complex conjugation (i -> -i).
  bool is_real() const { return sgn(c_[1]) == 0 && sgn(c_[3]) == 0; }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  Scalar conj() const;
  Scalar real_part() const;
  Scalar imag_part() const;

  std::optional<Scalar> inverse() const;
  /// Throws DivisionByZero.
  Scalar inv() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }
  /// this += a * b without temporaries for the common rational cases.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Sign of a rational value; throws FieldError otherwise.
  int rational_sign() const;

  /// "p/q", "p/q*i", "p/q*r", "p/q*i*r" terms joined by their signs; "0" for zero.
  std::string str() const;
  /// Inverse of str(). `d` supplies the radicand for terms carrying r.
  static Scalar parse(std::string_view text, int d);

 private:
  void normalize();
  static int merge_radicand(int a, int b);

  std::array<mpq_class, 4> c_{};
  int d_ = 1;
};

bool is_squarefree(long d);

}  // namespace gk
