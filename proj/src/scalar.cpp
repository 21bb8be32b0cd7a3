#include "gk/scalar.hpp"

#include <cctype>
#include <vector>

namespace gk {

namespace {

// Product table of the basis (1, i, r, ir): index of the result and its
// factor, where the factor is +-1 or +-d (encoded as 2 / -2).
struct TableEntry {
  int target;
  int factor;
};

constexpr TableEntry kTable[4][4] = {
    {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
    {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
    {{2, 1}, {3, 1}, {0, 2}, {1, 2}},
    {{3, 1}, {2, -1}, {1, 2}, {0, -2}},
};

const char* const kSuffix[4] = {"", "*i", "*r", "*i*r"};

}  // namespace

bool is_squarefree(long d) {
  if (d <= 0) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Scalar s;
  s.c_[0] = mpq_class(num, den);
  s.c_[0].canonicalize();
  return s;
}

Scalar Scalar::from_parts(const mpq_class& c0, const mpq_class& c1, const mpq_class& c2,
                          const mpq_class& c3, int d) {
  if (!is_squarefree(d)) throw FieldError("radicand must be a squarefree positive integer");
  Scalar s;
  s.c_ = {c0, c1, c2, c3};
  for (auto& c : s.c_) c.canonicalize();
  s.d_ = d;
  s.normalize();
  return s;
}

Scalar Scalar::imag_unit() { return from_parts(0, 1, 0, 0, 1); }

Scalar Scalar::root(int d) { return from_parts(0, 0, 1, 0, d); }

void Scalar::normalize() {
  if (d_ == 1) {
    if (sgn(c_[2]) != 0) {
      c_[0] += c_[2];
      c_[2] = 0;
    }
    if (sgn(c_[3]) != 0) {
      c_[1] += c_[3];
      c_[3] = 0;
    }
  } else if (sgn(c_[2]) == 0 && sgn(c_[3]) == 0) {
    d_ = 1;
  }
}

int Scalar::merge_radicand(int a, int b) {
  if (a == 1) return b;
  if (b == 1 || a == b) return a;
  throw FieldError("scalars from different quadratic fields combined");
}

Scalar Scalar::conj() const {
  Scalar s = *this;
  s.c_[1] = -s.c_[1];
  s.c_[3] = -s.c_[3];
  return s;
}

Scalar Scalar::real_part() const {
  Scalar s = *this;
  s.c_[1] = 0;
  s.c_[3] = 0;
  s.normalize();
  return s;
}

Scalar Scalar::imag_part() const {
  Scalar s;
  s.c_[0] = c_[1];
  s.c_[2] = c_[3];
  s.d_ = d_;
  s.normalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& c : s.c_) c = -c;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merge_radicand(d_, o.d_);
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(o.c_[k]) != 0) c_[k] += o.c_[k];
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merge_radicand(d_, o.d_);
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(o.c_[k]) != 0) c_[k] -= o.c_[k];
  }
  normalize();
  return *this;
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  const int d = merge_radicand(merge_radicand(d_, a.d_), b.d_);
  d_ = d;
  mpq_class t;
  for (std::size_t k = 0; k < 4; ++k) {
    if (sgn(a.c_[k]) == 0) continue;
    for (std::size_t l = 0; l < 4; ++l) {
      if (sgn(b.c_[l]) == 0) continue;
      const TableEntry e = kTable[k][l];
      mpq_mul(t.get_mpq_t(), a.c_[k].get_mpq_t(), b.c_[l].get_mpq_t());
      auto& dst = c_[static_cast<std::size_t>(e.target)];
      switch (e.factor) {
        case 1: dst += t; break;
        case -1: dst -= t; break;
        case 2: dst += t * d; break;
        default: dst -= t * d; break;
      }
    }
  }
  normalize();
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar s;
  s.add_product(a, b);
  return s;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.c_[0] == b.c_[0] && a.c_[1] == b.c_[1] && a.c_[2] == b.c_[2] &&
         a.c_[3] == b.c_[3] && (a.d_ == b.d_ || (sgn(a.c_[2]) == 0 && sgn(a.c_[3]) == 0));
}

std::optional<Scalar> Scalar::inverse() const {
  if (is_zero()) return std::nullopt;
  // x = A + B r; x * (A - B r) = A^2 - d B^2 lies in Q(i).
  Scalar r_conj = *this;
  r_conj.c_[2] = -r_conj.c_[2];
  r_conj.c_[3] = -r_conj.c_[3];
  const Scalar norm_r = *this * r_conj;
  // norm_r = a + b i
  const mpq_class mod2 = norm_r.c_[0] * norm_r.c_[0] + norm_r.c_[1] * norm_r.c_[1];
  Scalar inv_norm;
  inv_norm.c_[0] = norm_r.c_[0] / mod2;
  inv_norm.c_[1] = -norm_r.c_[1] / mod2;
  return r_conj * inv_norm;
}

Scalar Scalar::inv() const {
  auto r = inverse();
  if (!r) throw DivisionByZero();
  return *r;
}

int Scalar::rational_sign() const {
  if (!is_rational()) throw FieldError("sign of a non-rational scalar");
  return sgn(c_[0]);
}

std::string Scalar::str() const {
  std::string out;
  for (std::size_t k = 0; k < 4; ++k) {
    const int s = sgn(c_[k]);
    if (s == 0) continue;
    if (out.empty()) {
      if (s < 0) out += '-';
    } else {
      out += s < 0 ? '-' : '+';
    }
    out += mpq_class(abs(c_[k])).get_str();
    out += kSuffix[k];
  }
  return out.empty() ? "0" : out;
}

Scalar Scalar::parse(std::string_view text, int d) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw FieldError("empty scalar literal");

  // Split at top-level signs (a sign directly after '*' or '/' is not a split).
  std::vector<std::string> terms;
  std::string cur;
  for (std::size_t pos = 0; pos < t.size(); ++pos) {
    const char ch = t[pos];
    if ((ch == '+' || ch == '-') && pos > 0 && t[pos - 1] != '*' && t[pos - 1] != '/') {
      terms.push_back(cur);
      cur.clear();
    }
    cur += ch;
  }
  terms.push_back(cur);

  std::array<mpq_class, 4> c{};
  for (std::string term : terms) {
    int sign = 1;
    while (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -sign;
      term.erase(0, 1);
    }
    if (term.empty()) throw FieldError("malformed scalar literal: " + std::string(text));
    bool has_i = false;
    bool has_r = false;
    std::string number;
    std::size_t start = 0;
    while (start <= term.size()) {
      std::size_t star = term.find('*', start);
      std::string factor = term.substr(start, star == std::string::npos ? std::string::npos
                                                                       : star - start);
      if (factor == "i") {
        if (has_i) throw FieldError("repeated i in literal: " + std::string(text));
        has_i = true;
      } else if (factor == "r") {
        if (has_r) throw FieldError("repeated r in literal: " + std::string(text));
        has_r = true;
      } else {
        if (!number.empty() || factor.empty()) {
          throw FieldError("malformed scalar literal: " + std::string(text));
        }
        for (char ch : factor) {
          if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/') {
            throw FieldError("malformed scalar literal: " + std::string(text));
          }
        }
        number = factor;
      }
      if (star == std::string::npos) break;
      start = star + 1;
    }
    mpq_class q(1);
    if (!number.empty()) {
      if (number.front() == '/' || number.back() == '/' ||
          number.find('/') != number.rfind('/')) {
        throw FieldError("malformed scalar literal: " + std::string(text));
      }
      if (q.set_str(number, 10) != 0) {
        throw FieldError("malformed scalar literal: " + std::string(text));
      }
      if (q.get_den() == 0) throw DivisionByZero();
      q.canonicalize();
    }
    if (sign < 0) q = -q;
    const std::size_t idx = (has_i ? 1u : 0u) + (has_r ? 2u : 0u);
    c[idx] += q;
  }
  return from_parts(c[0], c[1], c[2], c[3], d);
}

}  // namespace gk
