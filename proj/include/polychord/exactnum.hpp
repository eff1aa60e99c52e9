#pragma once

/**
 * @file exactnum.hpp
 * @brief Big rationals and the real quadratic field Q(sqrt5).
 *
 * Integers and rationals are GMP values (mpz_class / mpq_class). GMP keeps
 * mpq values canonical after every arithmetic operation, so a BigRational is
 * always reduced with a positive denominator; values built from a raw
 * numerator/denominator pair must go through make_rational().
 *
 * QuadExt stores a + b*sqrt5 as the pair (a, b). Since sqrt5 is irrational the
 * pair is unique per real value, and equality is component-wise.
 */

#include "polychord/bigfloat.hpp"

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace polychord {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised for arithmetic that has no defined result (division by zero).
struct ArithmeticError : std::domain_error {
  using std::domain_error::domain_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigInt& z) { return z.get_str(); }
inline std::string to_string(const BigRational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q".
inline BigRational parse_rational(const std::string& s) {
  BigRational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw ArithmeticError("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline BigInt pow(const BigInt& base, unsigned long exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(BigRational a) : a_(std::move(a)) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadExt(BigRational a, BigRational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  /// sqrt5 itself.
  static QuadExt root5() { return {0, 1}; }
  /// The golden ratio (1 + sqrt5) / 2.
  static QuadExt golden() { return {BigRational(1, 2), BigRational(1, 2)}; }

  const BigRational& rational_part() const { return a_; }
  const BigRational& root5_part() const { return b_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  /// a - b*sqrt5, the image under the nontrivial automorphism.
  QuadExt conjugate() const { return {a_, -b_}; }
  /// (a + b sqrt5)(a - b sqrt5) = a^2 - 5 b^2.
  BigRational norm() const { return BigRational(a_ * a_ - 5 * b_ * b_); }

  QuadExt operator-() const { return {-a_, -b_}; }

  QuadExt& operator+=(const QuadExt& y) {
    a_ += y.a_;
    b_ += y.b_;
    return *this;
  }
  QuadExt& operator-=(const QuadExt& y) {
    a_ -= y.a_;
    b_ -= y.b_;
    return *this;
  }
  QuadExt& operator*=(const QuadExt& y) {
    // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r
    BigRational a = a_ * y.a_ + 5 * b_ * y.b_;
    BigRational b = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QuadExt& operator/=(const QuadExt& y) { return *this *= y.inverse(); }

  QuadExt inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero in Q(sqrt5)");
    BigRational n = norm();
    return {BigRational(a_ / n), BigRational(-b_ / n)};
  }

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  /// Total order of the underlying real numbers.
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

 private:
  BigRational a_{0};
  BigRational b_{0};
};

/// Exact sign of a + b*sqrt5: same-signed parts decide directly, otherwise
/// the larger of a^2 and 5b^2 wins.
inline int sign(const QuadExt& x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.root5_part());
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const BigRational a2 = x.rational_part() * x.rational_part();
  const BigRational b2 = 5 * x.root5_part() * x.root5_part();
  const int c = cmp(a2, b2);
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

inline std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  const int s = sign(x - y);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Integer power by repeated squaring; negative exponents invert first.
inline QuadExt pow(QuadExt base, long exponent) {
  if (exponent < 0) {
    base = base.inverse();
    exponent = -exponent;
  }
  QuadExt result(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

/// Canonical text: "p/q", "r/s*sqrt5", "p/q + r/s*sqrt5" or "p/q - r/s*sqrt5"; unit
/// coefficients of sqrt5 are dropped.
inline std::string to_string(const QuadExt& x) {
  const BigRational& a = x.rational_part();
  const BigRational& b = x.root5_part();
  auto root = [](const BigRational& c) { return c == 1 ? std::string("sqrt5") : to_string(c) + "*sqrt5"; };
  if (b == 0) return to_string(a);
  if (a == 0) return b == -1 ? "-sqrt5" : root(b);
  if (b > 0) return to_string(a) + " + " + root(b);
  return to_string(a) + " - " + root(BigRational(-b));
}

inline std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << to_string(x); }

/// a + b*sqrt5 rounded to `precision_bits`. Opposite-signed parts are
/// evaluated as (a^2 - 5b^2) / (a - b*sqrt5) so that no cancellation occurs.
inline BigFloat to_float(const QuadExt& x, mpfr_prec_t precision_bits) {
  if (precision_bits < 64) throw std::invalid_argument("to_float needs at least 64 bits");
  const mpfr_prec_t work = precision_bits + 32;
  const BigRational& a = x.rational_part();
  const BigRational& b = x.root5_part();
  const BigFloat r5 = sqrt(BigFloat(5L, work));
  BigFloat v(work);
  if (sgn(a) * sgn(b) >= 0) {
    v = BigFloat(a, work) + BigFloat(b, work) * r5;
  } else {
    v = BigFloat(x.norm(), work) / (BigFloat(a, work) - BigFloat(b, work) * r5);
  }
  return v.rounded(precision_bits);
}

struct QuadExtHash {
  std::size_t operator()(const QuadExt& x) const {
    std::hash<std::string> h;
    return h(x.rational_part().get_str()) * 31u ^ h(x.root5_part().get_str());
  }
};

}  // namespace polychord
