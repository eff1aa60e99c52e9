#pragma once

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in Q(zeta_E) for regular-polygon chords.
 *
 * Elements are dense coefficient vectors of length phi(E) in the power basis
 * 1, zeta, ..., zeta^(phi(E)-1). Every product is reduced modulo Phi_E right
 * away, so two elements are equal exactly when their coefficient vectors are.
 */

#include "polychord/bigfloat.hpp"
#include "polychord/exactnum.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace polychord {

inline constexpr long kDefaultCyclotomicCap = 1000;

struct CyclotomicCapError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// A cyclotomic element that was expected to be rational but is not.
struct RecognitionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CycloPolynomial {
  long order = 1;                  // E
  std::vector<BigInt> coeffs;      // ascending degree, monic

  std::size_t degree() const { return coeffs.size() - 1; }
};

namespace detail {

using IntPoly = std::vector<BigInt>;

inline IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
  IntPoly r(p.size() + q.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  }
  return r;
}

/// Exact quotient of p by a monic divisor; throws if the remainder is nonzero.
inline IntPoly poly_div_exact(IntPoly p, const IntPoly& monic) {
  const std::size_t dd = monic.size() - 1;
  if (p.size() < monic.size()) throw std::logic_error("poly_div_exact: dividend degree too small");
  IntPoly quot(p.size() - dd, BigInt(0));
  for (std::size_t k = p.size(); k-- > dd;) {
    const BigInt c = p[k];
    if (c == 0) continue;
    quot[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) p[k - dd + i] -= c * monic[i];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (p[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
  return quot;
}

inline const IntPoly& cyclotomic_memo(long e, std::map<long, IntPoly>& memo) {
  if (auto it = memo.find(e); it != memo.end()) return it->second;
  IntPoly num(static_cast<std::size_t>(e) + 1, BigInt(0));
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  IntPoly den{BigInt(1)};
  for (long d = 1; d < e; ++d)
    if (e % d == 0) den = poly_mul(den, cyclotomic_memo(d, memo));
  return memo[e] = poly_div_exact(std::move(num), den);
}

}  // namespace detail

/// Phi_E = (x^E - 1) / prod_{d | E, d < E} Phi_d.
inline CycloPolynomial cyclotomic_polynomial(long order, long cap = kDefaultCyclotomicCap) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
  if (order > cap)
    throw CyclotomicCapError("cyclotomic order " + std::to_string(order) + " exceeds cap " +
                             std::to_string(cap));
  std::map<long, detail::IntPoly> memo;
  return {order, detail::cyclotomic_memo(order, memo)};
}

class CyclotomicField;

class CycloElement {
 public:
  long order() const { return modulus_->order; }
  std::size_t dimension() const { return coeffs_.size(); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }

  /// The rational constant c, in the same field.
  CycloElement constant(const BigRational& c) const {
    std::vector<BigRational> v(coeffs_.size(), BigRational(0));
    v[0] = c;
    return {modulus_, std::move(v)};
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  CycloElement& operator+=(const CycloElement& y) {
    check_same_field(y);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += y.coeffs_[i];
    return *this;
  }
  CycloElement& operator-=(const CycloElement& y) {
    check_same_field(y);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= y.coeffs_[i];
    return *this;
  }
  CycloElement& operator*=(const BigRational& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  CycloElement& operator*=(const CycloElement& y) {
    check_same_field(y);
    const std::size_t n = coeffs_.size();
    std::vector<BigRational> prod(2 * n - 1, BigRational(0));
    for (std::size_t i = 0; i < n; ++i) {
      if (coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (y.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * y.coeffs_[j];
    }
    coeffs_ = reduce(std::move(prod), *modulus_);
    return *this;
  }

  CycloElement operator-() const {
    CycloElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycloElement operator+(CycloElement x, const CycloElement& y) { return x += y; }
  friend CycloElement operator-(CycloElement x, const CycloElement& y) { return x -= y; }
  friend CycloElement operator*(CycloElement x, const CycloElement& y) { return x *= y; }
  friend CycloElement operator*(CycloElement x, const BigRational& s) { return x *= s; }

  friend bool operator==(const CycloElement& x, const CycloElement& y) {
    return x.order() == y.order() && x.coeffs_ == y.coeffs_;
  }

  /// Reduces an arbitrary-length coefficient vector modulo the monic Phi_E.
  static std::vector<BigRational> reduce(std::vector<BigRational> p, const CycloPolynomial& phi) {
    const std::size_t deg = phi.degree();
    for (std::size_t k = p.size(); k-- > deg;) {
      if (p[k] == 0) continue;
      const BigRational c = p[k];
      for (std::size_t i = 0; i <= deg; ++i) p[k - deg + i] -= c * phi.coeffs[i];
    }
    p.resize(deg, BigRational(0));
    return p;
  }

 private:
  friend class CyclotomicField;
  CycloElement(std::shared_ptr<const CycloPolynomial> modulus, std::vector<BigRational> coeffs)
      : modulus_(std::move(modulus)), coeffs_(std::move(coeffs)) {}

  void check_same_field(const CycloElement& y) const {
    if (order() != y.order()) throw std::invalid_argument("cyclotomic elements from different fields");
  }

  std::shared_ptr<const CycloPolynomial> modulus_;
  std::vector<BigRational> coeffs_;
};

/// Q(zeta_E) together with its defining polynomial. Cheap to copy.
class CyclotomicField {
 public:
  explicit CyclotomicField(long order, long cap = kDefaultCyclotomicCap)
      : modulus_(std::make_shared<const CycloPolynomial>(cyclotomic_polynomial(order, cap))) {}

  long order() const { return modulus_->order; }
  std::size_t dimension() const { return modulus_->degree(); }
  const CycloPolynomial& modulus() const { return *modulus_; }

  CycloElement constant(const BigRational& c) const {
    std::vector<BigRational> v(dimension(), BigRational(0));
    v[0] = c;
    return {modulus_, std::move(v)};
  }

  /// zeta_E^j for any integer j.
  CycloElement zeta_power(long j) const {
    const long e = order();
    const long r = ((j % e) + e) % e;
    std::vector<BigRational> v(static_cast<std::size_t>(r) + 1, BigRational(0));
    v[static_cast<std::size_t>(r)] = 1;
    if (v.size() < dimension()) v.resize(dimension(), BigRational(0));
    return {modulus_, CycloElement::reduce(std::move(v), *modulus_)};
  }

  CycloElement from_coeffs(std::vector<BigRational> coeffs) const {
    return {modulus_, CycloElement::reduce(std::move(coeffs), *modulus_)};
  }

  /// |1 - zeta^j|^2 = 2 - zeta^j - zeta^(E-j): the squared chord between
  /// vertices 0 and j of the regular E-gon on the unit circle.
  CycloElement chord_squared(long j) const {
    if (j < 1 || j > order() / 2)
      throw std::out_of_range("chord index " + std::to_string(j) + " outside [1, " +
                              std::to_string(order() / 2) + "]");
    return constant(2) - zeta_power(j) - zeta_power(order() - j);
  }

 private:
  std::shared_ptr<const CycloPolynomial> modulus_;
};

inline CycloElement chord_sq_polygon(long order, long j, long cap = kDefaultCyclotomicCap) {
  return CyclotomicField(order, cap).chord_squared(j);
}

inline CycloElement pow(CycloElement base, unsigned long exponent) {
  CycloElement result = base.constant(1);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

/// The constant term of an element known to be rational.
inline BigRational rational_recognition(const CycloElement& x) {
  if (!x.is_rational())
    throw RecognitionError("element of Q(zeta_" + std::to_string(x.order()) + ") is not rational");
  return x.coeffs()[0];
}

/// Real part of the element evaluated at zeta = exp(2 pi i / E).
inline BigFloat to_float(const CycloElement& x, mpfr_prec_t precision_bits) {
  const mpfr_prec_t work = precision_bits + 32;
  const BigFloat angle = BigFloat::pi(work) * BigFloat(2L, work) / BigFloat(x.order(), work);
  BigFloat acc(work);
  for (std::size_t k = 0; k < x.dimension(); ++k) {
    if (x.coeffs()[k] == 0) continue;
    acc += BigFloat(x.coeffs()[k], work) * cos(angle * BigFloat(static_cast<long>(k), work));
  }
  return acc.rounded(precision_bits);
}

/// "c0 + c1*z + c2*z^2 ..." with z = zeta_E; zero terms and unit coefficients
/// omitted.
inline std::string to_string(const CycloElement& x) {
  std::string out;
  for (std::size_t k = 0; k < x.dimension(); ++k) {
    const BigRational& c = x.coeffs()[k];
    if (c == 0) continue;
    const BigRational mag = abs(c);
    const std::string power = k == 1 ? "z" : "z^" + std::to_string(k);
    std::string term = to_string(mag);
    if (k > 0) term = mag == 1 ? power : term + "*" + power;
    if (out.empty()) {
      out = (c < 0 ? "-" : "") + term;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace polychord
