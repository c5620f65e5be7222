// Exact scalar types shared by every module.
//
// Integer and Rational are GMP-backed Boost.Multiprecision numbers with
// expression templates disabled, so they behave as plain value types inside
// Eigen matrices.
#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace k3stab {

namespace mp = boost::multiprecision;

using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// ---------------------------------------------------------------------------
// Errors. The CLI maps each to a distinct exit code.

/// Malformed or inconsistent surface configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A violated precondition or an input outside an operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration whose certified search box exceeds the configured cap.
class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(const std::string& what, Integer required)
      : std::runtime_error(what), required_(std::move(required)) {}
  const Integer& required_cap() const { return required_; }

 private:
  Integer required_;
};

// ---------------------------------------------------------------------------

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const Integer& z) { return z.sign(); }

inline Integer numerator(const Rational& q) { return mp::numerator(q); }
inline Integer denominator(const Rational& q) { return mp::denominator(q); }

inline Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);  // always positive
  Integer t = n / d;           // truncates toward zero
  if (t * d != n && n.sign() < 0) --t;
  return t;
}

inline Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw DomainError("isqrt of a negative integer");
  return mp::sqrt(n);
}

/// floor(sqrt(q)) for q >= 0.
inline Integer floor_sqrt(const Rational& q) {
  if (q.sign() < 0) throw DomainError("floor_sqrt of a negative rational");
  return isqrt(floor(q));
}

/// floor(c + sqrt(q)) for q >= 0, exactly.
inline Integer floor_plus_sqrt(const Rational& c, const Rational& q) {
  auto fits = [&](const Integer& z) {
    Rational t = Rational(z) - c;
    return t.sign() <= 0 || t * t <= q;
  };
  Integer z = floor(c) + floor_sqrt(q);
  while (fits(z + 1)) ++z;
  while (!fits(z)) --z;
  return z;
}

/// ceil(c - sqrt(q)) for q >= 0, exactly.
inline Integer ceil_minus_sqrt(const Rational& c, const Rational& q) {
  return -floor_plus_sqrt(Rational(-c), q);
}

/// A rational u with sqrt(q) <= u <= sqrt(q) + 2^-bits.
inline Rational sqrt_upper(const Rational& q, unsigned bits = 40) {
  if (q.sign() < 0) throw DomainError("sqrt_upper of a negative rational");
  Integer scale = Integer(1) << bits;
  Integer root = isqrt(floor(q * Rational(scale * scale)));
  Rational candidate(root, scale);
  if (candidate * candidate == q) return candidate;
  return Rational(root + 1, scale);
}

inline Rational power(const Rational& q, int k) {
  if (k < 0) return power(Rational(1) / q, -k);
  return Rational(mp::pow(numerator(q), static_cast<unsigned>(k)), mp::pow(denominator(q), static_cast<unsigned>(k)));
}

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

/// Parses "p", "p/q", or a finite decimal such as "-0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Parses a decimal integer.
Integer parse_integer(std::string_view text);

// ---------------------------------------------------------------------------
// Complex numbers over an exact field. std::complex is unspecified for
// non-floating types, so a small value type is used instead.

template <typename Scalar>
struct Complex {
  Scalar re{0};
  Scalar im{0};

  Complex() = default;
  Complex(Scalar real) : re(std::move(real)), im(0) {}
  Complex(Scalar real, Scalar imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex conj() const { return {re, -im}; }
  Scalar norm2() const { return re * re + im * im; }
  bool is_zero() const { return re == 0 && im == 0; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Scalar& k, const Complex& a) { return {k * a.re, k * a.im}; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Scalar d = b.norm2();
    if (d == 0) throw DomainError("division by a zero complex number");
    Complex n = a * b.conj();
    return {n.re / d, n.im / d};
  }
  friend bool operator==(const Complex& a, const Complex& b) = default;
};

using GaussianRational = Complex<Rational>;

inline std::string to_string(const GaussianRational& z) {
  return to_string(z.re) + (z.im.sign() < 0 ? "-" : "+") + to_string(Rational(abs(z.im))) + "i";
}

}  // namespace k3stab
