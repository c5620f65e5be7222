// Elements a + b*sqrt(d) of a real quadratic field Q(sqrt d), with exact sign
// tests. Used where a normalization or a bound is a quadratic irrational.
#pragma once

#include "k3stab/scalar.hpp"

#include <ostream>

namespace k3stab {

class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(int a) : a_(a) {}
  QuadraticSurd(long a) : a_(a) {}
  QuadraticSurd(Rational a) : a_(std::move(a)) {}
  QuadraticSurd(const Integer& a) : a_(a) {}

  /// a + b*sqrt(d). d must be a positive squarefree integer other than 1,
  /// or b must be zero.
  QuadraticSurd(Rational a, Rational b, Integer d);

  /// sqrt(q) for rational q >= 0, with the radicand reduced to squarefree form
  /// (a perfect-square q yields a rational).
  static QuadraticSurd sqrt(const Rational& q);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  /// The radicand, or 0 when the value is rational.
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  /// Throws DomainError unless the value is rational.
  const Rational& to_rational() const;

  int sign() const;
  QuadraticSurd conjugate() const { return {a_, -b_, d_}; }
  /// Lower and upper rational bounds within 2^-bits of the value.
  Rational lower_bound(unsigned bits = 40) const;
  Rational upper_bound(unsigned bits = 40) const;
  double to_double() const;

  QuadraticSurd& operator+=(const QuadraticSurd& o);
  QuadraticSurd& operator-=(const QuadraticSurd& o);
  QuadraticSurd& operator*=(const QuadraticSurd& o);
  QuadraticSurd& operator/=(const QuadraticSurd& o);

  friend QuadraticSurd operator+(QuadraticSurd x, const QuadraticSurd& y) { return x += y; }
  friend QuadraticSurd operator-(QuadraticSurd x, const QuadraticSurd& y) { return x -= y; }
  friend QuadraticSurd operator*(QuadraticSurd x, const QuadraticSurd& y) { return x *= y; }
  friend QuadraticSurd operator/(QuadraticSurd x, const QuadraticSurd& y) { return x /= y; }
  friend QuadraticSurd operator-(const QuadraticSurd& x) { return {-x.a_, -x.b_, x.d_}; }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less
                 : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& x) { return os << x.str(); }

 private:
  const Integer& common_radicand(const QuadraticSurd& o) const;

  Rational a_{0};
  Rational b_{0};
  Integer d_{0};
};

inline std::string to_string(const QuadraticSurd& x) { return x.str(); }

}  // namespace k3stab

namespace Eigen {
template <>
struct NumTraits<k3stab::QuadraticSurd> : GenericNumTraits<k3stab::QuadraticSurd> {
  using Real = k3stab::QuadraticSurd;
  using NonInteger = k3stab::QuadraticSurd;
  using Nested = k3stab::QuadraticSurd;
  using Literal = k3stab::QuadraticSurd;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
