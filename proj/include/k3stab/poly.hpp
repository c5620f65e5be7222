// Exact polynomials over Q.
//
// UPoly is univariate with Sturm-sequence root isolation and exact sign
// determination at real algebraic points; it backs every "does this
// semi-algebraic set meet the window" decision. Poly2 is bivariate with an
// Eigen coefficient matrix and carries wall loci in a 2-D slice.
#pragma once

#include "k3stab/scalar.hpp"

#include <optional>
#include <span>
#include <vector>

namespace k3stab {

class UPoly {
 public:
  UPoly() = default;
  /// Coefficients in increasing degree: c[0] + c[1] t + ...
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly constant(Rational c) { return UPoly({std::move(c)}); }
  static UPoly linear(Rational c0, Rational c1) { return UPoly({std::move(c0), std::move(c1)}); }
  static UPoly quadratic(Rational c0, Rational c1, Rational c2) {
    return UPoly({std::move(c0), std::move(c1), std::move(c2)});
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Rational operator()(const Rational& t) const;
  int sign_at(const Rational& t) const { return (*this)(t).sign(); }

  UPoly derivative() const;
  UPoly monic() const;

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const Rational& k, const UPoly& a);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

/// Sturm chain of p (p, p', -rem, ...).
std::vector<UPoly> sturm_chain(const UPoly& p);
/// Number of distinct real roots of squarefree p in (a, b].
int count_roots(std::span<const UPoly> chain, const Rational& a, const Rational& b);

/// An isolated real root. If exact, the root is lo == hi. Otherwise the root
/// is the unique root of the isolated polynomial in the open interval (lo, hi)
/// and neither endpoint is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact = false;
};

/// All distinct real roots of p in the closed interval [lo, hi], sorted.
std::vector<RootInterval> isolate_roots(const UPoly& p, const Rational& lo, const Rational& hi);

/// Sign of g at the root isolated by `root` of the squarefree polynomial f.
int sign_at_root(const UPoly& g, const UPoly& f, const RootInterval& root);

enum class Relation { Negative, NonPositive, Zero, NonZero, NonNegative, Positive };

bool satisfies(int sign, Relation rel);

struct SignCondition {
  UPoly poly;
  Relation rel;
};

/// A witness point of a feasible sign-condition system.
struct FeasiblePoint {
  RootInterval where;  // exact => rational point where.lo
};

/// Decides exactly whether some t in [lo, hi] satisfies every condition;
/// returns a witness if so.
std::optional<FeasiblePoint> find_feasible(std::span<const SignCondition> conditions, const Rational& lo,
                                           const Rational& hi);

struct Interval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& t) const { return lo <= t && t <= hi; }
  /// min |t| over the interval.
  Rational min_abs() const;
  /// max |t| over the interval.
  Rational max_abs() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Exact range of t^k over [a, b].
Interval power_range(const Rational& a, const Rational& b, int k);

/// Exact range of p over [a, b]; p must have degree <= 2.
Interval range(const UPoly& p, const Rational& a, const Rational& b);

/// Bisects a non-exact root of squarefree f until hi - lo <= width.
RootInterval refine_root(const UPoly& f, RootInterval root, const Rational& width);

/// One end of a piece of a subset of the real line.
struct Endpoint {
  RootInterval at;
  bool infinite = false;
  bool closed = false;
};

/// A connected piece: an interval, or a single point when lo == hi.
struct SetPiece {
  Endpoint lo;
  Endpoint hi;
  bool is_point() const { return !lo.infinite && !hi.infinite && lo.at.exact && hi.at.exact && lo.at.lo == hi.at.lo; }
};

/// The exact solution set in R of a system of sign conditions, as disjoint
/// pieces in increasing order. Algebraic endpoints are isolating intervals of
/// roots of the squarefree product of the condition polynomials.
std::vector<SetPiece> solve_on_line(std::span<const SignCondition> conditions);

std::string to_string(const SetPiece& piece);

// ---------------------------------------------------------------------------

struct Rect {
  Rational x0, x1, y0, y1;
  bool valid() const { return x0 <= x1 && y0 <= y1; }
};

class Poly2 {
 public:
  Poly2() : c_(Mat<Rational>::Zero(1, 1)) {}
  explicit Poly2(Mat<Rational> coeffs);

  static Poly2 constant(const Rational& c);
  static Poly2 x();
  static Poly2 y();
  /// p(x) as a bivariate polynomial.
  static Poly2 in_x(const UPoly& p);
  static Poly2 in_y(const UPoly& p);

  /// Coefficient of x^i y^j.
  Rational coeff(int i, int j) const;
  const Mat<Rational>& coeffs() const { return c_; }
  int total_degree() const;  // -1 for the zero polynomial
  bool is_zero() const;

  Rational operator()(const Rational& x, const Rational& y) const;
  UPoly restrict_x(const Rational& x) const;  // polynomial in y
  UPoly restrict_y(const Rational& y) const;  // polynomial in x

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& k, const Poly2& a);
  friend bool operator==(const Poly2& a, const Poly2& b);

  /// Coefficients of all monomials of total degree <= max_degree, ordered by
  /// total degree and then by decreasing x-power: 1, x, y, x^2, xy, y^2, ...
  std::vector<Rational> dense_listing(int max_degree = 4) const;
  static Poly2 from_dense_listing(std::span<const Rational> listing, int max_degree = 4);
  /// Names matching dense_listing, e.g. "x^2*y".
  static std::vector<std::string> monomial_names(int max_degree = 4);

  /// The primitive integral multiple of the coefficient vector, sign-normalized
  /// so the first nonzero entry of the dense listing is positive.
  std::vector<Integer> primitive_key() const;

  std::string str() const;

 private:
  void trim();
  Mat<Rational> c_;
};

/// A sound enclosure of p over r (monomial-wise interval arithmetic).
Interval bound(const Poly2& p, const Rect& r);

/// p restricted to the segment a + t (b - a), as a polynomial in t.
UPoly restrict_segment(const Poly2& p, const Rational& ax, const Rational& ay, const Rational& bx,
                       const Rational& by);

}  // namespace k3stab
