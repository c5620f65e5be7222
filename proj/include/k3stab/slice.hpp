// Two-dimensional slices (x, y) -> (beta, omega) = (b0 + x db, w0 + y dw) of
// the tube domain, and central charges restricted to them.
//
// In a slice, Re Z(w) = q1(x) + q2(y) with q1, q2 quadratic and Im Z(w) is
// bilinear in (x, y); both facts are used for exact range bounds.
#pragma once

#include "k3stab/lattice.hpp"
#include "k3stab/poly.hpp"

namespace k3stab {

class Slice2D {
 public:
  /// Throws DomainError unless omega^2 > 0 on the whole window.
  Slice2D(const SurfaceConfig& cfg, Vec<Rational> base_beta, Vec<Rational> base_omega, Vec<Rational> dir_beta,
          Vec<Rational> dir_omega, Rect window);

  /// The default rank-one slice beta = xH, omega = yH.
  static Slice2D ample_slice(const SurfaceConfig& cfg, Rect window);

  const Vec<Rational>& base_beta() const { return b0_; }
  const Vec<Rational>& base_omega() const { return w0_; }
  const Vec<Rational>& dir_beta() const { return db_; }
  const Vec<Rational>& dir_omega() const { return dw_; }
  const Rect& window() const { return window_; }
  Slice2D with_window(const Rect& w) const;

  TubePointQ point(const Rational& x, const Rational& y) const;
  /// omega(y)^2 as a polynomial in y.
  UPoly omega_sq() const { return omega_sq_; }
  /// beta(x).D and omega(y).D as linear polynomials.
  UPoly beta_dot(const Vec<Rational>& d) const;
  UPoly omega_dot(const Vec<Rational>& d) const;

 private:
  Vec<Rational> b0_, w0_, db_, dw_;
  Rect window_;
  UPoly omega_sq_;
  Mat<Rational> gram_;
  // Scalar products of the slice data, cached for charge evaluation.
  Rational b0b0_, b0db_, dbdb_, b0w0_, dbw0_, b0dw_, dbdw_;
  Rational dot(const Vec<Rational>& a, const Vec<Rational>& b) const { return a.dot(gram_ * b); }
  friend class SliceCharge;
};

/// Z(w) on a slice: Re = re_x(x) + re_y(y), Im = i00 + i10 x + i01 y + i11 xy.
class SliceCharge {
 public:
  SliceCharge(const Slice2D& slice, const MukaiVecQ& w);
  SliceCharge(const Slice2D& slice, const MukaiVec& w) : SliceCharge(slice, w.cast<Rational>()) {}

  const UPoly& re_x() const { return re_x_; }
  const UPoly& re_y() const { return re_y_; }
  const Rational& im00() const { return i00_; }
  const Rational& im10() const { return i10_; }
  const Rational& im01() const { return i01_; }
  const Rational& im11() const { return i11_; }

  Poly2 re() const;
  Poly2 im() const;
  GaussianRational at(const Rational& x, const Rational& y) const;

  /// Exact ranges over a rectangle.
  Interval re_range(const Rect& r) const;
  Interval im_range(const Rect& r) const;
  /// Lower and upper bounds for |Z|^2 over a rectangle.
  Rational norm2_lower(const Rect& r) const;
  Rational norm2_upper(const Rect& r) const;

 private:
  UPoly re_x_, re_y_;
  Rational i00_, i10_, i01_, i11_;
};

}  // namespace k3stab
