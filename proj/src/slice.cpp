#include "k3stab/slice.hpp"

namespace k3stab {

Slice2D::Slice2D(const SurfaceConfig& cfg, Vec<Rational> base_beta, Vec<Rational> base_omega, Vec<Rational> dir_beta,
                 Vec<Rational> dir_omega, Rect window)
    : b0_(std::move(base_beta)),
      w0_(std::move(base_omega)),
      db_(std::move(dir_beta)),
      dw_(std::move(dir_omega)),
      window_(std::move(window)),
      gram_(cfg.ns_gram_as<Rational>()) {
  cfg.require_ns(b0_.size(), "slice base beta");
  cfg.require_ns(w0_.size(), "slice base omega");
  cfg.require_ns(db_.size(), "slice beta direction");
  cfg.require_ns(dw_.size(), "slice omega direction");
  if (!window_.valid()) throw DomainError("slice window must satisfy x0 <= x1 and y0 <= y1");
  b0b0_ = dot(b0_, b0_);
  b0db_ = dot(b0_, db_);
  dbdb_ = dot(db_, db_);
  b0w0_ = dot(b0_, w0_);
  dbw0_ = dot(db_, w0_);
  b0dw_ = dot(b0_, dw_);
  dbdw_ = dot(db_, dw_);
  omega_sq_ = UPoly::quadratic(dot(w0_, w0_), 2 * dot(w0_, dw_), dot(dw_, dw_));
  if (range(omega_sq_, window_.y0, window_.y1).lo.sign() <= 0)
    throw DomainError("slice window reaches omega^2 <= 0");
}

Slice2D Slice2D::ample_slice(const SurfaceConfig& cfg, Rect window) {
  Vec<Rational> h = cfg.ample().cast<Rational>();
  Vec<Rational> zero = Vec<Rational>::Zero(cfg.picard_rank());
  return Slice2D(cfg, zero, zero, h, h, std::move(window));
}

Slice2D Slice2D::with_window(const Rect& w) const {
  Slice2D out = *this;
  if (!w.valid()) throw DomainError("slice window must satisfy x0 <= x1 and y0 <= y1");
  if (range(omega_sq_, w.y0, w.y1).lo.sign() <= 0) throw DomainError("slice window reaches omega^2 <= 0");
  out.window_ = w;
  return out;
}

TubePointQ Slice2D::point(const Rational& x, const Rational& y) const {
  return {Vec<Rational>(b0_ + db_ * x), Vec<Rational>(w0_ + dw_ * y)};
}

UPoly Slice2D::beta_dot(const Vec<Rational>& d) const { return UPoly::linear(dot(b0_, d), dot(db_, d)); }
UPoly Slice2D::omega_dot(const Vec<Rational>& d) const { return UPoly::linear(dot(w0_, d), dot(dw_, d)); }

// ---------------------------------------------------------------------------

SliceCharge::SliceCharge(const Slice2D& sl, const MukaiVecQ& w) {
  const Vec<Rational> d = w.delta();
  const Rational& r = w.r();
  const Rational half_r = r / 2;
  const Rational w0w0 = sl.omega_sq_.coeff(0);
  re_x_ = UPoly::quadratic(sl.dot(d, sl.b0_) - w.s() - half_r * sl.b0b0_ + half_r * w0w0,
                           sl.dot(d, sl.db_) - r * sl.b0db_, -half_r * sl.dbdb_);
  re_y_ = UPoly::quadratic(0, half_r * sl.omega_sq_.coeff(1), half_r * sl.omega_sq_.coeff(2));
  i00_ = sl.dot(d, sl.w0_) - r * sl.b0w0_;
  i10_ = -r * sl.dbw0_;
  i01_ = sl.dot(d, sl.dw_) - r * sl.b0dw_;
  i11_ = -r * sl.dbdw_;
}

Poly2 SliceCharge::re() const { return Poly2::in_x(re_x_) + Poly2::in_y(re_y_); }

Poly2 SliceCharge::im() const {
  Mat<Rational> m(2, 2);
  m << i00_, i01_, i10_, i11_;
  return Poly2(std::move(m));
}

GaussianRational SliceCharge::at(const Rational& x, const Rational& y) const {
  return {re_x_(x) + re_y_(y), i00_ + i10_ * x + i01_ * y + i11_ * x * y};
}

Interval SliceCharge::re_range(const Rect& r) const { return range(re_x_, r.x0, r.x1) + range(re_y_, r.y0, r.y1); }

// A bilinear function attains its extremes over a rectangle at the corners.
Interval SliceCharge::im_range(const Rect& r) const {
  auto f = [&](const Rational& x, const Rational& y) { return i00_ + i10_ * x + i01_ * y + i11_ * x * y; };
  Rational c[4] = {f(r.x0, r.y0), f(r.x0, r.y1), f(r.x1, r.y0), f(r.x1, r.y1)};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

Rational SliceCharge::norm2_lower(const Rect& r) const {
  Rational a = re_range(r).min_abs(), b = im_range(r).min_abs();
  return a * a + b * b;
}

Rational SliceCharge::norm2_upper(const Rect& r) const {
  Rational a = re_range(r).max_abs(), b = im_range(r).max_abs();
  return a * a + b * b;
}

}  // namespace k3stab
