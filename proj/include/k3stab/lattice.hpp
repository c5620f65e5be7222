// Surface configuration, Neron-Severi classes and the Mukai lattice
// N(X) = Z + NS(X) + Z with pairing (r1,D1,s1).(r2,D2,s2) = D1.D2 - r1 s2 - r2 s1.
//
// Mukai vectors are stored as one coordinate vector (r, d_1..d_rho, s) so the
// pairing is a single bilinear form v^T M w; everything is templated on the
// scalar so the same code serves Integer, Rational and QuadraticSurd.
#pragma once

#include "k3stab/scalar.hpp"

#include <compare>
#include <string>
#include <vector>

namespace k3stab {

enum class SurfaceType { K3, Abelian };

std::string to_string(SurfaceType t);

/// Signature (positive, negative, zero) of a symmetric rational matrix.
struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

Signature signature(const Mat<Rational>& symmetric);

class SurfaceConfig {
 public:
  /// Validates every invariant and throws ConfigError on failure.
  SurfaceConfig(SurfaceType type, Mat<Integer> gram, Vec<Integer> ample, std::vector<Vec<Integer>> curves = {});

  SurfaceType type() const { return type_; }
  bool is_abelian() const { return type_ == SurfaceType::Abelian; }
  int picard_rank() const { return static_cast<int>(gram_.rows()); }
  /// Length of a Mukai coordinate vector, rho + 2.
  int mukai_dim() const { return picard_rank() + 2; }

  const Mat<Integer>& ns_gram() const { return gram_; }
  const Vec<Integer>& ample() const { return ample_; }
  const std::vector<Vec<Integer>>& curves() const { return curves_; }

  template <typename S>
  Mat<S> ns_gram_as() const;
  /// Gram matrix of N(X) in the basis (1,0,0), NS basis, (0,0,1).
  template <typename S>
  Mat<S> mukai_gram_as() const;

  /// D1.D2 under the NS intersection form.
  template <typename S>
  S dot(const Vec<S>& a, const Vec<S>& b) const;

  void require_ns(Eigen::Index size, const char* what) const;

 private:
  SurfaceType type_;
  Mat<Integer> gram_;
  Vec<Integer> ample_;
  std::vector<Vec<Integer>> curves_;
  Mat<Rational> gram_q_;
  Mat<Integer> mukai_z_;
  Mat<Rational> mukai_q_;
};

template <typename S>
using NSClass = Vec<S>;

// ---------------------------------------------------------------------------

template <typename Scalar>
class MukaiVector {
 public:
  MukaiVector() = default;
  explicit MukaiVector(Vec<Scalar> coords) : c_(std::move(coords)) {
    if (c_.size() < 3) throw DomainError("a Mukai vector needs at least 3 coordinates");
  }
  MukaiVector(const Scalar& r, const Vec<Scalar>& delta, const Scalar& s) : c_(delta.size() + 2) {
    c_(0) = r;
    c_.segment(1, delta.size()) = delta;
    c_(delta.size() + 1) = s;
  }

  static MukaiVector zero(int rho) { return MukaiVector(Vec<Scalar>::Zero(rho + 2)); }

  int picard_rank() const { return static_cast<int>(c_.size()) - 2; }
  const Vec<Scalar>& coords() const { return c_; }
  Vec<Scalar>& coords() { return c_; }

  const Scalar& r() const { return c_(0); }
  Scalar& r() { return c_(0); }
  const Scalar& s() const { return c_(c_.size() - 1); }
  Scalar& s() { return c_(c_.size() - 1); }
  Vec<Scalar> delta() const { return c_.segment(1, picard_rank()); }
  void set_delta(const Vec<Scalar>& d) { c_.segment(1, picard_rank()) = d; }

  bool is_zero() const {
    for (Eigen::Index k = 0; k < c_.size(); ++k)
      if (c_(k) != 0) return false;
    return true;
  }

  template <typename T>
  MukaiVector<T> cast() const {
    Vec<T> out(c_.size());
    for (Eigen::Index k = 0; k < c_.size(); ++k) out(k) = T(c_(k));
    return MukaiVector<T>(std::move(out));
  }

  friend MukaiVector operator+(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(Vec<Scalar>(a.c_ + b.c_));
  }
  friend MukaiVector operator-(const MukaiVector& a, const MukaiVector& b) {
    return MukaiVector(Vec<Scalar>(a.c_ - b.c_));
  }
  friend MukaiVector operator-(const MukaiVector& a) { return MukaiVector(Vec<Scalar>(-a.c_)); }
  friend MukaiVector operator*(const Scalar& k, const MukaiVector& a) { return MukaiVector(Vec<Scalar>(a.c_ * k)); }

  friend bool operator==(const MukaiVector& a, const MukaiVector& b) {
    return a.c_.size() == b.c_.size() && a.c_ == b.c_;
  }
  /// Lexicographic on (r, delta, s): the canonical output order.
  friend std::strong_ordering operator<=>(const MukaiVector& a, const MukaiVector& b) {
    Eigen::Index n = std::min(a.c_.size(), b.c_.size());
    for (Eigen::Index k = 0; k < n; ++k) {
      if (a.c_(k) < b.c_(k)) return std::strong_ordering::less;
      if (b.c_(k) < a.c_(k)) return std::strong_ordering::greater;
    }
    return a.c_.size() <=> b.c_.size();
  }

 private:
  Vec<Scalar> c_;
};

using MukaiVec = MukaiVector<Integer>;
using MukaiVecQ = MukaiVector<Rational>;

/// "(r,d1,...,s)".
template <typename Scalar>
std::string to_string(const MukaiVector<Scalar>& v) {
  std::string out = "(";
  for (Eigen::Index k = 0; k < v.coords().size(); ++k) {
    if (k) out += ",";
    out += to_string(v.coords()(k));
  }
  return out + ")";
}

/// A vector of N(X) (x) C, stored as real and imaginary parts.
template <typename Scalar>
struct ComplexMukaiVector {
  MukaiVector<Scalar> re;
  MukaiVector<Scalar> im;

  ComplexMukaiVector conj() const { return {re, -im}; }
  friend ComplexMukaiVector operator+(const ComplexMukaiVector& a, const ComplexMukaiVector& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexMukaiVector operator-(const ComplexMukaiVector& a) { return {-a.re, -a.im}; }
  /// Multiplication by the complex scalar k.
  friend ComplexMukaiVector operator*(const Complex<Scalar>& k, const ComplexMukaiVector& a) {
    return {k.re * a.re - k.im * a.im, k.re * a.im + k.im * a.re};
  }
  friend bool operator==(const ComplexMukaiVector&, const ComplexMukaiVector&) = default;
};

using ComplexMukaiVec = ComplexMukaiVector<Rational>;

/// A point beta + i omega of the tube domain; omega^2 > 0 is checked by
/// make_tube_point.
template <typename Scalar>
struct TubePoint {
  Vec<Scalar> beta;
  Vec<Scalar> omega;
};

using TubePointQ = TubePoint<Rational>;

// ---------------------------------------------------------------------------
// Template definitions.

template <typename S>
Mat<S> SurfaceConfig::ns_gram_as() const {
  return gram_q_.unaryExpr([](const Rational& q) { return S(q); });
}

template <>
inline Mat<Rational> SurfaceConfig::ns_gram_as<Rational>() const {
  return gram_q_;
}

template <>
inline Mat<Integer> SurfaceConfig::ns_gram_as<Integer>() const {
  return gram_;
}

template <typename S>
Mat<S> SurfaceConfig::mukai_gram_as() const {
  return mukai_q_.unaryExpr([](const Rational& q) { return S(q); });
}

template <>
inline Mat<Rational> SurfaceConfig::mukai_gram_as<Rational>() const {
  return mukai_q_;
}

template <>
inline Mat<Integer> SurfaceConfig::mukai_gram_as<Integer>() const {
  return mukai_z_;
}

template <typename S>
S SurfaceConfig::dot(const Vec<S>& a, const Vec<S>& b) const {
  require_ns(a.size(), "left NS class");
  require_ns(b.size(), "right NS class");
  S acc(0);
  for (int i = 0; i < picard_rank(); ++i) {
    if (a(i) == 0) continue;
    for (int j = 0; j < picard_rank(); ++j)
      if (gram_(i, j) != 0 && b(j) != 0) acc += a(i) * S(gram_q_(i, j)) * b(j);
  }
  return acc;
}

template <>
inline Integer SurfaceConfig::dot<Integer>(const Vec<Integer>& a, const Vec<Integer>& b) const {
  require_ns(a.size(), "left NS class");
  require_ns(b.size(), "right NS class");
  return a.dot(gram_ * b);
}

template <typename S>
S mukai_pairing(const SurfaceConfig& cfg, const MukaiVector<S>& a, const MukaiVector<S>& b) {
  cfg.require_ns(a.picard_rank(), "left Mukai vector");
  cfg.require_ns(b.picard_rank(), "right Mukai vector");
  return cfg.dot<S>(a.delta(), b.delta()) - a.r() * b.s() - b.r() * a.s();
}

template <typename S>
S euler_form(const SurfaceConfig& cfg, const MukaiVector<S>& a, const MukaiVector<S>& b) {
  return -mukai_pairing(cfg, a, b);
}

/// The complex-bilinear extension (Omega, v) for real v.
template <typename S>
Complex<S> mukai_pairing(const SurfaceConfig& cfg, const ComplexMukaiVector<S>& omega, const MukaiVector<S>& v) {
  return {mukai_pairing(cfg, omega.re, v), mukai_pairing(cfg, omega.im, v)};
}

/// The complex-bilinear (not Hermitian) pairing of two complex vectors.
template <typename S>
Complex<S> mukai_pairing(const SurfaceConfig& cfg, const ComplexMukaiVector<S>& a, const ComplexMukaiVector<S>& b) {
  return {mukai_pairing(cfg, a.re, b.re) - mukai_pairing(cfg, a.im, b.im),
          mukai_pairing(cfg, a.re, b.im) + mukai_pairing(cfg, a.im, b.re)};
}

bool is_spherical(const SurfaceConfig& cfg, const MukaiVec& v);
/// gcd of the coordinates is 1; the zero vector is rejected.
bool is_primitive(const MukaiVec& v);

/// exp(beta + i omega) = (1, beta + i omega, (beta^2 - omega^2)/2 + i beta.omega).
template <typename S>
ComplexMukaiVector<S> exp_class(const SurfaceConfig& cfg, const Vec<S>& beta, const Vec<S>& omega) {
  S half = S(1) / S(2);
  S re_s = half * (cfg.dot<S>(beta, beta) - cfg.dot<S>(omega, omega));
  S im_s = cfg.dot<S>(beta, omega);
  return {MukaiVector<S>(S(1), beta, re_s), MukaiVector<S>(S(0), omega, im_s)};
}

template <typename S>
ComplexMukaiVector<S> exp_class(const SurfaceConfig& cfg, const TubePoint<S>& p) {
  return exp_class(cfg, p.beta, p.omega);
}

/// v . exp(ell): (r, D, s) -> (r, D + r ell, s + D.ell + r ell^2/2).
template <typename S>
MukaiVector<S> twist_by_exp(const SurfaceConfig& cfg, const MukaiVector<S>& v, const Vec<S>& ell) {
  Vec<S> d = v.delta();
  S s = v.s() + cfg.dot<S>(d, ell) + v.r() * cfg.dot<S>(ell, ell) / S(2);
  return MukaiVector<S>(v.r(), Vec<S>(d + ell * v.r()), s);
}

template <>
MukaiVec twist_by_exp<Integer>(const SurfaceConfig& cfg, const MukaiVec& v, const Vec<Integer>& ell);

template <typename S>
TubePoint<S> make_tube_point(const SurfaceConfig& cfg, Vec<S> beta, Vec<S> omega) {
  cfg.require_ns(beta.size(), "beta");
  cfg.require_ns(omega.size(), "omega");
  if (!(cfg.dot<S>(omega, omega) > S(0))) throw DomainError("tube domain point requires omega^2 > 0");
  return {std::move(beta), std::move(omega)};
}

/// Integer coordinates of an integral NS class given with rational entries.
Vec<Integer> to_integral(const Vec<Rational>& v, const char* what);

template <typename S>
Vec<Rational> to_rational_vec(const Vec<S>& v) {
  Vec<Rational> out(v.size());
  for (Eigen::Index k = 0; k < v.size(); ++k) out(k) = Rational(v(k));
  return out;
}

}  // namespace k3stab
