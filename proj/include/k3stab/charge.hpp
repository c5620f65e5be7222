// Central charges Z(v) = (Omega, v), the closed formula on the tube domain,
// and phase comparison by sign tests only.
#pragma once

#include "k3stab/lattice.hpp"

#include <compare>

namespace k3stab {

template <typename S>
Complex<S> central_charge(const SurfaceConfig& cfg, const ComplexMukaiVector<S>& omega, const MukaiVector<S>& v) {
  return mukai_pairing(cfg, omega, v);
}

inline GaussianRational central_charge(const SurfaceConfig& cfg, const ComplexMukaiVec& omega, const MukaiVec& v) {
  return mukai_pairing(cfg, omega, v.cast<Rational>());
}

/// Z of v at exp(beta + i omega), evaluated by the closed formula
///   r != 0: ((D^2 - 2rs) + r^2 w^2 - (D - r b)^2) / 2r + i (D - r b).w
///   r == 0: (D.b - s) + i D.w
template <typename S>
Complex<S> charge_star(const SurfaceConfig& cfg, const TubePoint<S>& p, const MukaiVector<S>& v) {
  const Vec<S> d = v.delta();
  if (v.r() == 0) return {cfg.dot<S>(d, p.beta) - v.s(), cfg.dot<S>(d, p.omega)};
  const S& r = v.r();
  Vec<S> u = d - p.beta * r;
  S re = (cfg.dot<S>(d, d) - S(2) * r * v.s() + r * r * cfg.dot<S>(p.omega, p.omega) - cfg.dot<S>(u, u)) / (S(2) * r);
  return {re, cfg.dot<S>(u, p.omega)};
}

inline GaussianRational charge_star(const SurfaceConfig& cfg, const TubePointQ& p, const MukaiVec& v) {
  return charge_star(cfg, p, v.cast<Rational>());
}

/// True for z in the closed upper half-plane minus [0, +inf): the image of a
/// stability function, phases in (0, 1].
bool in_phase_domain(const GaussianRational& z);

/// Orders phases phi(z1), phi(z2) in (0, 1] exactly. Throws DomainError on a
/// zero charge or a charge outside the phase domain.
std::weak_ordering phase_compare(const GaussianRational& z1, const GaussianRational& z2);

/// A charge known to lie in the phase domain; compares by phase.
class Phase {
 public:
  explicit Phase(GaussianRational z);
  const GaussianRational& charge() const { return z_; }
  bool is_one() const { return z_.im == 0; }
  bool is_half() const { return z_.re == 0; }
  friend std::weak_ordering operator<=>(const Phase& a, const Phase& b) { return phase_compare(a.z_, b.z_); }
  friend bool operator==(const Phase& a, const Phase& b) { return phase_compare(a.z_, b.z_) == 0; }
  /// "1", "1/2", "(0,1/2)" or "(1/2,1)".
  std::string bracket() const;

 private:
  GaussianRational z_;
};

}  // namespace k3stab
