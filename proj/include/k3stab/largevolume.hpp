// Twisted Gieseker slopes and the limit omega -> n omega.
#pragma once

#include "k3stab/charge.hpp"

#include <optional>
#include <string>

namespace k3stab {

/// For r > 0: mu = (c1 - r beta).omega / r, nu = (s - c1.beta) / r.
/// Rank 0 is marked torsion (mu = +inf, nu undefined).
struct TwistedSlopes {
  bool torsion = false;
  Rational mu;
  Rational nu;
  friend bool operator==(const TwistedSlopes&, const TwistedSlopes&) = default;
};

std::string to_string(const TwistedSlopes& s);

TwistedSlopes twisted_slopes(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p);

/// mu(a) < mu(e), or mu equal and nu(a) <= nu(e). DomainError on torsion.
bool twisted_leq(const TwistedSlopes& a, const TwistedSlopes& e);

enum class LimitPhase { Zero, Half, One };

std::string to_string(LimitPhase l);

/// lim (1/pi) arg Z_n(v) by support dimension: 2 -> 0, 1 -> 1/2, 0 -> 1.
LimitPhase asymptotic_phase_class(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p);

/// Z at (beta, n omega).
TubePointQ scale_omega(const TubePointQ& p, const Rational& n);

/// Z_n(E)/r(E) - Z_n(A)/r(A) from the charges.
GaussianRational gap_via_charge(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va, const TubePointQ& p,
                                const Rational& n);
/// -(nu(E) - nu(A)) + i n (mu(E) - mu(A)).
GaussianRational gap_via_slopes(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va, const TubePointQ& p,
                                const Rational& n);

/// Both routes, checked equal.
GaussianRational large_volume_gap(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va,
                                  const TubePointQ& p, const Rational& n);

/// Least n0 <= n_max with arg Z_n(A) <= arg Z_n(E) for every integer
/// n in [n0, n_max]. arg is taken in (-pi, pi], so a charge of A below the
/// real axis counts as smaller.
std::optional<int> phase_order_threshold(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va,
                                         const TubePointQ& p, int n_max);

}  // namespace k3stab
