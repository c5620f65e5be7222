#include "k3stab/largevolume.hpp"

#include <stdexcept>

namespace k3stab {

namespace {

void require_rational_point(const SurfaceConfig& cfg, const TubePointQ& p) {
  cfg.require_ns(p.beta.size(), "beta");
  cfg.require_ns(p.omega.size(), "omega");
}

void require_positive_rank(const MukaiVec& v, const char* what) {
  if (v.r().sign() <= 0) throw DomainError(std::string(what) + " must have r > 0, got " + to_string(v));
}

// Upper half-plane or negative real axis.
bool upper(const GaussianRational& z) { return z.im.sign() > 0 || (z.im.sign() == 0 && z.re.sign() < 0); }

}  // namespace

std::string to_string(const TwistedSlopes& s) {
  if (s.torsion) return "mu=+inf nu=undefined";
  return "mu=" + to_string(s.mu) + " nu=" + to_string(s.nu);
}

TwistedSlopes twisted_slopes(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p) {
  require_rational_point(cfg, p);
  TwistedSlopes out;
  if (v.r().sign() == 0) {
    out.torsion = true;
    return out;
  }
  const Rational r(v.r());
  const Vec<Rational> c1 = v.delta().cast<Rational>();
  out.mu = cfg.dot<Rational>(Vec<Rational>(c1 - p.beta * r), p.omega) / r;
  out.nu = (Rational(v.s()) - cfg.dot<Rational>(c1, p.beta)) / r;
  return out;
}

bool twisted_leq(const TwistedSlopes& a, const TwistedSlopes& e) {
  if (a.torsion || e.torsion) throw DomainError("twisted slopes compare torsion-free classes only");
  return a.mu < e.mu || (a.mu == e.mu && a.nu <= e.nu);
}

std::string to_string(LimitPhase l) {
  switch (l) {
    case LimitPhase::Zero: return "0";
    case LimitPhase::Half: return "1/2";
    case LimitPhase::One: return "1";
  }
  return "?";
}

LimitPhase asymptotic_phase_class(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p) {
  require_rational_point(cfg, p);
  if (v.r().sign() > 0) return LimitPhase::Zero;
  if (v.r().sign() == 0) {
    const Vec<Rational> c1 = v.delta().cast<Rational>();
    if (!v.delta().isZero() && cfg.dot<Rational>(c1, p.omega).sign() > 0) return LimitPhase::Half;
    if (v.delta().isZero() && v.s().sign() > 0) return LimitPhase::One;
  }
  throw DomainError(to_string(v) + " is not the class of a sheaf: need r > 0, or r = 0 with c1.omega > 0, or r = c1 = 0 with s > 0");
}

TubePointQ scale_omega(const TubePointQ& p, const Rational& n) { return {p.beta, Vec<Rational>(p.omega * n)}; }

GaussianRational gap_via_charge(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va, const TubePointQ& p,
                                const Rational& n) {
  require_positive_rank(ve, "E");
  require_positive_rank(va, "A");
  TubePointQ pn = scale_omega(p, n);
  GaussianRational ze = charge_star(cfg, pn, ve);
  GaussianRational za = charge_star(cfg, pn, va);
  return Rational(1 / Rational(ve.r())) * ze - Rational(1 / Rational(va.r())) * za;
}

GaussianRational gap_via_slopes(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va, const TubePointQ& p,
                                const Rational& n) {
  require_positive_rank(ve, "E");
  require_positive_rank(va, "A");
  TwistedSlopes se = twisted_slopes(cfg, ve, p);
  TwistedSlopes sa = twisted_slopes(cfg, va, p);
  return {-(se.nu - sa.nu), n * (se.mu - sa.mu)};
}

GaussianRational large_volume_gap(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va,
                                  const TubePointQ& p, const Rational& n) {
  if (n.sign() <= 0) throw DomainError("large_volume_gap requires n > 0");
  GaussianRational a = gap_via_charge(cfg, ve, va, p, n);
  GaussianRational b = gap_via_slopes(cfg, ve, va, p, n);
  if (a != b) throw std::logic_error("gap routes disagree: " + to_string(a) + " vs " + to_string(b));
  return a;
}

std::optional<int> phase_order_threshold(const SurfaceConfig& cfg, const MukaiVec& ve, const MukaiVec& va,
                                         const TubePointQ& p, int n_max) {
  require_positive_rank(ve, "E");
  require_positive_rank(va, "A");
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  if (twisted_slopes(cfg, ve, p).mu.sign() <= 0) throw DomainError("phase_order_threshold requires mu(E) > 0");
  std::optional<int> n0;
  for (int n = n_max; n >= 1; --n) {
    TubePointQ pn = scale_omega(p, n);
    GaussianRational ze = charge_star(cfg, pn, ve);
    GaussianRational za = charge_star(cfg, pn, va);
    if (za.is_zero()) throw DomainError("Z_n(A) = 0 at n = " + std::to_string(n));
    bool ok = !upper(za) || phase_compare(za, ze) != std::weak_ordering::greater;
    if (!ok) break;
    n0 = n;
  }
  return n0;
}

}  // namespace k3stab
