#include "k3stab/tilt.hpp"

#include "k3stab/regions.hpp"
#include "k3stab/roots.hpp"

#include <stdexcept>

namespace k3stab {

std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::TorsionDim0: return "torsion0";
    case FactorKind::TorsionDim1: return "torsion1";
    case FactorKind::TorsionFreeSemistable: return "free";
  }
  return "?";
}

FactorKind parse_factor_kind(const std::string& s) {
  if (s == "torsion0") return FactorKind::TorsionDim0;
  if (s == "torsion1") return FactorKind::TorsionDim1;
  if (s == "free") return FactorKind::TorsionFreeSemistable;
  throw ConfigError("unknown factor kind '" + s + "' (expected torsion0, torsion1 or free)");
}

Rational slope(const SurfaceConfig& cfg, const MukaiVec& v, const Vec<Rational>& omega) {
  if (v.r().sign() == 0) throw DomainError("slope of a rank-0 class " + to_string(v));
  return cfg.dot<Rational>(v.delta().cast<Rational>(), omega) / Rational(v.r());
}

void validate(const SurfaceConfig& cfg, const MockSheaf& m, const Vec<Rational>& omega) {
  bool seen_free = false;
  std::optional<Rational> last;
  for (const auto& f : m.factors) {
    cfg.require_ns(f.v.picard_rank(), "factor class");
    const std::string what = to_string(f.v) + " (" + to_string(f.kind) + ")";
    switch (f.kind) {
      case FactorKind::TorsionDim0:
        if (f.v.r() != 0 || !f.v.delta().isZero() || f.v.s().sign() <= 0)
          throw DomainError("dimension-0 torsion factor needs r = 0, c1 = 0, s > 0: " + what);
        break;
      case FactorKind::TorsionDim1:
        if (f.v.r() != 0 || f.v.delta().isZero() || cfg.dot<Rational>(f.v.delta().cast<Rational>(), omega).sign() <= 0)
          throw DomainError("dimension-1 torsion factor needs r = 0, c1 != 0, c1.omega > 0: " + what);
        break;
      case FactorKind::TorsionFreeSemistable: {
        if (f.v.r().sign() <= 0) throw DomainError("torsion-free factor needs r > 0: " + what);
        Rational mu = slope(cfg, f.v, omega);
        if (last && !(mu < *last)) throw DomainError("torsion-free slopes must strictly descend at " + what);
        last = mu;
        seen_free = true;
        break;
      }
    }
    if (seen_free && f.kind != FactorKind::TorsionFreeSemistable)
      throw DomainError("torsion factors must precede torsion-free ones: " + what);
  }
}

std::pair<MockSheaf, MockSheaf> torsion_pair_split(const SurfaceConfig& cfg, const MockSheaf& m, const TubePointQ& p) {
  validate(cfg, m, p.omega);
  const Rational cut = cfg.dot<Rational>(p.beta, p.omega);
  MockSheaf t, f;
  for (const auto& x : m.factors) {
    bool torsion = x.kind != FactorKind::TorsionFreeSemistable;
    (torsion || slope(cfg, x.v, p.omega) > cut ? t : f).factors.push_back(x);
  }
  return {t, f};
}

Phase heart_phase(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p, HeartPosition pos) {
  GaussianRational z = charge_star(cfg, p, v);
  if (pos == HeartPosition::InFShifted) z = -z;
  if (z.is_zero()) throw DomainError("degenerate class " + to_string(v) + ": Z = 0 at this (beta, omega)");
  if (!in_phase_domain(z))
    throw DomainError("Z = " + to_string(z) + " of " + to_string(v) + " lies outside the upper half-plane and R_{<0}");
  return Phase(z);
}

StabilityCheck check_stability_function(const SurfaceConfig& cfg, const TubePointQ& p, const Rational& search_depth,
                                        int threads) {
  if (!is_ample(cfg, p.omega)) throw DomainError("check_stability_function requires omega ample");
  StabilityCheck res;
  res.fast_path = cfg.dot<Rational>(p.omega, p.omega) > 2;
  if (cfg.is_abelian()) return res;
  EnumerationQuery q;
  q.omega = exp_class(cfg, p);
  q.bound_m = search_depth < 1 ? Rational(1) : search_depth;
  q.rank_positive_only = true;
  q.spherical_only = true;
  q.threads = threads;
  for (const auto& d : enumerate_bounded(cfg, q).vectors) {
    GaussianRational z = central_charge(cfg, q.omega, d);
    if (z.im != 0) continue;
    res.candidates.push_back(d);
    if (z.re.sign() <= 0 && res.ok) {
      res.ok = false;
      res.witness = d;
    }
  }
  if (res.fast_path && !res.ok)
    throw std::logic_error("omega^2 > 2 but " + to_string(*res.witness) + " has Z in R_{<=0}");
  return res;
}

}  // namespace k3stab
