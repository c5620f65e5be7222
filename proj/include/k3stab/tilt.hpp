// Numerical side of the tilted heart A(beta, omega): the torsion pair cut at
// slope beta.omega, phases of heart objects, and the stability function check.
#pragma once

#include "k3stab/charge.hpp"

#include <string>
#include <utility>
#include <vector>

namespace k3stab {

enum class FactorKind { TorsionDim0, TorsionDim1, TorsionFreeSemistable };

std::string to_string(FactorKind k);
FactorKind parse_factor_kind(const std::string& s);

struct MockFactor {
  MukaiVec v;
  FactorKind kind = FactorKind::TorsionFreeSemistable;
  friend bool operator==(const MockFactor&, const MockFactor&) = default;
};

/// slope-HN data of a hypothetical sheaf: torsion factors first, then
/// torsion-free factors of strictly descending mu_omega.
struct MockSheaf {
  std::vector<MockFactor> factors;
  friend bool operator==(const MockSheaf&, const MockSheaf&) = default;
};

/// c1.omega / r.
Rational slope(const SurfaceConfig& cfg, const MukaiVec& v, const Vec<Rational>& omega);

/// Throws DomainError naming the first violated invariant.
void validate(const SurfaceConfig& cfg, const MockSheaf& m, const Vec<Rational>& omega);

/// T gets the torsion and mu_omega > beta.omega; F the rest. Only beta.omega
/// enters.
std::pair<MockSheaf, MockSheaf> torsion_pair_split(const SurfaceConfig& cfg, const MockSheaf& m, const TubePointQ& p);

enum class HeartPosition { InT, InFShifted };

/// Phase of v (InT) or of v[1] (InFShifted) as an object of the heart.
/// Throws DomainError on a zero charge or a charge outside (0, 1].
Phase heart_phase(const SurfaceConfig& cfg, const MukaiVec& v, const TubePointQ& p, HeartPosition pos);

struct StabilityCheck {
  bool ok = true;
  std::optional<MukaiVec> witness;
  std::vector<MukaiVec> candidates;  // roots in Delta+ with Im Z = 0, |Z| <= search_depth
  bool fast_path = false;            // omega^2 > 2
};

/// Z(delta) not in R_{<=0} for every delta in Delta+. The failing classes
/// satisfy |Z| <= 1, so search_depth >= 1 makes the check complete.
StabilityCheck check_stability_function(const SurfaceConfig& cfg, const TubePointQ& p,
                                        const Rational& search_depth = 4, int threads = 1);

}  // namespace k3stab
