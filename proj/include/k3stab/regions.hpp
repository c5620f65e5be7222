// Membership in P(X), P+(X), P0(X), Q(X), K(X), L(X) and normalization of a
// positive two-plane onto the exponential chart by GL+(2,R).
#pragma once

#include "k3stab/roots.hpp"
#include "k3stab/surd.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3stab {

/// Leading-minor test on the Gram matrix of (Re Omega, Im Omega).
bool in_positive_two_plane(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

/// True when Re Omega and Im Omega are linearly dependent.
bool is_degenerate_plane(const ComplexMukaiVec& omega);

/// A real 2x2 matrix acting on the frame (Re, Im): new_re = g00 Re + g01 Im,
/// new_im = g10 Re + g11 Im.
using GLPlusElement = Eigen::Matrix<QuadraticSurd, 2, 2>;

struct QNormalization {
  TubePoint<QuadraticSurd> point;
  GLPlusElement g;
  bool irrational = false;  // coordinates live in Q(sqrt d), d = radicand
  Integer radicand = 0;

  /// The point with rational coordinates; throws DomainError if irrational.
  TubePointQ rational_point() const;
};

/// Throws DomainError if Omega is not in P(X), and NoQRepresentative when the
/// oriented null line has rank component 0.
QNormalization q_normalize(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

class NoQRepresentative : public DomainError {
 public:
  using DomainError::DomainError;
};

/// omega^2 > 0, omega.H > 0 and omega.C > 0 for every configured curve.
bool is_ample(const SurfaceConfig& cfg, const Vec<Rational>& omega);

/// exp(beta + i omega) exactly: rank 1, null and positive.
bool in_q_chart(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

/// Orientation of the plane of Omega against the plane of exp(iH): +1 for
/// P+(X), -1 for the conjugate component, 0 if Omega is not in P(X).
int orientation(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

struct RegionReport {
  bool in_P = false;
  bool in_P_plus = false;
  bool in_P0 = false;
  bool in_Q = false;
  bool in_K = false;
  bool in_L = false;
  bool degenerate = false;
  bool complete = true;
  std::vector<MukaiVec> p0_witnesses;  // roots delta with (Omega, delta) = 0
  std::vector<MukaiVec> l_witnesses;   // delta in Delta+ with (Omega, delta) <= 0 real
  std::optional<QNormalization> q_normalization;
  std::vector<std::string> notes;
};

struct RegionOptions {
  /// Cap on the enumeration radius; exceeding it marks the report incomplete.
  Rational search_bound = 1000;
  int threads = 1;
};

RegionReport region_report(const SurfaceConfig& cfg, const ComplexMukaiVec& omega, const RegionOptions& opt = {});

/// Roots in Delta+ with (exp(beta + i omega), delta) real and <= 0, found by
/// enumeration: such delta have |Z| <= 1, since Re Z > -1/r there.
std::vector<MukaiVec> l_violations(const SurfaceConfig& cfg, const TubePointQ& p, int threads = 1,
                                   bool* complete = nullptr, const std::optional<Rational>& radius_cap = {});

}  // namespace k3stab
