// Certified enumeration of lattice vectors with bounded central charge.
//
// For Omega in P(X), split N(X) (x) R into the positive plane of Omega and its
// negative-definite complement. With coordinates v_i in an orthonormalized
// frame, ||v||^2 = 2(v_1^2 + v_2^2) - (v,v) <= 2k|Z(v)|^2 - (v,v), so the set
// {(v,v) >= floor, |Z(v)| <= m} sits inside an ellipsoid of radius
// 2 k m^2 - floor, which is walked exactly by Fincke-Pohst.
#pragma once

#include "k3stab/charge.hpp"
#include "k3stab/slice.hpp"
#include "k3stab/surd.hpp"

#include <optional>
#include <vector>

namespace k3stab {

/// Orthogonal frame of N(X) (x) R adapted to the plane of Omega. Basis
/// vectors are rational and unnormalized; dividing f_i by sqrt|(f_i,f_i)|
/// gives the Gram matrix diag(1, 1, -1, ..., -1).
struct AdaptedFrame {
  Mat<Rational> basis;          // columns f_1 .. f_n; f_1, f_2 span the plane
  Vec<Rational> norms;          // (f_i, f_i)
  Mat<Rational> plane_gram;     // Gram of (Re Omega, Im Omega)
  QuadraticSurd k;              // max of (v_1^2 + v_2^2) / |Z(v)|^2, exact
  Rational k_upper;             // rational k_upper >= k
};

/// Throws DomainError if Omega does not span a positive-definite plane.
AdaptedFrame orthogonalize_frame(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

struct EnumerationQuery {
  ComplexMukaiVec omega;
  Rational bound_m;
  Integer norm_floor = -2;
  bool rank_positive_only = false;
  /// Keep only (v,v) = -2; empty on abelian surfaces by policy.
  bool spherical_only = false;
  /// Refuse boxes with more lattice points than this.
  Integer box_cap = Integer(1) << 32;
  /// Stop the walk at this ellipsoid radius (result flagged incomplete).
  std::optional<Rational> radius_cap;
  int threads = 1;
};

struct EnumerationResult {
  std::vector<MukaiVec> vectors;  // sorted lexicographically on (r, delta, s)
  Rational radius;                // Fincke-Pohst radius actually walked
  Rational required_radius;       // 2 k_upper m^2 - floor
  std::vector<Integer> box;       // half-widths of the bounding box
  Integer box_volume;
  Rational k_upper;
  bool complete = true;
  bool abelian_policy = false;    // spherical_only on an abelian surface
};

EnumerationResult enumerate_bounded(const SurfaceConfig& cfg, const EnumerationQuery& q);

/// Positive-definite form A with v^T A v = 2 x^T M^-1 x - (v,v), x = (Z(v)).
Mat<Rational> enumeration_form(const SurfaceConfig& cfg, const ComplexMukaiVec& omega);

/// Integer half-widths floor(sqrt(R (A^-1)_jj)) of the box containing
/// {v^T A v <= R}.
std::vector<Integer> ellipsoid_box(const Mat<Rational>& a, const Rational& radius);

struct CandidateOptions {
  int subdivisions = 8;  // per axis, for the per-cell mass filter
  Integer box_cap = Integer(1) << 28;
  int threads = 1;
};

struct CandidateBox {
  Integer r_max;
  std::vector<Integer> delta_lo, delta_hi;  // over all r
  Rational mass_bound;                      // upper bound of |Z(v)| on the window
  Integer points_scanned = 0;
};

/// Upper bounds over the slice window of the diagonal of the inverse Gram of
/// the positive-definite norm ||u||^2 = 2(u.w)^2/w^2 - u^2 on NS (x) R, so
/// |u_j| <= sqrt(R^2 c_j) whenever ||u||^2 <= R^2 at some point of the window.
std::vector<Rational> omega_norm_factors(const SurfaceConfig& cfg, const Slice2D& slice);

/// Every integral w != 0, v with (w,w) >= -2, (v-w,v-w) >= -2 and
/// |Z(w)| <= |Z(v)| at some point of the slice window. Sound for any slice.
std::vector<MukaiVec> wall_candidates(const SurfaceConfig& cfg, const Slice2D& slice, const MukaiVec& v,
                                      const CandidateOptions& opt = {}, CandidateBox* certificate = nullptr);

}  // namespace k3stab
