// Wall loci in a 2-D slice of the tube domain.
//
// A hole wall is H(delta) = {Im Z(delta) = 0, Re Z(delta) <= 0} for a root
// delta of positive rank. A numerical wall for v is the locus where
// Z(w)/Z(v) is a positive real with Z(v-w)/Z(v) positive too. Loci are exact
// polynomials; polylines exist only for drawing. Every wall is a potential
// wall: whether a class is realized by semistable objects is not decided.
#pragma once

#include "k3stab/roots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3stab {

enum class WallKind { HoleBoundary, NumericalWall };

std::string to_string(WallKind k);

struct SideCondition {
  Poly2 poly;
  Relation rel;
};

struct SegmentPoint {
  Rational x;
  Rational y;
  bool exact = true;  // false: within the wall's tolerance of the locus
  friend bool operator==(const SegmentPoint&, const SegmentPoint&) = default;
};

using Polyline = std::vector<SegmentPoint>;

struct Wall {
  WallKind kind = WallKind::HoleBoundary;
  MukaiVec witness;                // delta, or w
  std::optional<MukaiVec> partner;  // v - w for numerical walls
  Poly2 locus;
  std::vector<SideCondition> conditions;
  std::vector<Polyline> segments;
  Rational tolerance;             // bound on the distance of inexact points to the locus
  bool certified_active = false;  // a point of the active set is known to lie in the window

  /// Locus and side conditions hold at (x, y).
  bool active_at(const Rational& x, const Rational& y) const;
};

struct WallOptions {
  int grid = 32;         // polyline sampling resolution per axis
  int filter_depth = 6;  // subdivision depth of the may-meet filter
  int threads = 1;
  CandidateOptions candidates;
};

/// Decides exactly whether H(delta) meets the window, with a witness x.
std::optional<FeasiblePoint> hole_meets_window(const SliceCharge& z, const Rect& window);

/// All delta in Delta+ whose H(delta) meets the slice window.
std::vector<Wall> hole_walls(const SurfaceConfig& cfg, const Slice2D& slice, const WallOptions& opt = {});

/// Numerical walls of v from the certified candidate set, one per locus and
/// unordered pair {w, v-w}. Walls whose active set provably misses the window
/// are dropped; the rest are kept (a superset).
std::vector<Wall> numerical_walls(const SurfaceConfig& cfg, const Slice2D& slice, const MukaiVec& v,
                                  const WallOptions& opt = {});

/// Builds the wall record (locus, conditions) without any window work.
Wall make_hole_wall(const Slice2D& slice, const MukaiVec& delta);
Wall make_numerical_wall(const Slice2D& slice, const MukaiVec& v, const MukaiVec& w);

/// Polylines of the active set by exact root isolation on grid edges.
void sample_segments(Wall& wall, const Rect& window, int grid);

/// The exact set of y on the vertical line x = x0 where the wall is active
/// and omega(y) lies in the positive cone (omega^2 > 0, omega.H > 0).
std::vector<SetPiece> restrict_to_vertical_line(const SurfaceConfig& cfg, const Slice2D& slice, const Wall& wall,
                                                const Rational& x0);

struct ChamberMap {
  int nx = 0;
  int ny = 0;
  std::vector<int> cell;  // row-major (j * nx + i); -1 marks a boundary cell
  int chambers = 0;
  std::vector<std::vector<int>> fingerprints;  // sign vector of each chamber

  int at(int i, int j) const { return cell[static_cast<std::size_t>(j) * nx + i]; }
};

/// Labels grid cells by the signs of the wall polynomials at a 3x3 lattice of
/// points in each cell; cells where a sign varies or vanishes are boundary
/// cells. Adjacent cells with equal fingerprints are merged.
ChamberMap chamber_sample(const Slice2D& slice, const std::vector<Wall>& walls, int grid);

/// Canonical order: kind, witness, partner.
bool wall_less(const Wall& a, const Wall& b);

}  // namespace k3stab
