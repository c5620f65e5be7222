// Lattice shadows of autoequivalences: shift, line-bundle twist and spherical
// reflection, composed into words and acting on N(X) as integer matrices.
#pragma once

#include "k3stab/charge.hpp"

#include <string>
#include <variant>
#include <vector>

namespace k3stab {

struct Shift {
  friend bool operator==(const Shift&, const Shift&) = default;
};

struct LineBundleTwist {
  Vec<Integer> ell;
  friend bool operator==(const LineBundleTwist& a, const LineBundleTwist& b) { return a.ell == b.ell; }
};

struct SphericalReflection {
  MukaiVec delta;
  friend bool operator==(const SphericalReflection&, const SphericalReflection&) = default;
};

using IsometryGenerator = std::variant<Shift, LineBundleTwist, SphericalReflection>;

/// "shift", "twist:l1,..", "refl:r,d1,..,s".
std::string to_string(const IsometryGenerator& g);

/// Matrix of g on N(X) in the basis (1,0,0), NS basis, (0,0,1).
Mat<Integer> generator_matrix(const SurfaceConfig& cfg, const IsometryGenerator& g);

/// A word g_0 g_1 ... applied left to right: g_0 acts first.
class IsometryWord {
 public:
  IsometryWord() = default;
  /// Throws DomainError for a reflection in a non-root or a malformed class.
  IsometryWord(const SurfaceConfig& cfg, std::vector<IsometryGenerator> gens);

  void append(const SurfaceConfig& cfg, IsometryGenerator g);
  void append(const SurfaceConfig& cfg, const IsometryWord& w);

  const std::vector<IsometryGenerator>& generators() const { return gens_; }
  bool empty() const { return gens_.empty(); }
  std::size_t size() const { return gens_.size(); }
  /// Number of shifts; phases move by this amount.
  int shifts() const;

  /// M_{n-1} ... M_0.
  Mat<Integer> matrix(const SurfaceConfig& cfg) const;

  friend bool operator==(const IsometryWord&, const IsometryWord&) = default;

 private:
  static void validate(const SurfaceConfig& cfg, const IsometryGenerator& g);
  std::vector<IsometryGenerator> gens_;
};

std::string to_string(const IsometryWord& w);

MukaiVec apply_word(const SurfaceConfig& cfg, const IsometryWord& w, const MukaiVec& v);
ComplexMukaiVec apply_word_complex(const SurfaceConfig& cfg, const IsometryWord& w, const ComplexMukaiVec& omega);

struct IsometryCertificate {
  bool preserves_pairing = false;
  Mat<Integer> matrix;
  Mat<Integer> gram;            // Gram of N(X)
  Mat<Integer> conjugated_gram;  // M^T G M, equal to G for an isometry
  bool integral_inverse = false;  // det M = +-1
};

IsometryCertificate verify_hodge_isometry(const SurfaceConfig& cfg, const IsometryWord& w);
IsometryCertificate verify_hodge_isometry(const SurfaceConfig& cfg, const Mat<Integer>& m);

enum class BoundaryType { TypeA, TypeC };

struct BoundaryDiagnosis {
  MukaiVec wall_witness;
  BoundaryType type = BoundaryType::TypeA;
  // Type C: delta = sign (0, C, n); the deck reflection is in (0, C, k).
  Vec<Integer> curve;
  Integer n = 0;
  int sign = 1;
  Integer k = 0;
  IsometryWord deck_move;
  bool acts_trivially_on_lattice = false;
  std::string note;
};

std::string to_string(BoundaryType t);

/// delta must be a root with (exp(beta + i omega), delta) real and <= 0 and
/// r(delta) >= 0; otherwise DomainError. A+ and A- have the same image in
/// N(X) (x) C and are reported together.
BoundaryDiagnosis classify_boundary(const SurfaceConfig& cfg, const TubePointQ& p, const MukaiVec& delta);

/// Nearest integer to t, ties to the floor.
Integer round_half_down(const Rational& t);

struct ReductionResult {
  TubePointQ point;
  IsometryWord word;
  bool converged = false;
  bool verified = false;  // the word maps exp(input) to exp(output) exactly
  std::vector<TubePointQ> trace;
};

/// Reflects in (0, C, k), k the nearest integer to beta.C, while some
/// configured curve has omega.C < 0.
ReductionResult reduce_to_ample_chamber(const SurfaceConfig& cfg, const TubePointQ& p, int max_steps = 1000);

}  // namespace k3stab
