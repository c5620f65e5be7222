// Fixtures, generators and independent oracles shared by the test binaries.
// The oracles avoid the library's code paths: plain loops over the Gram
// entries, explicit complex arithmetic on (re, im) pairs, naive box scans.
#pragma once

#include "k3stab/lattice.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace fixture {

using namespace k3stab;

inline SurfaceConfig rank_one(long h2, SurfaceType t = SurfaceType::K3) {
  return SurfaceConfig(t, Mat<Integer>::Constant(1, 1, Integer(h2)), Vec<Integer>::Constant(1, Integer(1)));
}
inline SurfaceConfig deg2() { return rank_one(2); }
inline SurfaceConfig deg4() { return rank_one(4); }
inline SurfaceConfig abelian() { return rank_one(2, SurfaceType::Abelian); }

// Quartic containing a line: H^2 = 4, H.C = 1, C^2 = -2.
inline SurfaceConfig quartic_line() {
  Mat<Integer> g(2, 2);
  g << 4, 1, 1, -2;
  Vec<Integer> h(2), c(2);
  h << 1, 0;
  c << 0, 1;
  return SurfaceConfig(SurfaceType::K3, g, h, {c});
}

inline Vec<Integer> ivec(std::initializer_list<long> xs) {
  Vec<Integer> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (long x : xs) v(k++) = x;
  return v;
}
inline Vec<Rational> qvec(std::initializer_list<Rational> xs) {
  Vec<Rational> v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index k = 0;
  for (const auto& x : xs) v(k++) = x;
  return v;
}
inline MukaiVec mv(std::initializer_list<long> xs) { return MukaiVec(ivec(xs)); }

inline TubePointQ point(Vec<Rational> beta, Vec<Rational> omega) { return {std::move(beta), std::move(omega)}; }

// ---------------------------------------------------------------------------
// Generators

struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long num_bound = 20, long den_bound = 12) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }
  Rational positive(long num_bound = 20, long den_bound = 12) {
    return Rational(integer(1, num_bound), integer(1, den_bound));
  }

  MukaiVec mukai(int rho, long bound = 6) {
    Vec<Integer> v(rho + 2);
    for (int k = 0; k < rho + 2; ++k) v(k) = integer(-bound, bound);
    return MukaiVec(v);
  }
  Vec<Integer> ns_integral(int rho, long bound = 4) {
    Vec<Integer> v(rho);
    for (int k = 0; k < rho; ++k) v(k) = integer(-bound, bound);
    return v;
  }
  Vec<Rational> ns_rational(int rho, long num_bound = 20, long den_bound = 12) {
    Vec<Rational> v(rho);
    for (int k = 0; k < rho; ++k) v(k) = rational(num_bound, den_bound);
    return v;
  }
};

// ---------------------------------------------------------------------------
// Oracles

inline Rational ns_dot(const SurfaceConfig& cfg, const Vec<Rational>& a, const Vec<Rational>& b) {
  Rational acc = 0;
  for (int i = 0; i < cfg.picard_rank(); ++i)
    for (int j = 0; j < cfg.picard_rank(); ++j) acc += a(i) * Rational(cfg.ns_gram()(i, j)) * b(j);
  return acc;
}

/// D1.D2 - r1 s2 - r2 s1, written out.
inline Rational pairing_oracle(const SurfaceConfig& cfg, const MukaiVec& a, const MukaiVec& b) {
  const int rho = cfg.picard_rank();
  Vec<Rational> da(rho), db(rho);
  for (int k = 0; k < rho; ++k) {
    da(k) = Rational(a.coords()(k + 1));
    db(k) = Rational(b.coords()(k + 1));
  }
  return ns_dot(cfg, da, db) - Rational(a.r() * b.s()) - Rational(b.r() * a.s());
}

/// (exp(beta + i omega), v) from the components of exp: with
/// exp = (1, B, c), B = beta + i omega, c = (beta^2 - omega^2)/2 + i beta.omega,
/// the pairing is B.D - s - r c.
inline std::pair<Rational, Rational> charge_oracle(const SurfaceConfig& cfg, const TubePointQ& p, const MukaiVec& v) {
  const int rho = cfg.picard_rank();
  Vec<Rational> d(rho);
  for (int k = 0; k < rho; ++k) d(k) = Rational(v.coords()(k + 1));
  Rational c_re = (ns_dot(cfg, p.beta, p.beta) - ns_dot(cfg, p.omega, p.omega)) / 2;
  Rational c_im = ns_dot(cfg, p.beta, p.omega);
  Rational r(v.r()), s(v.s());
  return {ns_dot(cfg, p.beta, d) - s - r * c_re, ns_dot(cfg, p.omega, d) - r * c_im};
}

/// Every integral v in the box |coords_k| <= half_width_k with (v,v) >= floor
/// and |Z(v)|^2 <= m^2 at the tube point.
inline std::vector<MukaiVec> brute_force_scan(const SurfaceConfig& cfg, const TubePointQ& p,
                                              const std::vector<long>& half_width, const Rational& m, long floor,
                                              bool spherical, bool rank_positive) {
  const int n = cfg.mukai_dim();
  std::vector<MukaiVec> out;
  std::vector<long> c(n);
  for (int k = 0; k < n; ++k) c[k] = -half_width[k];
  for (;;) {
    Vec<Integer> x(n);
    for (int k = 0; k < n; ++k) x(k) = c[k];
    MukaiVec v(x);
    Rational norm = pairing_oracle(cfg, v, v);
    bool keep = norm >= floor && (!spherical || norm == -2) && (!rank_positive || v.r() > 0);
    if (keep && spherical && cfg.is_abelian()) keep = false;
    if (keep) {
      auto [re, im] = charge_oracle(cfg, p, v);
      keep = re * re + im * im <= m * m;
    }
    if (keep) out.push_back(v);
    int k = n - 1;
    while (k >= 0 && c[k] == half_width[k]) {
      c[k] = -half_width[k];
      --k;
    }
    if (k < 0) break;
    ++c[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A random ample omega: rank one gives yH; otherwise rejection sampling
/// against omega^2 > 0, omega.H > 0, omega.C > 0 computed here.
inline Vec<Rational> random_ample(Gen& g, const SurfaceConfig& cfg, const Rational& min_sq = 0) {
  for (;;) {
    Vec<Rational> w = cfg.picard_rank() == 1 ? Vec<Rational>(Vec<Rational>::Constant(1, g.positive(40, 8)))
                                             : g.ns_rational(cfg.picard_rank(), 30, 6);
    if (ns_dot(cfg, w, w) <= min_sq) continue;
    if (ns_dot(cfg, w, cfg.ample().cast<Rational>()) <= 0) continue;
    bool ok = true;
    for (const auto& c : cfg.curves()) ok = ok && ns_dot(cfg, w, c.cast<Rational>()) > 0;
    if (ok) return w;
  }
}

inline std::string source_dir() { return K3STAB_SOURCE_DIR; }

}  // namespace fixture
