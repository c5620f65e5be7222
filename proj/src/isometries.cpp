#include "k3stab/isometries.hpp"

#include "k3stab/regions.hpp"

#include <Eigen/LU>

namespace k3stab {

namespace {

std::string join(const Vec<Integer>& v) {
  std::string out;
  for (Eigen::Index k = 0; k < v.size(); ++k) out += (k ? "," : "") + v(k).str();
  return out;
}

}  // namespace

std::string to_string(const IsometryGenerator& g) {
  if (std::holds_alternative<Shift>(g)) return "shift";
  if (auto* t = std::get_if<LineBundleTwist>(&g)) return "twist:" + join(t->ell);
  return "refl:" + join(std::get<SphericalReflection>(g).delta.coords());
}

Mat<Integer> generator_matrix(const SurfaceConfig& cfg, const IsometryGenerator& g) {
  const int n = cfg.mukai_dim();
  const int rho = cfg.picard_rank();
  if (std::holds_alternative<Shift>(g)) return Mat<Integer>(-Mat<Integer>::Identity(n, n));
  if (auto* t = std::get_if<LineBundleTwist>(&g)) {
    const Vec<Integer>& ell = t->ell;
    cfg.require_ns(ell.size(), "twist class");
    Mat<Integer> m = Mat<Integer>::Identity(n, n);
    Vec<Integer> gl = cfg.ns_gram() * ell;
    m.block(1, 0, rho, 1) = ell;
    m.block(n - 1, 1, 1, rho) = gl.transpose();
    m(n - 1, 0) = ell.dot(gl) / 2;
    return m;
  }
  const MukaiVec& d = std::get<SphericalReflection>(g).delta;
  cfg.require_ns(d.picard_rank(), "reflection class");
  Vec<Integer> gd = cfg.mukai_gram_as<Integer>() * d.coords();
  return Mat<Integer>(Mat<Integer>::Identity(n, n) + d.coords() * gd.transpose());
}

void IsometryWord::validate(const SurfaceConfig& cfg, const IsometryGenerator& g) {
  if (auto* t = std::get_if<LineBundleTwist>(&g)) cfg.require_ns(t->ell.size(), "twist class");
  if (auto* r = std::get_if<SphericalReflection>(&g)) {
    cfg.require_ns(r->delta.picard_rank(), "reflection class");
    if (cfg.is_abelian()) throw DomainError("abelian surfaces have no spherical objects, so no reflections");
    if (mukai_pairing(cfg, r->delta, r->delta) != -2)
      throw DomainError("reflection class " + to_string(r->delta) + " is not a root: (delta,delta) != -2");
  }
}

IsometryWord::IsometryWord(const SurfaceConfig& cfg, std::vector<IsometryGenerator> gens) : gens_(std::move(gens)) {
  for (const auto& g : gens_) validate(cfg, g);
}

void IsometryWord::append(const SurfaceConfig& cfg, IsometryGenerator g) {
  validate(cfg, g);
  gens_.push_back(std::move(g));
}

void IsometryWord::append(const SurfaceConfig& cfg, const IsometryWord& w) {
  for (const auto& g : w.gens_) append(cfg, g);
}

int IsometryWord::shifts() const {
  int n = 0;
  for (const auto& g : gens_) n += std::holds_alternative<Shift>(g);
  return n;
}

Mat<Integer> IsometryWord::matrix(const SurfaceConfig& cfg) const {
  Mat<Integer> m = Mat<Integer>::Identity(cfg.mukai_dim(), cfg.mukai_dim());
  for (const auto& g : gens_) m = generator_matrix(cfg, g) * m;
  return m;
}

std::string to_string(const IsometryWord& w) {
  std::string out;
  for (const auto& g : w.generators()) out += (out.empty() ? "" : " ") + to_string(g);
  return out.empty() ? "id" : out;
}

MukaiVec apply_word(const SurfaceConfig& cfg, const IsometryWord& w, const MukaiVec& v) {
  cfg.require_ns(v.picard_rank(), "Mukai vector");
  return MukaiVec(Vec<Integer>(w.matrix(cfg) * v.coords()));
}

ComplexMukaiVec apply_word_complex(const SurfaceConfig& cfg, const IsometryWord& w, const ComplexMukaiVec& omega) {
  Mat<Rational> m = w.matrix(cfg).cast<Rational>();
  return {MukaiVecQ(Vec<Rational>(m * omega.re.coords())), MukaiVecQ(Vec<Rational>(m * omega.im.coords()))};
}

IsometryCertificate verify_hodge_isometry(const SurfaceConfig& cfg, const Mat<Integer>& m) {
  IsometryCertificate c;
  c.matrix = m;
  c.gram = cfg.mukai_gram_as<Integer>();
  if (m.rows() != c.gram.rows() || m.cols() != c.gram.cols()) return c;
  c.conjugated_gram = m.transpose() * c.gram * m;
  c.preserves_pairing = c.conjugated_gram == c.gram;
  Rational det = m.cast<Rational>().fullPivLu().determinant();
  c.integral_inverse = det == 1 || det == -1;
  return c;
}

IsometryCertificate verify_hodge_isometry(const SurfaceConfig& cfg, const IsometryWord& w) {
  return verify_hodge_isometry(cfg, w.matrix(cfg));
}

std::string to_string(BoundaryType t) { return t == BoundaryType::TypeA ? "A+/A-" : "C_k"; }

Integer round_half_down(const Rational& t) { return ceil(Rational(t - Rational(1, 2))); }

BoundaryDiagnosis classify_boundary(const SurfaceConfig& cfg, const TubePointQ& p, const MukaiVec& delta) {
  cfg.require_ns(delta.picard_rank(), "wall class");
  if (mukai_pairing(cfg, delta, delta) != -2)
    throw DomainError("classify_boundary: " + to_string(delta) + " is not a root ((delta,delta) != -2)");
  if (cfg.is_abelian()) throw DomainError("classify_boundary: abelian surfaces have no spherical classes");
  GaussianRational z = central_charge(cfg, exp_class(cfg, p), delta);
  if (z.im != 0 || z.re.sign() > 0)
    throw DomainError("classify_boundary: (Omega, delta) = " + to_string(z) + " is not in R_{<=0}; delta is not on a wall at p");
  if (delta.r().sign() < 0) throw DomainError("classify_boundary: r(delta) < 0; walls are indexed by r(delta) >= 0");

  BoundaryDiagnosis d;
  d.wall_witness = delta;
  if (delta.r().sign() > 0) {
    d.type = BoundaryType::TypeA;
    d.deck_move = IsometryWord(cfg, {SphericalReflection{delta}, SphericalReflection{delta}});
    d.note = "A+ and A- are not distinguished by lattice data; both sides map to the same point of N(X)(x)C";
  } else {
    d.type = BoundaryType::TypeC;
    Vec<Integer> c = delta.delta();
    Integer ch = cfg.dot<Integer>(c, cfg.ample());
    d.sign = ch.sign() > 0 ? 1 : -1;
    d.curve = c * Integer(d.sign);
    d.n = delta.s() * d.sign;
    d.k = round_half_down(cfg.dot<Rational>(p.beta, d.curve.cast<Rational>()));
    d.deck_move = IsometryWord(cfg, {SphericalReflection{MukaiVec(Integer(0), d.curve, d.k)}});
    d.note = "deck reflection in (0,C,k) with k the nearest integer to beta.C";
  }
  d.acts_trivially_on_lattice = d.deck_move.matrix(cfg) == Mat<Integer>::Identity(cfg.mukai_dim(), cfg.mukai_dim());
  return d;
}

ReductionResult reduce_to_ample_chamber(const SurfaceConfig& cfg, const TubePointQ& p, int max_steps) {
  const TubePointQ start = make_tube_point(cfg, p.beta, p.omega);
  if (cfg.dot<Rational>(p.omega, cfg.ample().cast<Rational>()).sign() <= 0)
    throw DomainError("reduce_to_ample_chamber requires omega.H > 0");
  ReductionResult res;
  res.point = start;
  res.trace.push_back(start);
  for (int step = 0;; ++step) {
    const Vec<Integer>* bad = nullptr;
    for (const auto& c : cfg.curves())
      if (cfg.dot<Rational>(res.point.omega, c.cast<Rational>()).sign() < 0) {
        bad = &c;
        break;
      }
    if (!bad) {
      res.converged = true;
      break;
    }
    if (step == max_steps) break;
    const Vec<Rational> c = bad->cast<Rational>();
    Integer k = round_half_down(cfg.dot<Rational>(res.point.beta, c));
    res.word.append(cfg, SphericalReflection{MukaiVec(Integer(0), *bad, k)});
    // (Omega, (0,C,k)) = (C.beta - k) + i C.omega, and the rank stays 1.
    Rational cb = cfg.dot<Rational>(res.point.beta, c) - Rational(k);
    Rational cw = cfg.dot<Rational>(res.point.omega, c);
    res.point.beta += c * cb;
    res.point.omega += c * cw;
    res.trace.push_back(res.point);
  }
  ComplexMukaiVec moved = apply_word_complex(cfg, res.word, exp_class(cfg, start));
  res.verified = moved == exp_class(cfg, res.point);
  return res;
}

}  // namespace k3stab
