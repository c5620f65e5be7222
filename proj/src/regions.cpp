#include "k3stab/regions.hpp"

#include <stdexcept>

namespace k3stab {

namespace {

Mat<Rational> gram2(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  Mat<Rational> m(2, 2);
  m(0, 0) = mukai_pairing(cfg, omega.re, omega.re);
  m(0, 1) = m(1, 0) = mukai_pairing(cfg, omega.re, omega.im);
  m(1, 1) = mukai_pairing(cfg, omega.im, omega.im);
  return m;
}

using QS = QuadraticSurd;

}  // namespace

bool is_degenerate_plane(const ComplexMukaiVec& omega) {
  const auto& a = omega.re.coords();
  const auto& b = omega.im.coords();
  for (Eigen::Index i = 0; i < a.size(); ++i)
    for (Eigen::Index j = i + 1; j < a.size(); ++j)
      if (a(i) * b(j) != a(j) * b(i)) return false;
  return true;
}

bool in_positive_two_plane(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  if (is_degenerate_plane(omega)) return false;
  Mat<Rational> m = gram2(cfg, omega);
  return m(0, 0).sign() > 0 && (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).sign() > 0;
}

TubePointQ QNormalization::rational_point() const {
  if (irrational) throw DomainError("the Q-normalization is irrational (in Q(sqrt " + radicand.str() + "))");
  TubePointQ p{Vec<Rational>(point.beta.size()), Vec<Rational>(point.omega.size())};
  for (Eigen::Index k = 0; k < p.beta.size(); ++k) {
    p.beta(k) = point.beta(k).to_rational();
    p.omega(k) = point.omega(k).to_rational();
  }
  return p;
}

// The null lines of the complexified plane are c1 Re + Im with
// A c1^2 + 2B c1 + C = 0. Taking c1 = (-B - i sqrt(det))/A makes the frame map
// orientation preserving; scaling by 1/r then lands on exp(beta + i omega).
QNormalization q_normalize(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  if (!in_positive_two_plane(cfg, omega)) throw DomainError("q_normalize requires Omega in P(X)");
  Mat<Rational> m = gram2(cfg, omega);
  const Rational& a = m(0, 0);
  const Rational& b = m(0, 1);
  const Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const QS root = QS::sqrt(det);

  Complex<QS> c1{QS(Rational(-b / a)), -root / QS(a)};
  Complex<QS> rank = c1 * Complex<QS>(QS(omega.re.r())) + Complex<QS>(QS(omega.im.r()));
  if (rank.re.sign() == 0 && rank.im.sign() == 0)
    throw NoQRepresentative("the null line of Omega has rank component 0; no representative in Q(X)");
  Complex<QS> mu = Complex<QS>(QS(1)) / rank;
  Complex<QS> mc = mu * c1;

  const Eigen::Index n = omega.re.coords().size();
  Vec<QS> new_re(n), new_im(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    QS x(omega.re.coords()(k)), y(omega.im.coords()(k));
    new_re(k) = mc.re * x + mu.re * y;
    new_im(k) = mc.im * x + mu.im * y;
  }
  QNormalization out;
  const int rho = cfg.picard_rank();
  out.point.beta = new_re.segment(1, rho);
  out.point.omega = new_im.segment(1, rho);
  out.g << mc.re, mu.re, mc.im, mu.im;
  out.irrational = !root.is_rational();
  out.radicand = root.radicand();
  return out;
}

bool is_ample(const SurfaceConfig& cfg, const Vec<Rational>& omega) {
  if (cfg.dot<Rational>(omega, omega).sign() <= 0) return false;
  if (cfg.dot<Rational>(omega, cfg.ample().cast<Rational>()).sign() <= 0) return false;
  for (const auto& c : cfg.curves())
    if (cfg.dot<Rational>(omega, c.cast<Rational>()).sign() <= 0) return false;
  return true;
}

bool in_q_chart(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  if (omega.re.r() != 1 || omega.im.r() != 0) return false;
  GaussianRational self = mukai_pairing(cfg, omega, omega);
  if (!self.is_zero()) return false;
  Rational herm = mukai_pairing(cfg, omega.re, omega.re) + mukai_pairing(cfg, omega.im, omega.im);
  return herm.sign() > 0;
}

int orientation(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  if (!in_positive_two_plane(cfg, omega)) return 0;
  const Vec<Rational> zero = Vec<Rational>::Zero(cfg.picard_rank());
  ComplexMukaiVec ref = exp_class<Rational>(cfg, zero, cfg.ample().cast<Rational>());
  Rational d = mukai_pairing(cfg, omega.re, ref.re) * mukai_pairing(cfg, omega.im, ref.im) -
               mukai_pairing(cfg, omega.re, ref.im) * mukai_pairing(cfg, omega.im, ref.re);
  return d.sign();
}

std::vector<MukaiVec> l_violations(const SurfaceConfig& cfg, const TubePointQ& p, int threads, bool* complete,
                                   const std::optional<Rational>& radius_cap) {
  if (complete) *complete = true;
  if (cfg.is_abelian()) return {};
  EnumerationQuery q;
  q.omega = exp_class(cfg, p);
  q.bound_m = 1;
  q.norm_floor = -2;
  q.rank_positive_only = true;
  q.spherical_only = true;
  q.threads = threads;
  q.radius_cap = radius_cap;
  EnumerationResult res = enumerate_bounded(cfg, q);
  if (complete) *complete = res.complete;
  std::vector<MukaiVec> out;
  for (const auto& d : res.vectors) {
    GaussianRational z = central_charge(cfg, q.omega, d);
    if (z.im == 0 && z.re.sign() <= 0) out.push_back(d);
  }
  return out;
}

RegionReport region_report(const SurfaceConfig& cfg, const ComplexMukaiVec& omega, const RegionOptions& opt) {
  RegionReport rep;
  if (cfg.is_abelian())
    rep.notes.emplace_back("abelian surface: no spherical classes by policy, so P0 = P and L = K");
  if (cfg.picard_rank() > 1)
    rep.notes.emplace_back("ample cone taken relative to the configured (-2)-curves");
  rep.degenerate = is_degenerate_plane(omega);
  rep.in_P = in_positive_two_plane(cfg, omega);
  if (!rep.in_P) return rep;

  rep.in_P_plus = orientation(cfg, omega) > 0;
  try {
    rep.q_normalization = q_normalize(cfg, omega);
    const auto& w = rep.q_normalization->point.omega;
    QS wh = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
      for (Eigen::Index j = 0; j < w.size(); ++j)
        wh += w(i) * QS(Rational(cfg.ns_gram()(i, j) * cfg.ample()(j)));
    if ((wh.sign() > 0) != rep.in_P_plus)
      throw std::logic_error("orientation test and Q-normalization disagree on the P+ component");
  } catch (const NoQRepresentative& e) {
    rep.notes.emplace_back(e.what());
  }

  if (cfg.is_abelian()) {
    rep.in_P0 = true;
  } else {
    EnumerationQuery q;
    q.omega = omega;
    q.bound_m = 0;
    q.norm_floor = -2;
    q.spherical_only = true;
    q.threads = opt.threads;
    q.radius_cap = opt.search_bound;
    EnumerationResult res = enumerate_bounded(cfg, q);
    rep.p0_witnesses = res.vectors;
    rep.in_P0 = res.vectors.empty();
    if (!res.complete) rep.complete = false;
  }

  rep.in_Q = in_q_chart(cfg, omega);
  if (rep.in_Q) {
    TubePointQ p{omega.re.delta(), omega.im.delta()};
    rep.in_K = is_ample(cfg, p.omega);
    if (rep.in_K) {
      bool complete = true;
      rep.l_witnesses = l_violations(cfg, p, opt.threads, &complete, opt.search_bound);
      rep.in_L = rep.l_witnesses.empty();
      if (!complete) rep.complete = false;
    }
  }
  if (!rep.complete) rep.notes.emplace_back("enumeration radius exceeded the search bound; report is partial");
  return rep;
}

}  // namespace k3stab
