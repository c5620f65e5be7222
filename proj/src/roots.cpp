#include "k3stab/roots.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <array>
#include <functional>
#include <thread>

namespace k3stab {

namespace {

Mat<Rational> plane_gram(const Mat<Rational>& g, const Vec<Rational>& a, const Vec<Rational>& b) {
  Mat<Rational> m(2, 2);
  m(0, 0) = a.dot(g * a);
  m(0, 1) = m(1, 0) = a.dot(g * b);
  m(1, 1) = b.dot(g * b);
  return m;
}

void require_positive_plane(const Mat<Rational>& m) {
  Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (m(0, 0).sign() <= 0 || det.sign() <= 0)
    throw DomainError("Omega does not span a positive-definite two-plane");
}

}  // namespace

AdaptedFrame orthogonalize_frame(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  const Mat<Rational> g = cfg.mukai_gram_as<Rational>();
  const Vec<Rational>& a = omega.re.coords();
  const Vec<Rational>& b = omega.im.coords();
  AdaptedFrame fr;
  fr.plane_gram = plane_gram(g, a, b);
  require_positive_plane(fr.plane_gram);
  const Eigen::Index n = a.size();
  auto pair = [&](const Vec<Rational>& x, const Vec<Rational>& y) { return x.dot(g * y); };

  std::vector<Vec<Rational>> basis{a, Vec<Rational>(b - a * (fr.plane_gram(0, 1) / fr.plane_gram(0, 0)))};
  std::vector<Rational> norms{pair(basis[0], basis[0]), pair(basis[1], basis[1])};
  // The complement of a positive plane is negative definite, so Gram-Schmidt
  // there never meets an isotropic vector.
  for (Eigen::Index j = 0; j < n && static_cast<Eigen::Index>(basis.size()) < n; ++j) {
    Vec<Rational> u = Vec<Rational>::Unit(n, j);
    for (std::size_t i = 0; i < basis.size(); ++i) u -= basis[i] * (pair(u, basis[i]) / norms[i]);
    Rational nu = pair(u, u);
    if (nu == 0) continue;
    basis.push_back(u);
    norms.push_back(nu);
  }
  fr.basis.resize(n, n);
  fr.norms.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    fr.basis.col(i) = basis[i];
    fr.norms(i) = norms[i];
  }
  // v_1^2 + v_2^2 = x^T M^-1 x with x = Z(v), so k = 1/lambda_min(M).
  const Rational tr = fr.plane_gram.trace();
  const Rational det = fr.plane_gram(0, 0) * fr.plane_gram(1, 1) - fr.plane_gram(0, 1) * fr.plane_gram(1, 0);
  fr.k = (QuadraticSurd(tr) + QuadraticSurd::sqrt(tr * tr - 4 * det)) / QuadraticSurd(Rational(2 * det));
  fr.k_upper = fr.k.upper_bound(30);
  return fr;
}

Mat<Rational> enumeration_form(const SurfaceConfig& cfg, const ComplexMukaiVec& omega) {
  const Mat<Rational> g = cfg.mukai_gram_as<Rational>();
  const Eigen::Index n = g.rows();
  Mat<Rational> x(n, 2);
  x.col(0) = omega.re.coords();
  x.col(1) = omega.im.coords();
  Mat<Rational> m = plane_gram(g, x.col(0), x.col(1));
  require_positive_plane(m);
  Rational det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Mat<Rational> minv(2, 2);
  minv << m(1, 1) / det, -m(0, 1) / det, -m(1, 0) / det, m(0, 0) / det;
  Mat<Rational> gx = g * x;
  return Mat<Rational>(gx * minv * gx.transpose() * Rational(2) - g);
}

std::vector<Integer> ellipsoid_box(const Mat<Rational>& a, const Rational& radius) {
  Mat<Rational> inv = a.fullPivLu().inverse();
  std::vector<Integer> box;
  for (Eigen::Index j = 0; j < a.rows(); ++j) box.push_back(floor_sqrt(radius * inv(j, j)));
  return box;
}

namespace {

struct Ldl {
  Mat<Rational> l;  // unit lower triangular
  Vec<Rational> d;
};

Ldl ldl(const Mat<Rational>& a) {
  const Eigen::Index n = a.rows();
  Ldl out{Mat<Rational>::Identity(n, n), Vec<Rational>::Zero(n)};
  for (Eigen::Index j = 0; j < n; ++j) {
    Rational dj = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) dj -= out.l(j, k) * out.l(j, k) * out.d(k);
    if (dj.sign() <= 0) throw DomainError("enumeration form is not positive definite");
    out.d(j) = dj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Rational lij = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) lij -= out.l(i, k) * out.l(j, k) * out.d(k);
      out.l(i, j) = lij / dj;
    }
  }
  return out;
}

// All integer v with v^T A v <= radius. The last coordinate is chosen first;
// values of that coordinate are dealt round-robin to `threads` workers.
std::vector<Vec<Integer>> fincke_pohst(const Mat<Rational>& a, const Rational& radius, int threads,
                                       const std::function<bool(const Vec<Integer>&)>& keep) {
  const Ldl f = ldl(a);
  const Eigen::Index n = a.rows();

  auto range_at = [&](Eigen::Index j, const Vec<Integer>& v, const Rational& budget) {
    Rational c = 0;
    for (Eigen::Index i = j + 1; i < n; ++i) c -= f.l(i, j) * Rational(v(i));
    Rational q = budget / f.d(j);
    return std::tuple<Rational, Integer, Integer>{c, ceil_minus_sqrt(c, q), floor_plus_sqrt(c, q)};
  };

  auto walk = [&](int worker, std::vector<Vec<Integer>>& out) {
    Vec<Integer> v = Vec<Integer>::Zero(n);
    std::function<void(Eigen::Index, const Rational&)> rec = [&](Eigen::Index j, const Rational& budget) {
      auto [c, lo, hi] = range_at(j, v, budget);
      long counter = 0;
      for (Integer z = lo; z <= hi; ++z, ++counter) {
        if (j == n - 1 && counter % threads != worker) continue;
        v(j) = z;
        Rational t = Rational(z) - c;
        Rational rest = budget - f.d(j) * t * t;
        if (j == 0) {
          if (keep(v)) out.push_back(v);
        } else {
          rec(j - 1, rest);
        }
      }
      v(j) = 0;
    };
    rec(n - 1, radius);
  };

  threads = std::max(1, threads);
  std::vector<std::vector<Vec<Integer>>> parts(threads);
  if (threads == 1) {
    walk(0, parts[0]);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back([&, w] { walk(w, parts[w]); });
    for (auto& t : pool) t.join();
  }
  std::vector<Vec<Integer>> all;
  for (auto& p : parts)
    for (auto& v : p) all.push_back(std::move(v));
  return all;
}

}  // namespace

EnumerationResult enumerate_bounded(const SurfaceConfig& cfg, const EnumerationQuery& q) {
  if (q.bound_m.sign() < 0) throw DomainError("bound m must be non-negative");
  if (q.norm_floor < -2) throw DomainError("norm floor must be >= -2");
  EnumerationResult res;
  AdaptedFrame fr = orthogonalize_frame(cfg, q.omega);
  res.k_upper = fr.k_upper;
  res.required_radius = 2 * fr.k_upper * q.bound_m * q.bound_m - Rational(q.norm_floor);
  res.radius = res.required_radius;
  if (q.radius_cap && *q.radius_cap < res.radius) {
    res.radius = *q.radius_cap;
    res.complete = false;
  }
  if (q.spherical_only && cfg.is_abelian()) {
    res.abelian_policy = true;
    return res;
  }
  const Mat<Rational> a = enumeration_form(cfg, q.omega);
  if (res.radius.sign() < 0) {
    // A is positive definite: nothing fits, not even v = 0
    res.box.assign(static_cast<std::size_t>(cfg.mukai_dim()), Integer(0));
    res.box_volume = 0;
    return res;
  }
  res.box = ellipsoid_box(a, res.radius);
  res.box_volume = 1;
  for (const auto& b : res.box) res.box_volume *= 2 * b + 1;
  if (res.box_volume > q.box_cap)
    throw EnumerationCapError("enumeration box holds " + res.box_volume.str() + " lattice points, above the cap " +
                                  q.box_cap.str(),
                              res.box_volume);

  const Mat<Integer> gz = cfg.mukai_gram_as<Integer>();
  const Mat<Rational> g = cfg.mukai_gram_as<Rational>();
  const Vec<Rational> ga = g * q.omega.re.coords();
  const Vec<Rational> gb = g * q.omega.im.coords();
  const Rational m2 = q.bound_m * q.bound_m;
  auto keep = [&](const Vec<Integer>& v) {
    if (q.rank_positive_only && v(0).sign() <= 0) return false;
    Integer n2 = v.dot(gz * v);
    if (n2 < q.norm_floor) return false;
    if (q.spherical_only && n2 != -2) return false;
    Rational re = 0, im = 0;
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      if (v(k) == 0) continue;
      re += ga(k) * Rational(v(k));
      im += gb(k) * Rational(v(k));
    }
    return re * re + im * im <= m2;
  };
  for (auto& v : fincke_pohst(a, res.radius, q.threads, keep)) res.vectors.emplace_back(std::move(v));
  std::sort(res.vectors.begin(), res.vectors.end());
  return res;
}

// ---------------------------------------------------------------------------

// The norm has Gram 2 G w w^T G / w^2 - G, with inverse 2 w w^T / w^2 - G^-1.
std::vector<Rational> omega_norm_factors(const SurfaceConfig& cfg, const Slice2D& slice) {
  const Rect& win = slice.window();
  const Rational wmin = range(slice.omega_sq(), win.y0, win.y1).lo;
  const Mat<Rational> ginv = cfg.ns_gram_as<Rational>().fullPivLu().inverse();
  std::vector<Rational> out(cfg.picard_rank());
  for (int j = 0; j < cfg.picard_rank(); ++j) {
    UPoly wj = UPoly::linear(slice.base_omega()(j), slice.dir_omega()(j));
    Rational wj2_max = range(wj * wj, win.y0, win.y1).hi;
    out[j] = std::max(Rational(0), 2 * wj2_max / wmin - ginv(j, j));
  }
  return out;
}

namespace {

// Quadtree over the window; a node carries the bound on |Z(v)|^2 over its
// cell. A leaf can pass the mass test only if every ancestor does, so the
// walk prunes without changing the answer.
struct MassTree {
  struct Node {
    Rect cell;
    Rational vmax;
    std::array<int, 4> kids{-1, -1, -1, -1};
  };
  std::vector<Node> nodes;

  MassTree(const SliceCharge& zv, const Rect& win, int depth) { build(zv, win, depth); }

  int build(const SliceCharge& zv, const Rect& r, int depth) {
    const int id = static_cast<int>(nodes.size());
    nodes.push_back({r, zv.norm2_upper(r)});
    if (depth == 0) return id;
    Rational xm = (r.x0 + r.x1) / 2, ym = (r.y0 + r.y1) / 2;
    const Rect parts[4] = {{r.x0, xm, r.y0, ym}, {xm, r.x1, r.y0, ym}, {r.x0, xm, ym, r.y1}, {xm, r.x1, ym, r.y1}};
    for (int k = 0; k < 4; ++k) {
      int kid = build(zv, parts[k], depth - 1);
      nodes[id].kids[k] = kid;
    }
    return id;
  }

  // Some leaf below node passes ok(cell, vmax).
  template <typename Pred>
  bool any_leaf(int node, const Pred& ok) const {
    const Node& n = nodes[node];
    if (!ok(n.cell, n.vmax)) return false;
    if (n.kids[0] < 0) return true;
    for (int k : n.kids)
      if (any_leaf(k, ok)) return true;
    return false;
  }
};

}  // namespace

std::vector<MukaiVec> wall_candidates(const SurfaceConfig& cfg, const Slice2D& slice, const MukaiVec& v,
                                      const CandidateOptions& opt, CandidateBox* certificate) {
  const Rect& win = slice.window();
  const int rho = cfg.picard_rank();
  const SliceCharge zv(slice, v);

  // Mass bound M >= |Z(v)| over the window and the minimum of omega^2.
  const Rational m2 = zv.norm2_upper(win);
  const Rational m = sqrt_upper(m2, 20);
  const Rational wmin = range(slice.omega_sq(), win.y0, win.y1).lo;

  // |r| from r^2 w^2 <= 2|r|M + 2 + M^2/w^2.
  const Integer r_max = floor((m + sqrt_upper(2 * m2 + 2 * wmin, 20)) / wmin);

  const std::vector<Rational> coord_factor = omega_norm_factors(cfg, slice);

  int depth = 0;
  while ((1 << depth) < std::max(1, opt.subdivisions)) ++depth;
  const MassTree tree(zv, win, depth);

  const Mat<Integer> gz = cfg.mukai_gram_as<Integer>();
  auto norm = [&](const MukaiVec& w) { return w.coords().dot(gz * w.coords()); };

  CandidateBox box;
  box.r_max = r_max;
  box.mass_bound = m;
  box.delta_lo.assign(rho, Integer(0));
  box.delta_hi.assign(rho, Integer(0));

  // The box for each rank first, so the cap is checked before any work.
  struct Slab {
    Integer r;
    std::vector<Integer> lo, hi;
    Rational wcap;
  };
  std::vector<Slab> slabs;
  for (Integer r = -r_max; r <= r_max; ++r) {
    const Rational rq(r);
    const Rational abs_r = abs(rq);
    const Rational r2 = 2 * m2 / wmin + 2 * abs_r * m + 2 - rq * rq * wmin;
    if (r2.sign() < 0) continue;
    Slab sl{r, std::vector<Integer>(rho), std::vector<Integer>(rho), 2 * abs_r * m - rq * rq * wmin + m2 / wmin};
    Integer count = 1;
    for (int j = 0; j < rho; ++j) {
      Rational e0 = rq * (slice.base_beta()(j) + win.x0 * slice.dir_beta()(j));
      Rational e1 = rq * (slice.base_beta()(j) + win.x1 * slice.dir_beta()(j));
      sl.lo[j] = ceil_minus_sqrt(std::min(e0, e1), r2 * coord_factor[j]);
      sl.hi[j] = floor_plus_sqrt(std::max(e0, e1), r2 * coord_factor[j]);
      if (sl.hi[j] < sl.lo[j]) count = 0;
      else count *= sl.hi[j] - sl.lo[j] + 1;
      box.delta_lo[j] = std::min(box.delta_lo[j], sl.lo[j]);
      box.delta_hi[j] = std::max(box.delta_hi[j], sl.hi[j]);
    }
    if (count == 0) continue;
    box.points_scanned += count;
    if (box.points_scanned > opt.box_cap)
      throw EnumerationCapError("wall candidate box exceeds the cap " + opt.box_cap.str(), box.points_scanned);
    slabs.push_back(std::move(sl));
  }

  auto scan = [&](const Slab& sl, std::vector<MukaiVec>& out) {
    const Integer& r = sl.r;
    const Rational rq(r);
    Vec<Integer> d(rho);
    for (int j = 0; j < rho; ++j) d(j) = sl.lo[j];
    for (bool more = true; more;) {
      // Im Z(w) does not involve s: skip d when it is large everywhere.
      SliceCharge zw0(slice, MukaiVec(r, d, Integer(0)));
      bool live = tree.any_leaf(0, [&](const Rect& c, const Rational& vmax) {
        Rational im_lo = zw0.im_range(c).min_abs();
        return im_lo * im_lo <= vmax;
      });
      if (live) {
        const Integer d2 = cfg.dot<Integer>(d, d);
        Integer s_lo = 1, s_hi = 0;
        if (r == 0) {
          Interval dbr = range(slice.beta_dot(d.cast<Rational>()), win.x0, win.x1);
          s_lo = ceil(Rational(dbr.lo - m));
          s_hi = floor(Rational(dbr.hi + m));
        } else if (sl.wcap >= -2) {
          Rational a = (Rational(d2) - sl.wcap) / (2 * rq), b = (Rational(d2) + 2) / (2 * rq);
          s_lo = ceil(std::min(a, b));
          s_hi = floor(std::max(a, b));
        }
        for (Integer s = s_lo; s <= s_hi; ++s) {
          MukaiVec w(r, d, s);
          if (w.is_zero() || w == v) continue;
          if (norm(w) < -2 || norm(v - w) < -2) continue;
          SliceCharge zw(slice, w);
          if (tree.any_leaf(0, [&](const Rect& c, const Rational& vmax) { return zw.norm2_lower(c) <= vmax; }))
            out.push_back(std::move(w));
        }
      }
      // Odometer over the delta box.
      more = false;
      for (int j = 0; j < rho; ++j) {
        if (d(j) < sl.hi[j]) {
          ++d(j);
          more = true;
          break;
        }
        d(j) = sl.lo[j];
      }
    }
  };

  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(slabs.size())));
  std::vector<std::vector<MukaiVec>> parts(threads);
  auto worker = [&](int t) {
    for (std::size_t k = t; k < slabs.size(); k += threads) scan(slabs[k], parts[t]);
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  std::vector<MukaiVec> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  std::sort(out.begin(), out.end());
  if (certificate) *certificate = std::move(box);
  return out;
}

}  // namespace k3stab
