#include "k3stab/walls.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace k3stab {

std::string to_string(WallKind k) { return k == WallKind::HoleBoundary ? "hole" : "numerical"; }

bool Wall::active_at(const Rational& x, const Rational& y) const {
  if (locus(x, y) != 0) return false;
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const SideCondition& c) { return satisfies(c.poly(x, y).sign(), c.rel); });
}

bool wall_less(const Wall& a, const Wall& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.witness != b.witness) return a.witness < b.witness;
  if (a.partner.has_value() != b.partner.has_value()) return !a.partner.has_value();
  return a.partner && *a.partner < *b.partner;
}

// ---------------------------------------------------------------------------
// Hole walls

Wall make_hole_wall(const Slice2D& slice, const MukaiVec& delta) {
  SliceCharge z(slice, delta);
  Wall w;
  w.kind = WallKind::HoleBoundary;
  w.witness = delta;
  w.locus = z.im();
  w.conditions.push_back({z.re(), Relation::NonPositive});
  return w;
}

// Im = A(x) + y C(x) with A, C linear, Re = q1(x) + q2(y). Away from C = 0
// the locus is the graph y = -A/C, and clearing the positive factor C^2 turns
// every condition into a univariate sign condition in x.
std::optional<FeasiblePoint> hole_meets_window(const SliceCharge& z, const Rect& win) {
  const UPoly a = UPoly::linear(z.im00(), z.im10());
  const UPoly c = UPoly::linear(z.im01(), z.im11());
  const UPoly& q1 = z.re_x();
  const UPoly& q2 = z.re_y();
  const Rational q2_min = range(q2, win.y0, win.y1).lo;

  auto vertical = [&](const Rational& x) -> std::optional<FeasiblePoint> {
    if (x < win.x0 || win.x1 < x) return std::nullopt;
    if (q1(x) + q2_min <= 0) return FeasiblePoint{{x, x, true}};
    return std::nullopt;
  };

  if (c.is_zero()) {
    if (a.is_zero()) {
      if (range(q1, win.x0, win.x1).lo + q2_min <= 0) return FeasiblePoint{{win.x0, win.x1, false}};
      return std::nullopt;
    }
    if (a.degree() < 1) return std::nullopt;
    return vertical(-a.coeff(0) / a.coeff(1));
  }
  if (c.degree() == 1) {
    Rational xc = -c.coeff(0) / c.coeff(1);
    if (a(xc) == 0)
      if (auto hit = vertical(xc)) return hit;
  }
  const UPoly c2 = c * c;
  const UPoly ac = a * c;
  const UPoly re = q1 * c2 + q2.coeff(0) * c2 - q2.coeff(1) * ac + q2.coeff(2) * (a * a);
  const SignCondition conds[] = {
      {c, Relation::NonZero},
      {win.y0 * c2 + ac, Relation::NonPositive},
      {win.y1 * c2 + ac, Relation::NonNegative},
      {re, Relation::NonPositive},
  };
  return find_feasible(conds, win.x0, win.x1);
}

std::vector<Wall> hole_walls(const SurfaceConfig& cfg, const Slice2D& slice, const WallOptions& opt) {
  std::vector<Wall> out;
  if (cfg.is_abelian()) return out;
  const Rect& win = slice.window();
  const int rho = cfg.picard_rank();
  const Rational wmin = range(slice.omega_sq(), win.y0, win.y1).lo;
  const std::vector<Rational> factor = omega_norm_factors(cfg, slice);

  // On H(delta): u = D - r beta has u.w = 0, so r^2 w^2 + ||u||^2 <= 2.
  const Integer r_max = floor_sqrt(Rational(2) / wmin);
  Integer scanned = 0;
  for (Integer r = 1; r <= r_max; ++r) {
    const Rational rq(r);
    const Rational r2 = 2 - rq * rq * wmin;
    if (r2.sign() < 0) continue;
    std::vector<Integer> lo(rho), hi(rho);
    bool empty = false;
    Integer count = 1;
    for (int j = 0; j < rho; ++j) {
      Rational e0 = rq * (slice.base_beta()(j) + win.x0 * slice.dir_beta()(j));
      Rational e1 = rq * (slice.base_beta()(j) + win.x1 * slice.dir_beta()(j));
      lo[j] = ceil_minus_sqrt(std::min(e0, e1), r2 * factor[j]);
      hi[j] = floor_plus_sqrt(std::max(e0, e1), r2 * factor[j]);
      if (hi[j] < lo[j]) empty = true;
      else count *= hi[j] - lo[j] + 1;
    }
    if (empty) continue;
    scanned += count;
    if (scanned > opt.candidates.box_cap)
      throw EnumerationCapError("hole wall search box exceeds the cap " + opt.candidates.box_cap.str(), scanned);
    Vec<Integer> d(rho);
    for (int j = 0; j < rho; ++j) d(j) = lo[j];
    for (bool more = true; more;) {
      Integer num = cfg.dot<Integer>(d, d) + 2;
      if (num % (2 * r) == 0) {
        MukaiVec delta(r, d, Integer(num / (2 * r)));
        if (hole_meets_window(SliceCharge(slice, delta), win)) {
          Wall w = make_hole_wall(slice, delta);
          w.certified_active = true;
          out.push_back(std::move(w));
        }
      }
      more = false;
      for (int j = 0; j < rho; ++j) {
        if (d(j) < hi[j]) {
          ++d(j);
          more = true;
          break;
        }
        d(j) = lo[j];
      }
    }
  }
  for (auto& w : out) sample_segments(w, win, opt.grid);
  std::sort(out.begin(), out.end(), wall_less);
  return out;
}

// ---------------------------------------------------------------------------
// Numerical walls

Wall make_numerical_wall(const Slice2D& slice, const MukaiVec& v, const MukaiVec& w) {
  const MukaiVec u = v - w;
  SliceCharge zv(slice, v), zw(slice, w), zu(slice, u);
  const Poly2 rv = zv.re(), iv = zv.im();
  Wall wall;
  wall.kind = WallKind::NumericalWall;
  wall.witness = std::min(w, u);
  wall.partner = std::max(w, u);
  wall.locus = zw.im() * rv - zw.re() * iv;
  wall.conditions.push_back({zw.re() * rv + zw.im() * iv, Relation::Positive});
  wall.conditions.push_back({zu.re() * rv + zu.im() * iv, Relation::Positive});
  return wall;
}

namespace {

// False only if the active set provably misses r.
bool may_meet(const Wall& w, const Rect& r, int depth) {
  Interval l = bound(w.locus, r);
  if (l.lo.sign() > 0 || l.hi.sign() < 0) return false;
  for (const auto& c : w.conditions) {
    Interval b = bound(c.poly, r);
    if (c.rel == Relation::Positive && b.hi.sign() <= 0) return false;
    if (c.rel == Relation::NonPositive && b.lo.sign() > 0) return false;
  }
  if (depth == 0) return true;
  Rational xm = (r.x0 + r.x1) / 2, ym = (r.y0 + r.y1) / 2;
  const Rect parts[4] = {{r.x0, xm, r.y0, ym}, {xm, r.x1, r.y0, ym}, {r.x0, xm, ym, r.y1}, {xm, r.x1, ym, r.y1}};
  for (const auto& p : parts)
    if (may_meet(w, p, depth - 1)) return true;
  return false;
}

}  // namespace

std::vector<Wall> numerical_walls(const SurfaceConfig& cfg, const Slice2D& slice, const MukaiVec& v,
                                  const WallOptions& opt) {
  if (v.is_zero()) throw DomainError("numerical walls need a nonzero class");
  const Rect& win = slice.window();
  CandidateOptions copt = opt.candidates;
  copt.threads = std::max(copt.threads, opt.threads);
  std::vector<MukaiVec> cands = wall_candidates(cfg, slice, v, copt);

  std::vector<std::pair<MukaiVec, MukaiVec>> pairs;
  std::set<std::pair<MukaiVec, MukaiVec>> seen;
  for (const auto& w : cands) {
    MukaiVec u = v - w;
    auto key = std::make_pair(std::min(w, u), std::max(w, u));
    if (seen.insert(key).second) pairs.push_back(key);
  }

  std::vector<std::optional<Wall>> built(pairs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < pairs.size();) {
      Wall w = make_numerical_wall(slice, v, pairs[k].first);
      if (w.locus.is_zero()) continue;  // Z(w)/Z(v) real on the whole slice
      // Anything the sampler can find passes the filter, so filter first.
      if (!may_meet(w, win, opt.filter_depth)) continue;
      sample_segments(w, win, opt.grid);
      for (const auto& line : w.segments)
        for (const auto& p : line)
          if (p.exact && w.active_at(p.x, p.y)) w.certified_active = true;
      built[k] = std::move(w);
    }
  };
  const int threads = std::max(1, opt.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::vector<Wall> out;
  for (auto& w : built)
    if (w) out.push_back(std::move(*w));
  std::sort(out.begin(), out.end(), wall_less);
  return out;
}

// ---------------------------------------------------------------------------
// Polylines

namespace {

struct Piece {
  SegmentPoint a, b;
};

SegmentPoint point_on_root(const UPoly& f, const RootInterval& root, const Rational& width, bool along_x,
                           const Rational& fixed) {
  RootInterval r = refine_root(f, root, width);
  Rational t = r.exact ? r.lo : Rational((r.lo + r.hi) / 2);
  return along_x ? SegmentPoint{t, fixed, r.exact} : SegmentPoint{fixed, t, r.exact};
}

// Cuts the chord a-b down to the parts where the side conditions hold.
void clip_piece(const Wall& w, const Piece& p, bool on_locus, const Rational& width, std::vector<Piece>& out) {
  std::vector<SignCondition> conds;
  conds.push_back({UPoly::linear(0, 1), Relation::NonNegative});
  conds.push_back({UPoly::linear(1, -1), Relation::NonNegative});
  for (const auto& c : w.conditions) conds.push_back({restrict_segment(c.poly, p.a.x, p.a.y, p.b.x, p.b.y), c.rel});
  UPoly f = UPoly::constant(1);
  for (const auto& c : conds)
    if (c.poly.degree() >= 1) f = f * c.poly;
  f = squarefree_part(f);
  // t = 0 and t = 1 are roots of f and an isolating interval holds one root.
  auto holds = [](const RootInterval& r, int t) { return r.exact ? r.lo == t : r.lo < t && t < r.hi; };
  auto at = [&](const Endpoint& e) -> SegmentPoint {
    if (holds(e.at, 0)) return p.a;
    if (holds(e.at, 1)) return p.b;
    RootInterval r = f.degree() >= 1 ? refine_root(f, e.at, width) : e.at;
    Rational t = r.exact ? r.lo : Rational((r.lo + r.hi) / 2);
    Rational x = p.a.x + t * (p.b.x - p.a.x), y = p.a.y + t * (p.b.y - p.a.y);
    bool exact = r.exact && (on_locus || w.locus(x, y) == 0);
    return {x, y, exact};
  };
  for (const auto& piece : solve_on_line(conds)) {
    if (piece.is_point()) continue;
    out.push_back({at(piece.lo), at(piece.hi)});
  }
}

}  // namespace

void sample_segments(Wall& wall, const Rect& win, int grid) {
  wall.segments.clear();
  const int n = std::max(1, grid);
  const Rational dx = (win.x1 - win.x0) / n, dy = (win.y1 - win.y0) / n;
  wall.tolerance = dx + dy;
  const Rational width = wall.tolerance / 64;
  if (wall.locus.is_zero()) return;
  auto xs = [&](int i) { return win.x0 + dx * i; };
  auto ys = [&](int j) { return win.y0 + dy * j; };

  // Crossings on horizontal edges h[j][i] and vertical edges v[i][j].
  using Points = std::vector<SegmentPoint>;
  std::vector<std::vector<Points>> h(n + 1, std::vector<Points>(n)), v(n + 1, std::vector<Points>(n));
  std::vector<std::vector<char>> h_full(n + 1, std::vector<char>(n, 0)), v_full(n + 1, std::vector<char>(n, 0));
  std::vector<Piece> pieces;

  for (int j = 0; j <= n; ++j) {
    UPoly f = wall.locus.restrict_y(ys(j));
    for (int i = 0; i < n; ++i) {
      if (f.is_zero()) {
        h_full[j][i] = 1;
        clip_piece(wall, {{xs(i), ys(j), true}, {xs(i + 1), ys(j), true}}, true, width, pieces);
        continue;
      }
      Interval b = bound(wall.locus, Rect{xs(i), xs(i + 1), ys(j), ys(j)});
      if (b.lo.sign() > 0 || b.hi.sign() < 0) continue;
      UPoly g = squarefree_part(f);
      for (const auto& r : isolate_roots(g, xs(i), xs(i + 1)))
        h[j][i].push_back(point_on_root(g, r, width, true, ys(j)));
    }
  }
  for (int i = 0; i <= n; ++i) {
    UPoly f = wall.locus.restrict_x(xs(i));
    for (int j = 0; j < n; ++j) {
      if (f.is_zero()) {
        v_full[i][j] = 1;
        clip_piece(wall, {{xs(i), ys(j), true}, {xs(i), ys(j + 1), true}}, true, width, pieces);
        continue;
      }
      Interval b = bound(wall.locus, Rect{xs(i), xs(i), ys(j), ys(j + 1)});
      if (b.lo.sign() > 0 || b.hi.sign() < 0) continue;
      UPoly g = squarefree_part(f);
      for (const auto& r : isolate_roots(g, ys(j), ys(j + 1)))
        v[i][j].push_back(point_on_root(g, r, width, false, xs(i)));
    }
  }

  // Inside each cell, pair the boundary crossings in perimeter order.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (h_full[j][i] || h_full[j + 1][i] || v_full[i][j] || v_full[i + 1][j]) continue;
      Points ring;
      auto add = [&](const SegmentPoint& p) {
        if (std::find_if(ring.begin(), ring.end(), [&](const SegmentPoint& q) { return q.x == p.x && q.y == p.y; }) ==
            ring.end())
          ring.push_back(p);
      };
      for (const auto& p : h[j][i]) add(p);
      for (const auto& p : v[i + 1][j]) add(p);
      for (auto it = h[j + 1][i].rbegin(); it != h[j + 1][i].rend(); ++it) add(*it);
      for (auto it = v[i][j].rbegin(); it != v[i][j].rend(); ++it) add(*it);
      for (std::size_t k = 0; k + 1 < ring.size(); k += 2) clip_piece(wall, {ring[k], ring[k + 1]}, false, width, pieces);
    }

  // Chain pieces that share endpoints.
  using Key = std::pair<Rational, Rational>;
  std::map<Key, std::vector<std::size_t>> ends;
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    ends[{pieces[k].a.x, pieces[k].a.y}].push_back(k);
    ends[{pieces[k].b.x, pieces[k].b.y}].push_back(k);
  }
  std::vector<char> used(pieces.size(), 0);
  auto next_from = [&](const SegmentPoint& p) -> std::optional<std::size_t> {
    for (std::size_t k : ends[{p.x, p.y}])
      if (!used[k]) return k;
    return std::nullopt;
  };
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (used[k]) continue;
    used[k] = 1;
    Polyline line{pieces[k].a, pieces[k].b};
    while (auto nk = next_from(line.back())) {
      used[*nk] = 1;
      const Piece& p = pieces[*nk];
      line.push_back(p.a.x == line.back().x && p.a.y == line.back().y ? p.b : p.a);
    }
    while (auto nk = next_from(line.front())) {
      used[*nk] = 1;
      const Piece& p = pieces[*nk];
      line.insert(line.begin(), p.a.x == line.front().x && p.a.y == line.front().y ? p.b : p.a);
    }
    wall.segments.push_back(std::move(line));
  }
}

// ---------------------------------------------------------------------------

std::vector<SetPiece> restrict_to_vertical_line(const SurfaceConfig& cfg, const Slice2D& slice, const Wall& wall,
                                                const Rational& x0) {
  std::vector<SignCondition> conds;
  UPoly l = wall.locus.restrict_x(x0);
  if (!l.is_zero()) conds.push_back({l, Relation::Zero});
  for (const auto& c : wall.conditions) conds.push_back({c.poly.restrict_x(x0), c.rel});
  conds.push_back({slice.omega_sq(), Relation::Positive});
  conds.push_back({slice.omega_dot(cfg.ample().cast<Rational>()), Relation::Positive});
  return solve_on_line(conds);
}

// ---------------------------------------------------------------------------

ChamberMap chamber_sample(const Slice2D& slice, const std::vector<Wall>& walls, int grid) {
  const Rect& win = slice.window();
  ChamberMap map;
  map.nx = map.ny = std::max(1, grid);
  const int m = 2 * map.nx + 1;
  const Rational dx = (win.x1 - win.x0) / (m - 1), dy = (win.y1 - win.y0) / (m - 1);

  // signs[w][j*m + i] at the sample lattice.
  std::vector<std::vector<signed char>> signs(walls.size(), std::vector<signed char>(static_cast<std::size_t>(m) * m));
  for (std::size_t w = 0; w < walls.size(); ++w)
    for (int j = 0; j < m; ++j) {
      UPoly row = walls[w].locus.restrict_y(win.y0 + dy * j);
      for (int i = 0; i < m; ++i) signs[w][static_cast<std::size_t>(j) * m + i] = static_cast<signed char>(row.sign_at(win.x0 + dx * i));
    }

  const int nc = map.nx * map.ny;
  std::vector<std::vector<int>> fp(nc);
  std::vector<char> boundary(nc, 0);
  for (int cj = 0; cj < map.ny; ++cj)
    for (int ci = 0; ci < map.nx; ++ci) {
      const int c = cj * map.nx + ci;
      for (std::size_t w = 0; w < walls.size() && !boundary[c]; ++w) {
        int s0 = signs[w][static_cast<std::size_t>(2 * cj) * m + 2 * ci];
        for (int dj = 0; dj <= 2 && !boundary[c]; ++dj)
          for (int di = 0; di <= 2; ++di) {
            int s = signs[w][static_cast<std::size_t>(2 * cj + dj) * m + 2 * ci + di];
            if (s == 0 || s != s0) {
              boundary[c] = 1;
              break;
            }
          }
        fp[c].push_back(s0);
      }
    }

  std::vector<int> parent(nc);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int cj = 0; cj < map.ny; ++cj)
    for (int ci = 0; ci < map.nx; ++ci) {
      const int c = cj * map.nx + ci;
      if (boundary[c]) continue;
      if (ci + 1 < map.nx && !boundary[c + 1] && fp[c] == fp[c + 1]) unite(c, c + 1);
      if (cj + 1 < map.ny && !boundary[c + map.nx] && fp[c] == fp[c + map.nx]) unite(c, c + map.nx);
    }
  map.cell.assign(nc, -1);
  std::map<int, int> label;
  for (int c = 0; c < nc; ++c) {
    if (boundary[c]) continue;
    int root = find(c);
    auto [it, fresh] = label.emplace(root, map.chambers);
    if (fresh) {
      ++map.chambers;
      map.fingerprints.push_back(fp[c]);
    }
    map.cell[c] = it->second;
  }
  return map;
}

}  // namespace k3stab
