#include "doctest.h"
#include "support.hpp"

#include "k3stab/walls.hpp"

using namespace k3stab;
using namespace fixture;

namespace {

Rect rect(Rational x0, Rational x1, Rational y0, Rational y1) { return {x0, x1, y0, y1}; }

Rect default_window() { return rect(Rational(-1, 4), Rational(1, 4), Rational(1, 10), Rational(3)); }

// For delta = (r, dH, s) on the rank-one slice with H^2 = h, Im Z = h y (d - rx)
// vanishes at x = d/r where Re Z = (h/2) r y^2 - 1/r, so H(delta) meets the
// window iff d/r lies in [x0, x1] and h r^2 y0^2 <= 2.
std::vector<MukaiVec> holes_oracle(long h2, const Rect& w) {
  std::vector<MukaiVec> out;
  for (long r = 1; Rational(h2 * r * r) * w.y0 * w.y0 <= 2; ++r) {
    long dlo = floor(Rational(w.x0 * r)).convert_to<long>(), dhi = ceil(Rational(w.x1 * r)).convert_to<long>();
    for (long d = dlo; d <= dhi; ++d) {
      Rational x(d, r);
      if (x < w.x0 || x > w.x1) continue;
      // (delta, delta) = h d^2 - 2 r s = -2
      long num = h2 * d * d + 2;
      if (num % (2 * r)) continue;
      out.push_back(mv({r, d, num / (2 * r)}));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MukaiVec> witnesses(const std::vector<Wall>& walls) {
  std::vector<MukaiVec> out;
  for (const auto& w : walls) out.push_back(w.witness);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("the hole wall of (1,0,1) on the degree-2 slice") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, default_window());
  auto walls = hole_walls(cfg, slice);
  REQUIRE(walls.size() == 1);
  const Wall& w = walls[0];
  CHECK(w.kind == WallKind::HoleBoundary);
  CHECK(w.witness == mv({1, 0, 1}));
  CHECK(w.locus == Rational(-2) * (Poly2::x() * Poly2::y()));
  REQUIRE(w.conditions.size() == 1);
  CHECK(w.conditions[0].rel == Relation::NonPositive);
  CHECK(w.conditions[0].poly == Poly2::y() * Poly2::y() - Poly2::x() * Poly2::x() - Poly2::constant(Rational(1)));
  CHECK(w.certified_active);

  auto pieces = restrict_to_vertical_line(cfg, slice, w, Rational(0));
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].lo.at.exact);
  CHECK(pieces[0].lo.at.lo == 0);
  CHECK_FALSE(pieces[0].lo.closed);
  CHECK(pieces[0].hi.at.exact);
  CHECK(pieces[0].hi.at.lo == 1);
  CHECK(pieces[0].hi.closed);

  // the drawn polyline is the segment x = 0 from the window bottom up to y = 1
  REQUIRE(w.segments.size() == 1);
  CHECK(w.segments[0].front() == SegmentPoint{Rational(0), Rational(1, 10), true});
  CHECK(w.segments[0].back() == SegmentPoint{Rational(0), Rational(1), true});
  CHECK(w.active_at(Rational(0), Rational(1, 2)));
  CHECK_FALSE(w.active_at(Rational(0), Rational(2)));
  CHECK_FALSE(w.active_at(Rational(1, 8), Rational(1, 2)));
}

TEST_CASE("a window above the hole drops it") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, rect(Rational(-1, 4), Rational(1, 4), Rational(2), Rational(3)));
  CHECK(hole_walls(cfg, slice).empty());
  Wall w = make_hole_wall(slice, mv({1, 0, 1}));
  CHECK_FALSE(hole_meets_window(SliceCharge(slice, mv({1, 0, 1})), slice.window()).has_value());
  CHECK_FALSE(w.active_at(Rational(0), Rational(2)));
}

TEST_CASE("hole walls match the closed-form oracle") {
  for (long h2 : {2L, 4L}) {
    auto cfg = rank_one(h2);
    for (Rect w : {default_window(), rect(Rational(-1), Rational(1), Rational(1, 12), Rational(2)),
                   rect(Rational(0), Rational(3, 2), Rational(1, 7), Rational(1, 2)),
                   rect(Rational(-2), Rational(-1, 3), Rational(1, 20), Rational(1))}) {
      Slice2D slice = Slice2D::ample_slice(cfg, w);
      auto walls = hole_walls(cfg, slice);
      CHECK(witnesses(walls) == holes_oracle(h2, w));
      for (const auto& wall : walls) CHECK(wall.certified_active);
    }
  }
}

TEST_CASE("abelian slices have no hole walls") {
  auto cfg = abelian();
  CHECK(hole_walls(cfg, Slice2D::ample_slice(cfg, default_window())).empty());
  CHECK(hole_walls(cfg, Slice2D::ample_slice(cfg, rect(Rational(-1), Rational(1), Rational(1, 20), Rational(1)))).empty());
}

TEST_CASE("slices must stay inside the tube domain") {
  auto cfg = deg2();
  CHECK_THROWS_AS(Slice2D::ample_slice(cfg, rect(Rational(-1), Rational(1), Rational(0), Rational(1))), DomainError);
  auto q = quartic_line();
  // omega = H + y C has omega^2 = 4 + 2y - 2y^2, which vanishes at y = 2
  CHECK_THROWS_AS(Slice2D(q, qvec({0, 0}), qvec({1, 0}), qvec({1, 0}), qvec({0, 1}),
                          rect(Rational(-1), Rational(1), Rational(0), Rational(3))),
                  DomainError);
  CHECK_NOTHROW(Slice2D(q, qvec({0, 0}), qvec({1, 0}), qvec({1, 0}), qvec({0, 1}),
                        rect(Rational(-1), Rational(1), Rational(0), Rational(1))));
}

TEST_CASE("slice charges agree with the pairing") {
  Gen g(13);
  auto q = quartic_line();
  Slice2D slice(q, qvec({Rational(1, 3), 0}), qvec({2, Rational(1, 2)}), qvec({1, 0}), qvec({Rational(1, 2), 1}),
                rect(Rational(-1), Rational(1), Rational(0), Rational(1)));
  for (int t = 0; t < 100; ++t) {
    MukaiVec w = g.mukai(2, 6);
    SliceCharge z(slice, w);
    Rational x = g.rational(4, 4), y = Rational(g.integer(0, 8), 8);
    auto [re, im] = charge_oracle(q, slice.point(x, y), w);
    CHECK(z.at(x, y) == GaussianRational(re, im));
    CHECK(z.re()(x, y) == re);
    CHECK(z.im()(x, y) == im);
    Rect cell = rect(x, x + Rational(1, 8), y, y + Rational(1, 8));
    Rational n2 = re * re + im * im;
    CHECK(z.norm2_lower(cell) <= n2);
    CHECK(z.norm2_upper(cell) >= n2);
    CHECK(z.re_range(cell).contains(re));
    CHECK(z.im_range(cell).contains(im));
  }
}

TEST_CASE("numerical walls of the point class contain the hole wall") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, default_window());
  auto holes = hole_walls(cfg, slice);
  auto walls = numerical_walls(cfg, slice, mv({0, 0, 1}));
  REQUIRE_FALSE(walls.empty());
  for (const auto& h : holes) {
    bool found = false;
    for (const auto& w : walls) {
      if (!(w.witness == h.witness || w.partner == h.witness)) continue;
      // loci agree up to a positive rational factor
      Rational lam = 0;
      for (int i = 0; i <= 4 && lam == 0; ++i)
        for (int j = 0; i + j <= 4 && lam == 0; ++j)
          if (h.locus.coeff(i, j) != 0) lam = w.locus.coeff(i, j) / h.locus.coeff(i, j);
      CHECK(lam > 0);
      CHECK(w.locus == lam * h.locus);
      found = true;
    }
    CHECK_MESSAGE(found, to_string(h.witness));
  }
  for (const auto& w : walls) {
    CHECK(w.kind == WallKind::NumericalWall);
    REQUIRE(w.partner.has_value());
    CHECK(w.witness + *w.partner == mv({0, 0, 1}));
    CHECK_FALSE(w.locus.is_zero());
    CHECK(w.locus.total_degree() <= 4);
  }
}

TEST_CASE("numerical walls: active points are checked against an exact grid oracle") {
  auto cfg = deg2();
  Rect win = rect(Rational(-1, 4), Rational(1, 4), Rational(1, 2), Rational(3, 2));
  Slice2D slice = Slice2D::ample_slice(cfg, win);
  MukaiVec v = mv({0, 0, 1});
  auto walls = numerical_walls(cfg, slice, v);
  // at x = 0 the class w = (1,0,1) has Z(w) = y^2 - 1 real: active exactly for y < 1
  bool seen = false;
  for (const auto& w : walls) {
    if (!(w.witness == mv({1, 0, 1}) || w.partner == mv({1, 0, 1}))) continue;
    seen = true;
    for (int k = 0; k <= 100; ++k) {
      Rational y = win.y0 + (win.y1 - win.y0) * Rational(k, 100);
      auto [re, im] = charge_oracle(cfg, slice.point(Rational(0), y), mv({1, 0, 1}));
      CHECK(im == 0);
      CHECK(w.active_at(Rational(0), y) == (re < 0));
    }
  }
  CHECK(seen);
  // every active sample point satisfies the defining relation Z(w)/Z(v) > 0, Z(v-w)/Z(v) > 0
  for (const auto& w : walls)
    for (int i = 0; i <= 20; ++i)
      for (int j = 0; j <= 20; ++j) {
        Rational x = win.x0 + (win.x1 - win.x0) * Rational(i, 20), y = win.y0 + (win.y1 - win.y0) * Rational(j, 20);
        if (!w.active_at(x, y)) continue;
        auto p = slice.point(x, y);
        auto [ar, ai] = charge_oracle(cfg, p, w.witness);
        auto [br, bi] = charge_oracle(cfg, p, *w.partner);
        auto [vr, vi] = charge_oracle(cfg, p, v);
        // z / Z(v) positive real <=> z conj(Z(v)) positive real
        CHECK(ai * vr - ar * vi == 0);
        CHECK(ar * vr + ai * vi > 0);
        CHECK(bi * vr - br * vi == 0);
        CHECK(br * vr + bi * vi > 0);
      }
}

TEST_CASE("proportional classes give no wall") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, rect(Rational(-1, 4), Rational(1, 4), Rational(1, 2), Rational(3, 2)));
  auto walls = numerical_walls(cfg, slice, mv({0, 0, 2}));
  REQUIRE_FALSE(walls.empty());
  for (const auto& w : walls) {
    CHECK_FALSE(w.witness == mv({0, 0, 1}));
    CHECK_FALSE(w.witness == mv({0, 0, 2}));
    CHECK_FALSE(w.partner == mv({0, 0, 1}));
  }
}

TEST_CASE("segment points lie on the locus") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, default_window());
  auto walls = hole_walls(cfg, slice);
  auto more = numerical_walls(cfg, slice.with_window(rect(Rational(-1, 4), Rational(1, 4), Rational(1, 2), Rational(3, 2))),
                              mv({0, 0, 1}));
  walls.insert(walls.end(), more.begin(), more.end());
  for (const auto& w : walls)
    for (const auto& line : w.segments)
      for (const auto& pt : line) {
        if (pt.exact) {
          CHECK(w.locus(pt.x, pt.y) == 0);
        } else {
          // within tolerance: the locus changes sign within the tolerance box
          Rect box = rect(pt.x - w.tolerance, pt.x + w.tolerance, pt.y - w.tolerance, pt.y + w.tolerance);
          Interval b = bound(w.locus, box);
          CHECK(b.lo <= 0);
          CHECK(b.hi >= 0);
        }
      }
}

TEST_CASE("chambers around the hole") {
  auto cfg = deg2();
  Slice2D around = Slice2D::ample_slice(cfg, rect(Rational(-1, 8), Rational(1, 8), Rational(1, 2), Rational(3, 2)));
  auto map = chamber_sample(around, hole_walls(cfg, around), 8);
  CHECK(map.chambers == 2);
  CHECK(map.at(0, 0) != map.at(7, 0));
  for (int j = 0; j < 8; ++j) {
    CHECK(map.at(0, j) == map.at(0, 0));
    CHECK(map.at(7, j) == map.at(7, 0));
  }

  Slice2D high = Slice2D::ample_slice(cfg, rect(Rational(-1, 4), Rational(1, 4), Rational(2), Rational(3)));
  auto walls = hole_walls(cfg, high);
  CHECK(walls.empty());
  auto one = chamber_sample(high, walls, 8);
  CHECK(one.chambers == 1);
  for (int c : one.cell) CHECK(c == 0);

  // a window lying on the wall line: every cell is a boundary cell
  Slice2D thin = Slice2D::ample_slice(cfg, rect(Rational(0), Rational(0), Rational(1, 2), Rational(1)));
  auto flat = chamber_sample(thin, {make_hole_wall(thin, mv({1, 0, 1}))}, 4);
  CHECK(flat.chambers == 0);
  for (int c : flat.cell) CHECK(c == -1);
}

TEST_CASE("wall ordering is canonical") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, rect(Rational(-1), Rational(1), Rational(1, 12), Rational(2)));
  auto walls = hole_walls(cfg, slice);
  REQUIRE(walls.size() > 1);
  CHECK(std::is_sorted(walls.begin(), walls.end(), wall_less));
  WallOptions opt;
  opt.threads = 3;
  auto again = hole_walls(cfg, slice, opt);
  REQUIRE(again.size() == walls.size());
  for (std::size_t k = 0; k < walls.size(); ++k) {
    CHECK(again[k].witness == walls[k].witness);
    CHECK(again[k].segments == walls[k].segments);
  }
}
