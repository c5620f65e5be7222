#include "doctest.h"
#include "support.hpp"

#include "k3stab/poly.hpp"
#include "k3stab/surd.hpp"

using namespace k3stab;
using fixture::Gen;

TEST_CASE("rational parsing and rounding helpers") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("010") == Rational(10));
  CHECK(parse_rational("007.50") == Rational(15, 2));
  CHECK(parse_integer("-0012") == -12);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(isqrt(Integer(15)) == 3);
  CHECK(isqrt(Integer(16)) == 4);
}

TEST_CASE("sqrt_upper is an upper bound close to the root") {
  Gen g(11);
  for (int t = 0; t < 200; ++t) {
    Rational q = g.positive(500, 30);
    Rational u = sqrt_upper(q);
    CHECK(u * u >= q);
    CHECK(u * u - q < Rational(1, 1000));
  }
}

TEST_CASE("UPoly arithmetic and division") {
  UPoly p({Rational(-2), Rational(0), Rational(1)});  // t^2 - 2
  UPoly q = UPoly::linear(Rational(1), Rational(1));  // t + 1
  auto [quo, rem] = UPoly::divmod(p, q);
  CHECK(quo * q + rem == p);
  CHECK(rem.degree() < q.degree());
  CHECK(p(Rational(3)) == 7);
  CHECK(p.derivative() == UPoly::linear(Rational(0), Rational(2)));
  CHECK(gcd(p * q, q * q).monic() == q.monic());
  CHECK(squarefree_part(q * q * p).degree() == 3);
}

TEST_CASE("root isolation separates and counts roots") {
  // (t - 1/3)(t + 2)(t^2 - 2): two rational roots and two irrational ones.
  UPoly p = UPoly::linear(Rational(-1, 3), Rational(1)) * UPoly::linear(Rational(2), Rational(1)) *
            UPoly({Rational(-2), Rational(0), Rational(1)});
  auto roots = isolate_roots(p, Rational(-10), Rational(10));
  REQUIRE(roots.size() == 4);
  for (std::size_t k = 0; k + 1 < roots.size(); ++k) CHECK(roots[k].hi <= roots[k + 1].lo);
  int exact = 0;
  for (const auto& r : roots) {
    if (r.exact) {
      ++exact;
      CHECK(p(r.lo) == 0);
    } else {
      CHECK(p.sign_at(r.lo) * p.sign_at(r.hi) < 0);
    }
  }
  auto chain = sturm_chain(p);
  CHECK(count_roots(chain, Rational(0), Rational(2)) == 2);

  // refining lands on the rational roots exactly via the simplest rational
  exact = 0;
  for (auto r : roots) {
    RootInterval fine = refine_root(p, r, Rational(1, 1000000));
    if (fine.exact) {
      ++exact;
      CHECK(p(fine.lo) == 0);
    } else {
      CHECK(fine.hi - fine.lo <= Rational(1, 1000000));
    }
  }
  CHECK(exact == 2);
}

TEST_CASE("solve_on_line gives the exact set of a sign system") {
  // t^2 - 1 <= 0 and t > 0: (0, 1]
  std::vector<SignCondition> conds{{UPoly({Rational(-1), Rational(0), Rational(1)}), Relation::NonPositive},
                                   {UPoly::linear(Rational(0), Rational(1)), Relation::Positive}};
  auto pieces = solve_on_line(conds);
  REQUIRE(pieces.size() == 1);
  CHECK(pieces[0].lo.at.exact);
  CHECK(pieces[0].lo.at.lo == 0);
  CHECK_FALSE(pieces[0].lo.closed);
  CHECK(pieces[0].hi.at.exact);
  CHECK(pieces[0].hi.at.lo == 1);
  CHECK(pieces[0].hi.closed);
}

TEST_CASE("Poly2 interval bound contains every sampled value") {
  Gen g(5);
  for (int t = 0; t < 100; ++t) {
    Mat<Rational> c = Mat<Rational>::Zero(5, 5);
    for (int i = 0; i <= 4; ++i)
      for (int j = 0; i + j <= 4; ++j) c(i, j) = g.rational(9, 4);
    Poly2 p(c);
    Rational x0 = g.rational(4, 3), y0 = g.rational(4, 3);
    Rect r{x0, x0 + g.positive(3, 3), y0, y0 + g.positive(3, 3)};
    Interval b = bound(p, r);
    for (int s = 0; s < 20; ++s) {
      Rational fx = Rational(g.integer(0, 12), 12), fy = Rational(g.integer(0, 12), 12);
      Rational v = p(r.x0 + (r.x1 - r.x0) * fx, r.y0 + (r.y1 - r.y0) * fy);
      CHECK(b.contains(v));
    }
  }
}

TEST_CASE("Poly2 restriction and dense listing round trip") {
  Poly2 p = Rational(-2) * (Poly2::x() * Poly2::y()) + Poly2::y() * Poly2::y() - Poly2::x() * Poly2::x() -
            Poly2::constant(Rational(1));
  CHECK(p(Rational(0), Rational(1)) == 0);
  CHECK(p.restrict_x(Rational(0)) == UPoly({Rational(-1), Rational(0), Rational(1)}));
  auto listing = p.dense_listing();
  CHECK(listing.size() == 15);
  CHECK(Poly2::from_dense_listing(listing) == p);
  CHECK(p.total_degree() == 2);
}

TEST_CASE("quadratic surds compare exactly") {
  QuadraticSurd s2 = QuadraticSurd::sqrt(Rational(2));
  CHECK(s2 * s2 == QuadraticSurd(Rational(2)));
  CHECK((s2 - QuadraticSurd(Rational(141, 100))).sign() > 0);
  CHECK((s2 - QuadraticSurd(Rational(142, 100))).sign() < 0);
  CHECK(QuadraticSurd::sqrt(Rational(9, 4)).is_rational());
  QuadraticSurd x(Rational(1), Rational(1), Integer(2));
  CHECK(x * x.conjugate() == QuadraticSurd(Rational(-1)));
  CHECK(x.lower_bound() <= x.upper_bound());
  CHECK(x.lower_bound() < Rational(2415, 1000));
  CHECK(x.upper_bound() > Rational(2414, 1000));
}
