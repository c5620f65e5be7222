#include "doctest.h"
#include "support.hpp"

#include "k3stab/charge.hpp"

using namespace k3stab;
using namespace fixture;

TEST_CASE("pairing of the rank and point classes") {
  auto cfg = deg2();
  CHECK(mukai_pairing(cfg, mv({1, 0, 0}), mv({0, 0, 1})) == -1);
  CHECK(mukai_pairing(cfg, mv({0, 1, 0}), mv({0, 1, 0})) == 2);
  CHECK(mukai_pairing(cfg, mv({1, 0, 1}), mv({1, 0, 1})) == -2);
  CHECK(euler_form(cfg, mv({1, 0, 0}), mv({0, 0, 1})) == 1);
}

TEST_CASE("Gram matrix of the Mukai lattice and its signature") {
  auto cfg = deg2();
  Mat<Integer> expected(3, 3);
  expected << 0, 0, -1, 0, 2, 0, -1, 0, 0;
  CHECK(cfg.mukai_gram_as<Integer>() == expected);
  CHECK(signature(cfg.mukai_gram_as<Rational>()) == Signature{2, 1, 0});
  auto q = quartic_line();
  CHECK(signature(q.mukai_gram_as<Rational>()) == Signature{2, 2, 0});
  CHECK(signature(q.ns_gram_as<Rational>()) == Signature{1, 1, 0});
}

TEST_CASE("surface configs reject broken lattices") {
  Mat<Integer> odd = Mat<Integer>::Constant(1, 1, Integer(3));
  CHECK_THROWS_AS(SurfaceConfig(SurfaceType::K3, odd, ivec({1})), ConfigError);
  Mat<Integer> neg = Mat<Integer>::Constant(1, 1, Integer(-2));
  CHECK_THROWS_AS(SurfaceConfig(SurfaceType::K3, neg, ivec({1})), ConfigError);
  Mat<Integer> asym(2, 2);
  asym << 4, 1, 0, -2;
  CHECK_THROWS_AS(SurfaceConfig(SurfaceType::K3, asym, ivec({1, 0})), ConfigError);
  Mat<Integer> g(2, 2);
  g << 4, 1, 1, -2;
  CHECK_THROWS_AS(SurfaceConfig(SurfaceType::K3, g, ivec({0, 1})), ConfigError);         // H^2 < 0
  CHECK_THROWS_AS(SurfaceConfig(SurfaceType::K3, g, ivec({1, 0}), {ivec({1, 1})}), ConfigError);  // C^2 != -2
  CHECK_NOTHROW(quartic_line());
}

TEST_CASE("twist by exp(H)") {
  auto cfg = deg2();
  CHECK(twist_by_exp(cfg, mv({1, 0, 1}), ivec({1})) == mv({1, 1, 2}));
  CHECK(twist_by_exp(cfg, mv({0, 0, 1}), ivec({5})) == mv({0, 0, 1}));
  CHECK(twist_by_exp(cfg, mv({1, 0, 0}), ivec({-1})) == mv({1, -1, 1}));
}

TEST_CASE("primitivity") {
  CHECK_FALSE(is_primitive(mv({2, 0, 2})));
  CHECK(is_primitive(mv({2, 1, 1})));
  CHECK(is_primitive(mv({0, 0, 1})));
  CHECK_THROWS_AS(is_primitive(mv({0, 0, 0})), DomainError);
}

TEST_CASE("mismatched ranks are rejected") {
  auto cfg = deg2();
  CHECK_THROWS(mukai_pairing(cfg, mv({1, 0, 0, 1}), mv({1, 0, 1})));
}

TEST_CASE("pairing properties on random vectors") {
  Gen g(1);
  for (const auto& cfg : {deg2(), deg4(), quartic_line()}) {
    const int rho = cfg.picard_rank();
    for (int t = 0; t < 300; ++t) {
      MukaiVec v = g.mukai(rho, 20), w = g.mukai(rho, 20), u = g.mukai(rho, 20);
      Integer vw = mukai_pairing(cfg, v, w);
      CHECK(Rational(vw) == pairing_oracle(cfg, v, w));
      CHECK(vw == mukai_pairing(cfg, w, v));
      CHECK(mukai_pairing(cfg, v, v) % 2 == 0);
      CHECK(euler_form(cfg, v, w) == -vw);
      Integer a = g.integer(-5, 5);
      CHECK(mukai_pairing(cfg, a * v + u, w) == a * vw + mukai_pairing(cfg, u, w));

      Vec<Integer> l1 = g.ns_integral(rho), l2 = g.ns_integral(rho);
      MukaiVec tv = twist_by_exp(cfg, v, l1), tw = twist_by_exp(cfg, w, l1);
      CHECK(mukai_pairing(cfg, tv, tw) == vw);
      CHECK(twist_by_exp(cfg, tv, l2) == twist_by_exp(cfg, v, Vec<Integer>(l1 + l2)));
      // the integer specialization agrees with the generic rational formula
      CHECK(tv.cast<Rational>() == twist_by_exp(cfg, v.cast<Rational>(), Vec<Rational>(to_rational_vec(l1))));
    }
  }
}

TEST_CASE("pairing is bilinear over the rationals") {
  Gen g(2);
  auto cfg = quartic_line();
  for (int t = 0; t < 200; ++t) {
    MukaiVecQ v(Vec<Rational>(g.ns_rational(4))), w(Vec<Rational>(g.ns_rational(4))), u(Vec<Rational>(g.ns_rational(4)));
    Rational a = g.rational();
    CHECK(mukai_pairing(cfg, a * v + u, w) == a * mukai_pairing(cfg, v, w) + mukai_pairing(cfg, u, w));
    CHECK(mukai_pairing(cfg, v, w) == mukai_pairing(cfg, w, v));
  }
}

TEST_CASE("exp(beta + i omega) components") {
  auto cfg = deg2();
  auto e = exp_class(cfg, point(qvec({0}), qvec({2})));
  CHECK(e.re == MukaiVecQ(qvec({1, 0, -4})));
  CHECK(e.im == MukaiVecQ(qvec({0, 2, 0})));
  auto f = exp_class(cfg, point(qvec({Rational(1, 2)}), qvec({1})));
  // beta^2 = 1/2, omega^2 = 2, beta.omega = 1
  CHECK(f.re == MukaiVecQ(qvec({1, Rational(1, 2), Rational(-3, 4)})));
  CHECK(f.im == MukaiVecQ(qvec({0, 1, 1})));
  // null and positive
  CHECK(mukai_pairing(cfg, f, f).is_zero());
  CHECK(mukai_pairing(cfg, f, f.conj()).re > 0);
  CHECK_THROWS_AS(make_tube_point(cfg, qvec({0}), qvec({0})), DomainError);
}
