#include "doctest.h"
#include "support.hpp"

#include "k3stab/roots.hpp"

#include <set>

using namespace k3stab;
using namespace fixture;

namespace {

EnumerationQuery query(const ComplexMukaiVec& w, const Rational& m) {
  EnumerationQuery q;
  q.omega = w;
  q.bound_m = m;
  return q;
}

std::vector<long> widths(const EnumerationResult& res, long margin) {
  std::vector<long> out;
  for (const auto& b : res.box) out.push_back(b.convert_to<long>() + margin);
  return out;
}

}  // namespace

TEST_CASE("positive-rank roots of bounded charge at exp(2iH)") {
  auto cfg = deg2();
  auto q = query(exp_class(cfg, point(qvec({0}), qvec({2}))), 5);
  q.spherical_only = true;
  q.rank_positive_only = true;
  auto res = enumerate_bounded(cfg, q);
  CHECK(res.complete);
  CHECK(res.vectors == std::vector<MukaiVec>{mv({1, -1, 2}), mv({1, 0, 1}), mv({1, 1, 2})});
}

TEST_CASE("the hole class has charge zero at exp(iH)") {
  auto cfg = deg2();
  auto q = query(exp_class(cfg, point(qvec({0}), qvec({1}))), 0);
  q.spherical_only = true;
  auto res = enumerate_bounded(cfg, q);
  CHECK(std::find(res.vectors.begin(), res.vectors.end(), mv({1, 0, 1})) != res.vectors.end());
  CHECK(std::find(res.vectors.begin(), res.vectors.end(), mv({-1, 0, -1})) != res.vectors.end());
  for (const auto& v : res.vectors) CHECK(central_charge(cfg, q.omega, v).is_zero());
}

TEST_CASE("the adapted frame bounds the plane coordinates") {
  Gen g(9);
  for (const auto& cfg : {deg2(), quartic_line()}) {
    const int rho = cfg.picard_rank();
    for (int t = 0; t < 20; ++t) {
      Vec<Rational> beta = g.ns_rational(rho, 6, 4), omega;
      do omega = g.ns_rational(rho, 6, 4);
      while (ns_dot(cfg, omega, omega) <= 0);
      auto e = exp_class(cfg, point(beta, omega));
      AdaptedFrame f = orthogonalize_frame(cfg, e);
      CHECK(f.k_upper >= f.k.lower_bound());
      CHECK(f.norms(0) > 0);
      CHECK(f.norms(1) > 0);
      for (int k = 2; k < cfg.mukai_dim(); ++k) CHECK(f.norms(k) < 0);
      // the form A is positive definite and dominates 2 k |Z|^2 - (v,v)
      Mat<Rational> a = enumeration_form(cfg, e);
      for (int s = 0; s < 30; ++s) {
        MukaiVec v = g.mukai(rho, 5);
        if (v.is_zero()) continue;
        Vec<Rational> x = v.coords().cast<Rational>();
        Rational av = x.dot(a * x);
        CHECK(av > 0);
        Rational z2 = central_charge(cfg, e, v).norm2();
        CHECK(av <= 2 * f.k_upper * z2 - Rational(mukai_pairing(cfg, v, v)));
      }
    }
  }
  CHECK_THROWS_AS(orthogonalize_frame(deg2(), {MukaiVecQ(qvec({1, 0, 0})), MukaiVecQ(qvec({0, 0, 1}))}), DomainError);
}

TEST_CASE("enumeration agrees with a brute-force box scan") {
  Gen g(10);
  int queries = 0;
  for (const auto& cfg : {deg2(), deg4(), quartic_line()}) {
    const int rho = cfg.picard_rank();
    for (int t = 0; t < 10; ++t) {
      Vec<Rational> beta = g.ns_rational(rho, 3, 2);
      Vec<Rational> omega = random_ample(g, cfg);
      if (rho == 1) omega(0) = g.positive(5, 2);
      auto p = point(beta, omega);
      auto q = query(exp_class(cfg, p), g.positive(rho == 1 ? 4 : 2, 1));
      q.spherical_only = g.coin();
      q.rank_positive_only = g.coin();
      q.norm_floor = q.spherical_only ? -2 : g.integer(-1, 1) * 2;
      auto res = enumerate_bounded(cfg, q);
      REQUIRE(res.complete);
      auto brute = brute_force_scan(cfg, p, widths(res, 1), q.bound_m, q.norm_floor.convert_to<long>(),
                                    q.spherical_only, q.rank_positive_only);
      CHECK(res.vectors == brute);
      for (const auto& v : res.vectors) {
        auto [re, im] = charge_oracle(cfg, p, v);
        CHECK(re * re + im * im <= q.bound_m * q.bound_m);
        CHECK(pairing_oracle(cfg, v, v) >= Rational(q.norm_floor));
      }
      ++queries;
    }
  }
  CHECK(queries >= 20);
}

TEST_CASE("monotone in the bound and symmetric under negation") {
  Gen g(12);
  for (const auto& cfg : {deg2(), quartic_line()}) {
    const int rho = cfg.picard_rank();
    for (int t = 0; t < 8; ++t) {
      Vec<Rational> beta = g.ns_rational(rho, 3, 2);
      Vec<Rational> omega = random_ample(g, cfg);
      if (rho == 1) omega(0) = g.positive(5, 2);
      auto e = exp_class(cfg, point(beta, omega));
      Rational m1 = g.positive(3, 2), m2 = m1 + g.positive(2, 2);
      auto small = enumerate_bounded(cfg, query(e, m1)).vectors;
      auto large = enumerate_bounded(cfg, query(e, m2)).vectors;
      CHECK(std::includes(large.begin(), large.end(), small.begin(), small.end()));
      std::set<MukaiVec> set(large.begin(), large.end());
      for (const auto& v : large) CHECK(set.count(-v) == 1);
    }
  }
}

TEST_CASE("threads do not change the result") {
  auto cfg = quartic_line();
  auto q = query(exp_class(cfg, point(qvec({Rational(1, 3), 0}), qvec({2, 1}))), 4);
  auto one = enumerate_bounded(cfg, q);
  q.threads = 3;
  auto three = enumerate_bounded(cfg, q);
  CHECK(one.vectors == three.vectors);
  CHECK(one.radius == three.radius);
}

TEST_CASE("caps refuse or truncate") {
  auto cfg = deg2();
  auto q = query(exp_class(cfg, point(qvec({0}), qvec({1}))), 40);
  q.box_cap = 10;
  CHECK_THROWS_AS(enumerate_bounded(cfg, q), EnumerationCapError);
  q.box_cap = Integer(1) << 32;
  q.radius_cap = Rational(1);
  auto res = enumerate_bounded(cfg, q);
  CHECK_FALSE(res.complete);
}

TEST_CASE("abelian surfaces have no spherical classes") {
  auto cfg = abelian();
  auto q = query(exp_class(cfg, point(qvec({0}), qvec({1}))), 10);
  q.spherical_only = true;
  auto res = enumerate_bounded(cfg, q);
  CHECK(res.vectors.empty());
  CHECK(res.abelian_policy);
  q.spherical_only = false;
  CHECK_FALSE(enumerate_bounded(cfg, q).vectors.empty());
}

TEST_CASE("wall candidates for the point class cover a naive scan") {
  auto cfg = deg2();
  Slice2D slice = Slice2D::ample_slice(cfg, Rect{Rational(-1, 4), Rational(1, 4), Rational(1, 2), Rational(3, 2)});
  MukaiVec v = mv({0, 0, 1});
  CandidateBox box;
  auto cands = wall_candidates(cfg, slice, v, {}, &box);
  CHECK(std::find(cands.begin(), cands.end(), mv({1, 0, 1})) != cands.end());
  CHECK(std::find(cands.begin(), cands.end(), mv({-1, 0, 0})) != cands.end());
  // every w with the defining inequalities at a sampled window point is a candidate
  std::set<MukaiVec> set(cands.begin(), cands.end());
  const long r = box.r_max.convert_to<long>() + 1;
  const long d0 = box.delta_lo[0].convert_to<long>() - 1, d1 = box.delta_hi[0].convert_to<long>() + 1;
  for (long rr = -r; rr <= r; ++rr)
    for (long dd = d0; dd <= d1; ++dd)
      for (long ss = -12; ss <= 12; ++ss) {
        MukaiVec w = mv({rr, dd, ss});
        if (w.is_zero() || w == v) continue;
        if (pairing_oracle(cfg, w, w) < -2 || pairing_oracle(cfg, v - w, v - w) < -2) continue;
        for (Rational x : {Rational(-1, 4), Rational(0), Rational(1, 4)})
          for (Rational y : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
            auto p = point(qvec({x}), qvec({y}));
            auto [wr, wi] = charge_oracle(cfg, p, w);
            auto [vr, vi] = charge_oracle(cfg, p, v);
            if (wr * wr + wi * wi <= vr * vr + vi * vi) CHECK_MESSAGE(set.count(w), to_string(w));
          }
      }
}

TEST_CASE("a positive floor above 2 k m^2 leaves nothing to find") {
  auto cfg = deg2();
  auto q = query(exp_class(cfg, point(qvec({0}), qvec({2}))), Rational(1, 10));
  q.norm_floor = 2;
  auto res = enumerate_bounded(cfg, q);
  CHECK(res.required_radius < 0);
  CHECK(res.complete);
  CHECK(res.vectors.empty());
  CHECK(res.vectors == brute_force_scan(cfg, point(qvec({0}), qvec({2})), {3, 3, 3}, q.bound_m, 2, false, false));
}
