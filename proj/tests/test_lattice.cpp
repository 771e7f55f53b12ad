#include <doctest.h>

#include "helpers.hpp"
#include "wnrep/errors.hpp"
#include "wnrep/lp.hpp"

using namespace wnrep;
using namespace wnrep::test;

TEST_SUITE("lattice") {
  TEST_CASE("weight_add") {
    CHECK(weight_add(W({1, 2}), W({0, -1})) == W({1, 1}));
    CHECK(weight_add(W({Q("1/2"), 3}), Weight(2)) == W({Q("1/2"), 3}));
    CHECK(weight_add(W({Q("1/2"), 0}), W({0, Q("1/3")})) == W({Q("1/2"), Q("1/3")}));
    CHECK_THROWS_AS(weight_add(W({1}), W({1, 2})), DimensionError);
    CHECK(W({Q("1/2"), -1}).str() == "(1/2,-1)");
  }

  TEST_CASE("support_sum against box enumeration") {
    // Quadrant plus {e1, e2}: oracle is the set of pairwise sums of enumerated points.
    SupportSet quad = SupportSet::cone({Weight(2), {CoordMode::NonNeg, CoordMode::NonNeg}});
    SupportSet two = SupportSet::point(W({1, 0})).unite(SupportSet::point(W({0, 1})));
    SupportSet sum = support_sum(quad, two);
    for (const auto& w : box_points(Weight(2), 6)) {
      bool expected = w[0] >= 0 && w[1] >= 0 && w[0] + w[1] >= 1;
      CHECK_MESSAGE(sum.contains(w) == expected, w.str());
    }
    SupportSet zero = SupportSet::point(Weight(2));
    for (const auto& w : box_points(Weight(2), 4)) CHECK(support_sum(quad, zero).contains(w) == quad.contains(w));

    SupportSet half = SupportSet::cone({W({Q("1/2")}), {CoordMode::Full}});
    SupportSet ray = SupportSet::cone({Weight(1), {CoordMode::NonNeg}});
    SupportSet s = support_sum(half, ray);
    for (long k = -6; k <= 6; ++k) {
      CHECK(s.contains(W({Q("1/2") + Scalar(k)})));
      CHECK_FALSE(s.contains(W({Scalar(k)})));
    }
  }

  TEST_CASE("support_sum of random cones matches pointwise sums") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> mode(0, 3), shift(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      ShiftedCone a{W({shift(rng), shift(rng)}), {CoordMode(mode(rng)), CoordMode(mode(rng))}};
      ShiftedCone b{W({shift(rng), shift(rng)}), {CoordMode(mode(rng)), CoordMode(mode(rng))}};
      SupportSet sum = support_sum(SupportSet::cone(a), SupportSet::cone(b));
      // Enumerate summands in a large box; only check targets well inside it.
      std::set<Weight> reach;
      auto pa = box_points(Weight(2), 8), pb = box_points(Weight(2), 8);
      for (const auto& x : pa)
        if (a.contains(x))
          for (const auto& y : pb)
            if (b.contains(y)) reach.insert(x + y);
      for (const auto& w : box_points(Weight(2), 4)) CHECK(sum.contains(w) == (reach.count(w) > 0));
    }
  }

  TEST_CASE("support_contains") {
    SupportSet ray = SupportSet::cone({Weight(1), {CoordMode::NonNeg}});
    CHECK(support_contains(ray, W({3})));
    CHECK_FALSE(support_contains(ray, W({-1})));
    SupportSet half = SupportSet::cone({W({Q("1/2")}), {CoordMode::Full}});
    CHECK_FALSE(support_contains(half, W({0})));
    CHECK(half.cosets() == std::vector<Weight>{W({Q("1/2")})});
  }

  TEST_CASE("leveled pieces") {
    LevelCone lc{{W({0, 0}), {CoordMode::NonNeg, CoordMode::NonNeg}}, Scalar(2)};
    CHECK(lc.contains(W({1, 1})));
    CHECK_FALSE(lc.contains(W({3, 0})));
    CHECK_FALSE(lc.empty());
    LevelCone none{{W({0, 0}), {CoordMode::NonNeg, CoordMode::NonNeg}}, Scalar(-1)};
    CHECK(none.empty());
    LevelCone frac{{W({0, 0}), {CoordMode::Full, CoordMode::Full}}, Q("1/2")};
    CHECK(frac.empty());
  }

  TEST_CASE("wn_roots_up_to") {
    auto r = wn_roots_up_to(1, 0);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == WnRoot{{0}, 0});
    CHECK(r[1] == WnRoot{{1}, 0});
    auto r2 = wn_roots_up_to(2, -1);
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == WnRoot{{0, 0}, 0});
    CHECK(r2[1] == WnRoot{{0, 0}, 1});
    CHECK(wn_roots_up_to(1, 1).size() == 3);
    // n * C(d+n+1, n) roots of degree <= d: n=2, d=2 gives 2 * 10.
    CHECK(wn_roots_up_to(2, 2).size() == 20);
    CHECK(WnRoot{{2, 0}, 1}.weight() == W({2, -1}));
  }

  TEST_CASE("shadow_from_isets") {
    Shadow s = shadow_from_isets(4, {0, 2}, {}, {1, 3});
    CHECK(s.minus.count(GlRoot{0, 3}));
    CHECK(s.is_partition());
    Shadow all = shadow_from_isets(2, {}, {0, 1}, {});
    CHECK(all.infinite.size() == 2);
    CHECK(all.finite.empty());
    CHECK(all.plus.empty());
    CHECK(all.minus.empty());
    Shadow t = shadow_from_isets(2, {1}, {}, {0});
    CHECK(t.minus == std::set<GlRoot>{GlRoot{1, 0}});
    CHECK(t.plus == std::set<GlRoot>{GlRoot{0, 1}});
    CHECK_THROWS_AS(shadow_from_isets(2, {0}, {0}, {1}), ValidationError);
    CHECK_THROWS_AS(shadow_from_isets(2, {0}, {}, {}), ValidationError);
  }

  TEST_CASE("finmult_criterion") {
    Shadow p = shadow_from_isets(4, {0, 2}, {}, {1, 3});
    Shadow v = shadow_from_isets(4, {1, 3}, {}, {0, 2});  // E_14 lands in Plus
    CHECK(v.plus.count(GlRoot{0, 3}));
    CHECK_FALSE(finmult_criterion(p, v));
    CHECK(finmult_criterion(p, Shadow::all_finite(4)));
    Shadow p2 = shadow_from_isets(2, {1}, {}, {0});
    CHECK(finmult_criterion(p2, p2));
  }

  TEST_CASE("window") {
    Window w = Window::box(2, 2, 1);
    CHECK(w.contains(W({2, -2})));
    CHECK_FALSE(w.contains(W({3, 0})));
    CHECK_FALSE(w.interior_contains(W({2, 0})));
    CHECK(w.interior_contains(W({1, -1})));
    CHECK(w.coset_points(W({Q("1/2"), 0})).size() == 4u * 5u);
    CHECK_THROWS_AS(Window::box(2, -1), RangeError);
  }
}

TEST_SUITE("lp") {
  TEST_CASE("bounded maximum") {
    // max x + y with x <= 2, y <= 3, x + y <= 4
    std::vector<LinIneq> rows{{{1, 0}, 2}, {{0, 1}, 3}, {{1, 1}, 4}};
    LpResult r = lp_sup(2, rows, {1, 1});
    CHECK(r.feasible);
    CHECK_FALSE(r.unbounded);
    CHECK(r.value == Scalar(4));
  }
  TEST_CASE("unbounded and infeasible") {
    LpResult u = lp_sup(1, {{{-1}, 0}}, {1});
    CHECK(u.feasible);
    CHECK(u.unbounded);
    LpResult f = lp_sup(1, {{{1}, -1}, {{-1}, -1}}, {1});
    CHECK_FALSE(f.feasible);
  }
  TEST_CASE("fractional optimum") {
    // max x with 2x <= 1
    LpResult r = lp_sup(1, {{{2}, 1}}, {1});
    CHECK(r.value == Q("1/2"));
  }
}
