#include "skcert/polygon.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"

namespace skcert {
namespace {

std::vector<LatticePoint> verts(std::initializer_list<std::pair<i64, i64>> v) {
  std::vector<LatticePoint> out;
  for (auto [i, h] : v) out.push_back({i, h});
  return out;
}

NewtonPolygon poly(std::initializer_list<std::pair<i64, i64>> v) { return NewtonPolygon::from_vertices(verts(v)); }

std::vector<ValuedPoint> points(std::initializer_list<i64> vals) {
  std::vector<ValuedPoint> out;
  i64 i = 0;
  for (i64 v : vals) out.push_back({i++, Valuation(static_cast<u64>(v))});
  return out;
}

std::vector<i64> multiply(const std::vector<i64>& a, const std::vector<i64>& b) {
  std::vector<i64> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

TEST(CoefficientValuations, TrimmedExamples) {
  const PolyInstance t(Family::Trimmed, 3, 11);
  EXPECT_EQ(coefficient_valuations(t, 11), points({1, 1, 1, 1, 1, 1, 1, 1, 0}));
  EXPECT_EQ(coefficient_valuations(t, 5), points({2, 2, 1, 1, 1, 1, 1, 0, 0}));
}

TEST(CoefficientValuations, FigureInstance) {
  ASSERT_TRUE(testing::trial_division_prime(1342343));
  const PolyInstance t(Family::Trimmed, 1342340, 1342347);
  EXPECT_EQ(coefficient_valuations(t, 1342343), points({1, 1, 1, 0, 0, 0, 0, 0}));
}

TEST(CoefficientValuations, MatchExplicitCoefficients) {
  for (Family fam : {Family::Trimmed, Family::Laguerre}) {
    for (u64 m = 2; m <= 25; ++m) {
      for (u64 n = 1; n < m; ++n) {
        const PolyInstance inst(fam, n, m);
        const auto coeffs = testing::instance_coefficients(inst);
        for (u64 p : {2, 3, 5, 7, 11, 13}) {
          const auto pts = coefficient_valuations(inst, p);
          for (std::size_t i = 0; i < coeffs.size(); ++i) {
            ASSERT_EQ(pts[i].valuation.value(), testing::naive_valuation(coeffs[i], p));
          }
        }
      }
    }
  }
}

TEST(LowerHull, Examples) {
  EXPECT_EQ(lower_hull(points({2, 0, 1})).vertices(), verts({{0, 2}, {1, 0}, {2, 1}}));
  EXPECT_EQ(lower_hull(points({1, 1, 1, 1, 1, 1, 1, 1, 0})).vertices(), verts({{0, 1}, {8, 0}}));
  EXPECT_EQ(lower_hull(points({1, 1, 1, 0, 0, 0, 0, 0})).vertices(), verts({{0, 1}, {3, 0}, {7, 0}}));
  EXPECT_EQ(lower_hull(points({2, 2, 1, 1, 1, 1, 1, 0, 0})).vertices(), verts({{0, 2}, {2, 1}, {7, 0}, {8, 0}}));
}

TEST(LowerHull, CollinearPointsAreNotVertices) {
  EXPECT_EQ(lower_hull(points({2, 1, 0})).vertices(), verts({{0, 2}, {2, 0}}));
}

TEST(LowerHull, Errors) {
  EXPECT_THROW(lower_hull(points({1})), std::invalid_argument);
  std::vector<ValuedPoint> missing_end{{0, Valuation(1)}, {1, Valuation(0)}, {2, Valuation::infinity()}};
  EXPECT_THROW(lower_hull(missing_end), std::invalid_argument);
  std::vector<ValuedPoint> missing_start{{0, Valuation::infinity()}, {1, Valuation(0)}};
  EXPECT_THROW(lower_hull(missing_start), std::invalid_argument);
  std::vector<ValuedPoint> no_zero{{1, Valuation(0)}, {2, Valuation(0)}};
  EXPECT_THROW(lower_hull(no_zero), std::invalid_argument);
}

TEST(NewtonPolygon, FromVerticesValidates) {
  EXPECT_THROW(NewtonPolygon::from_vertices(verts({{0, 2}, {1, 1}, {2, 0}})), std::invalid_argument);
  EXPECT_THROW(NewtonPolygon::from_vertices(verts({{1, 2}, {2, 0}})), std::invalid_argument);
  EXPECT_THROW(NewtonPolygon::from_vertices(verts({{0, 2}})), std::invalid_argument);
  EXPECT_NO_THROW(NewtonPolygon::from_vertices(verts({{0, 2}, {1, 0}, {2, 1}})));
}

TEST(SlopeSequence, Examples) {
  const Rational e(-1, 8);
  EXPECT_EQ(slope_sequence(poly({{0, 1}, {8, 0}})).slopes, std::vector<Rational>(8, e));
  const Rational t(-1, 3);
  EXPECT_EQ(slope_sequence(poly({{0, 1}, {3, 0}, {7, 0}})).slopes,
            (std::vector<Rational>{t, t, t, 0, 0, 0, 0}));
  const Rational h(-1, 2), f(-1, 5);
  EXPECT_EQ(slope_sequence(poly({{0, 2}, {2, 1}, {7, 0}, {8, 0}})).slopes,
            (std::vector<Rational>{h, h, f, f, f, f, f, 0}));
}

TEST(LatticePoints, Examples) {
  EXPECT_EQ(lattice_points(poly({{0, 1}, {8, 0}})), verts({{0, 1}, {8, 0}}));
  EXPECT_EQ(lattice_points(poly({{0, 2}, {2, 0}})), verts({{0, 2}, {1, 1}, {2, 0}}));
  EXPECT_EQ(lattice_points(poly({{0, 1}, {3, 0}, {7, 0}})), verts({{0, 1}, {3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 0}}));
}

TEST(TameCycleWitnesses, Examples) {
  auto w = tame_cycle_witnesses(poly({{0, 1}, {8, 0}}), 11);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].cycle_length, 8);
  EXPECT_EQ(w[0].kind, WitnessKind::Tame);

  w = tame_cycle_witnesses(poly({{0, 2}, {2, 1}, {7, 0}, {8, 0}}), 5);
  // (2,1)-(7,0) has 5 | t; the flat unit segment gives a trivial 1-cycle.
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].segment, (Segment{{0, 2}, 2, 1}));
  EXPECT_EQ(w[0].cycle_length, 2);
  EXPECT_EQ(w[1].cycle_length, 1);
  for (const auto& x : w) EXPECT_NE(x.segment.start, (LatticePoint{2, 1}));

  // Eisenstein: single slope -1/k with p not dividing k.
  w = tame_cycle_witnesses(poly({{0, 1}, {9, 0}}), 7);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].cycle_length, 9);
}

TEST(TameCycleWitnesses, GcdHypothesis) {
  // slope -2/4: gcd(2, 4) != 1.
  EXPECT_TRUE(tame_cycle_witnesses(poly({{0, 2}, {4, 0}}), 3).empty());
  EXPECT_TRUE(tame_cycle_witnesses(poly({{0, 0}, {3, 0}}), 5).empty());
}

TEST(RamificationWitnesses, SlopeMinusOneOverP) {
  const auto w = ramification_witnesses(poly({{0, 2}, {2, 1}, {7, 0}, {8, 0}}), 5);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].segment, (Segment{{2, 1}, 5, 1}));
  EXPECT_EQ(w[0].kind, WitnessKind::RamificationOrder);
}

TEST(NpOfIntPoly, Examples) {
  EXPECT_EQ(np_of_int_poly(std::vector<i64>{2, 3, 1}, 2).vertices(), verts({{0, 1}, {1, 0}, {2, 0}}));
  EXPECT_EQ(np_of_int_poly(std::vector<i64>{1, 1}, 7).vertices(), verts({{0, 0}, {1, 0}}));
  EXPECT_EQ(np_of_int_poly(std::vector<i64>{4, 0, 1}, 2).vertices(), verts({{0, 2}, {2, 0}}));
  EXPECT_THROW(np_of_int_poly(std::vector<i64>{0, 1}, 2), std::invalid_argument);
  EXPECT_THROW(np_of_int_poly(std::vector<i64>{1, 0}, 2), std::invalid_argument);
}

TEST(NpPointwiseLeq, Examples) {
  const NewtonPolygon a = poly({{0, 1}, {8, 0}});
  EXPECT_TRUE(np_pointwise_leq(a, a));
  EXPECT_TRUE(np_pointwise_leq(a, poly({{0, 2}, {8, 0}})));
  EXPECT_FALSE(np_pointwise_leq(poly({{0, 2}, {8, 0}}), a));
  EXPECT_THROW(np_pointwise_leq(a, poly({{0, 1}, {7, 0}})), std::invalid_argument);

  const NewtonPolygon trimmed = lower_hull(coefficient_valuations(PolyInstance(Family::Trimmed, 3, 11), 5));
  const NewtonPolygon laguerre = lower_hull(coefficient_valuations(PolyInstance(Family::Laguerre, 3, 11), 5));
  EXPECT_TRUE(np_pointwise_leq(trimmed, laguerre));
}

TEST(FamilySegmentPersists, Examples) {
  const NewtonPolygon np = lower_hull(coefficient_valuations(PolyInstance(Family::Trimmed, 3, 11), 5));
  const Segment seg{{2, 1}, 5, 1};
  std::vector<Valuation> zeros(9, Valuation(0));
  EXPECT_TRUE(family_segment_persists(np, seg, zeros));

  std::vector<Valuation> lag;
  for (u64 j = 0; j <= 8; ++j) lag.push_back(Valuation(vp_binomial(8, j, 5)));
  EXPECT_TRUE(family_segment_persists(np, seg, lag));

  std::vector<Valuation> bad = zeros;
  bad[2] = Valuation(1);
  EXPECT_FALSE(family_segment_persists(np, seg, bad));

  EXPECT_THROW(family_segment_persists(np, Segment{{1, 2}, 2, 1}, zeros), std::invalid_argument);
}

TEST(FamilySegmentPersists, MemberKeepsSegment) {
  // Lemma check on the Laguerre member itself: its polygon contains (2,1)-(7,0).
  const NewtonPolygon lag = lower_hull(coefficient_valuations(PolyInstance(Family::Laguerre, 3, 11), 5));
  EXPECT_TRUE(segment_on_polygon(lag, Segment{{2, 1}, 5, 1}));
}

// --- property suites -------------------------------------------------------

std::vector<ValuedPoint> random_points(std::mt19937_64& rng, i64 k, bool allow_inf) {
  std::uniform_int_distribution<int> val(0, 20);
  std::uniform_int_distribution<int> coin(0, 9);
  std::vector<ValuedPoint> pts;
  for (i64 j = 0; j <= k; ++j) {
    const bool inf = allow_inf && j != 0 && j != k && coin(rng) == 0;
    pts.push_back({j, inf ? Valuation::infinity() : Valuation(static_cast<u64>(val(rng)))});
  }
  return pts;
}

TEST(HullProperties, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> deg(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 k = deg(rng);
    const auto pts = random_points(rng, k, true);
    const NewtonPolygon np = lower_hull(pts);
    std::vector<std::pair<i64, i64>> finite;
    for (const auto& p : pts) {
      if (p.valuation.is_finite()) finite.emplace_back(p.index, static_cast<i64>(p.valuation.value()));
    }
    const auto expect = testing::brute_force_hull_values(finite, k);
    for (i64 x = 0; x <= k; ++x) {
      ASSERT_EQ(np.value_at(x), Rational(expect[x].num, expect[x].den)) << "trial " << trial << " x=" << x;
    }
  }
}

TEST(HullProperties, SlopeBookkeeping) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> deg(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 k = deg(rng);
    const auto pts = random_points(rng, k, true);
    const NewtonPolygon np = lower_hull(pts);
    const auto slopes = slope_sequence(np).slopes;
    ASSERT_EQ(static_cast<i64>(slopes.size()), k);
    ASSERT_TRUE(std::is_sorted(slopes.begin(), slopes.end()));
    Rational sum(0);
    for (const Rational& s : slopes) sum = sum + s;
    const i64 v0 = static_cast<i64>(pts.front().valuation.value());
    const i64 vk = static_cast<i64>(pts.back().valuation.value());
    ASSERT_EQ(sum, Rational(vk - v0));
    // The slopes and the starting height determine the polygon.
    Rational h(v0);
    for (i64 j = 1; j <= k; ++j) {
      h = h + slopes[static_cast<std::size_t>(j - 1)];
      ASSERT_EQ(h, np.value_at(j));
    }
    // Lattice points lie on the polygon and include every vertex.
    const auto lat = lattice_points(np);
    for (const auto& v : np.vertices()) ASSERT_NE(std::find(lat.begin(), lat.end(), v), lat.end());
    for (const auto& l : lat) ASSERT_EQ(np.value_at(l.index), Rational(l.height));
  }
}

TEST(HullProperties, RootValuationsOfLinearProducts) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const u64 p = (trial % 2 == 0) ? 2 : 3;
    std::uniform_int_distribution<int> nfac(1, 5), expo(0, 3), unit(1, 4);
    std::vector<i64> f{1};
    std::vector<Rational> expected;
    const int count = nfac(rng);
    for (int i = 0; i < count; ++i) {
      const int a = expo(rng);
      i64 u = unit(rng);
      if (static_cast<u64>(u) % p == 0) ++u;
      i64 root = u;
      for (int e = 0; e < a; ++e) root *= static_cast<i64>(p);
      f = multiply(f, {-root, 1});
      expected.push_back(Rational(-a));
    }
    std::sort(expected.begin(), expected.end());
    ASSERT_EQ(slope_sequence(np_of_int_poly(f, p)).slopes, expected);
  }
}

TEST(HullProperties, MonotoneUnderRaisedValuations) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(1, 30), raise(0, 3), coin(0, 1);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 k = deg(rng);
    const auto f = random_points(rng, k, false);
    auto g = f;
    for (auto& pt : g) {
      if (coin(rng)) pt.valuation = pt.valuation + Valuation(static_cast<u64>(raise(rng)));
    }
    ASSERT_TRUE(np_pointwise_leq(lower_hull(f), lower_hull(g)));
  }
}

TEST(HullProperties, LatticePointSurvivesUnitMultiplier) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> deg(1, 30), raise(0, 4);
  for (int trial = 0; trial < 2000; ++trial) {
    const i64 k = deg(rng);
    const auto f = random_points(rng, k, false);
    const NewtonPolygon npf = lower_hull(f);
    // Lattice points of the polygon that are also points of B(f).
    std::vector<LatticePoint> on_both;
    for (const LatticePoint& l : lattice_points(npf)) {
      if (f[static_cast<std::size_t>(l.index)].valuation == Valuation(static_cast<u64>(l.height))) on_both.push_back(l);
    }
    const LatticePoint c = on_both[static_cast<std::size_t>(trial) % on_both.size()];
    // Member valuations v(a_j) + v(b_j) with v(a_c) = 0; every other
    // multiplier, the ends included, may carry extra factors of p.
    auto g = f;
    for (auto& pt : g) {
      if (pt.index != c.index) pt.valuation = pt.valuation + Valuation(static_cast<u64>(raise(rng)));
    }
    ASSERT_EQ(lower_hull(g).value_at(c.index), Rational(c.height)) << "trial " << trial;
  }
}

TEST(HullProperties, DumasProductLaw) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> deg(1, 8);
  std::uniform_int_distribution<i64> coef(-100, 100);
  auto random_poly = [&] {
    std::vector<i64> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : c) x = coef(rng);
    while (c.front() == 0) c.front() = coef(rng);
    while (c.back() == 0) c.back() = coef(rng);
    return c;
  };
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = random_poly();
    const auto h = random_poly();
    const auto gh = multiply(g, h);
    for (u64 p : {2, 3, 5, 7}) {
      auto merged = slope_sequence(np_of_int_poly(g, p)).slopes;
      const auto sh = slope_sequence(np_of_int_poly(h, p)).slopes;
      merged.insert(merged.end(), sh.begin(), sh.end());
      std::sort(merged.begin(), merged.end());
      ASSERT_EQ(slope_sequence(np_of_int_poly(gh, p)).slopes, merged);
    }
  }
}

}  // namespace
}  // namespace skcert
