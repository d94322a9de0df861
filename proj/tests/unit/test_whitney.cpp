#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hwext/error.hpp"
#include "hwext/jet_io.hpp"
#include "hwext/whitney.hpp"

using namespace hwext;
using fixtures::GlobalCurve;

namespace {

JetPiece constant_piece(double x, double y, double h) {
  JetPiece p;
  p.gamma = {{Polynomial::constant(x), Polynomial::constant(y)}};
  p.height = Polynomial::constant(h);
  return p;
}

JetPiece with_zero_prime(JetPiece p) {
  p.has_prime = true;
  p.gamma_prime = {{Polynomial::constant(0), Polynomial::constant(0)}};
  p.height_prime = Polynomial::constant(0);
  return p;
}

GlobalCurve line_curve() {
  GlobalCurve c;
  c.planar = {{Polynomial({0, 1}), Polynomial::constant(0)}};
  c.height = Polynomial::constant(0);
  return c;
}

}  // namespace

TEST(CompactSet, RejectsBadInput) {
  EXPECT_THROW(CompactSet({}), Error);
  EXPECT_THROW(CompactSet({{1, 0}}), Error);
  EXPECT_THROW(CompactSet({{0, 2}, {1, 3}}), Error);
  EXPECT_THROW(CompactSet({{0, 1}, {1, 2}}), Error);
  const CompactSet k({{0, 1}, {2, 2}, {3, 4}});
  EXPECT_EQ(k.measure(), 2.0);
  EXPECT_EQ(k.find(2.0), 1);
  EXPECT_EQ(k.find(1.5), -1);
  EXPECT_TRUE(k.contains(4.0));
}

TEST(Gaps, Examples) {
  const WhitneyJet two(1, CompactSet({{0, 1}, {2, 3}}), {constant_piece(0, 0, 0), constant_piece(0, 0, 0)});
  const auto g = gaps(two);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0].a, 1.0);
  EXPECT_EQ(g[0].b, 2.0);
  const WhitneyJet one(1, CompactSet({{0, 1}}), {constant_piece(0, 0, 0)});
  EXPECT_TRUE(gaps(one).empty());
}

TEST(WhitneyJetChecks, RejectsBadJets) {
  EXPECT_THROW(WhitneyJet(1, CompactSet({{0, 0}}), {constant_piece(0, 0, 0)}), Error);
  EXPECT_NO_THROW(WhitneyJet(1, CompactSet({{0, 0}}), {with_zero_prime(constant_piece(0, 0, 0))}));
  JetPiece high = constant_piece(0, 0, 0);
  high.gamma[0].x = Polynomial({0, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_THROW(WhitneyJet(1, CompactSet({{0, 1}}), {high}), Error);
  JetPiece wrong = constant_piece(0, 0, 0);
  wrong.has_prime = true;
  wrong.gamma_prime = {{Polynomial::constant(1), Polynomial::constant(0)}};
  wrong.height_prime = Polynomial::constant(0);
  EXPECT_THROW(WhitneyJet(1, CompactSet({{0, 1}}), {wrong}), Error);
  EXPECT_THROW(WhitneyJet(1, CompactSet({{0, 1}, {2, 3}}), {constant_piece(0, 0, 0)}), Error);
}

TEST(WhitneyJetChecks, EvaluationOutsideKIsDomainError) {
  const WhitneyJet jet(1, CompactSet({{0, 1}, {2, 3}}), {constant_piece(0, 0, 0), constant_piece(1, 0, 0)});
  try {
    jet.value(1.5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Domain);
  }
}

TEST(Moduli, StraightLineHasZeroModuli) {
  const WhitneyJet jet = fixtures::restrict_to(line_curve(), {{0, 0.3}, {0.5, 0.6}, {0.9, 1}});
  EXPECT_LE(whitney_modulus(jet, 1.0), 1e-14);
  EXPECT_LE(area_modulus(jet, 1.0), 1e-14);
  EXPECT_LE(horizontality_defect(jet), 1e-15);
  EXPECT_TRUE(validate(jet).extendable);
}

TEST(Moduli, MonotoneInScale) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    const GlobalCurve c = fixtures::random_curve(rng, 2, 3, 0.5);
    const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 4, 0, 1, 0.02));
    double prev_w = 0.0, prev_a = 0.0;
    for (double t : {0.01, 0.02, 0.05, 0.1, 0.3, 1.0}) {
      const PairModuli m = pair_moduli(jet, t, 16);
      EXPECT_GE(m.whitney, prev_w);
      EXPECT_GE(m.area, prev_a);
      EXPECT_GE(m.whitney, m.planar_whitney);
      EXPECT_GE(m.whitney, m.height_whitney);
      prev_w = m.whitney;
      prev_a = m.area;
    }
  }
}

TEST(Moduli, QuadraticRemainderScalesLinearly) {
  // gamma = (s^2, 0) lifted: the Taylor remainder over a pair at distance d is d^2.
  GlobalCurve c;
  c.planar = {{Polynomial({0, 0, 1}), Polynomial::constant(0)}};
  c.height = Polynomial::constant(0);
  const WhitneyJet jet = fixtures::restrict_to(c, {{0, 1}});
  // Samples at multiples of 1/3, so the scale 0.34 only sees neighbours.
  EXPECT_NEAR(whitney_modulus(jet, 0.34, 4), 1.0 / 3, 1e-12);
  EXPECT_EQ(whitney_modulus(jet, 0.25, 4), 0.0);
}

TEST(EpsilonSequence, SortedMonotoneAndDominating) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const GlobalCurve c = fixtures::random_curve(rng, 1, 3, 0.5);
    const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 6, 0, 1, 0.01));
    const auto eps = epsilon_sequence(jet, gaps(jet));
    ASSERT_EQ(eps.size(), 5u);
    for (std::size_t k = 0; k < eps.size(); ++k) {
      const Gap& g = eps[k];
      const double len = g.b - g.a;
      EXPECT_GT(g.epsilon, len);
      if (k > 0) {
        EXPECT_LE(len, eps[k - 1].b - eps[k - 1].a);
        EXPECT_LE(g.epsilon, eps[k - 1].epsilon);
      }
    }
  }
}

TEST(BigM, LineHasSlopeOne) {
  const WhitneyJet jet = fixtures::restrict_to(line_curve(), {{0, 0.3}, {0.5, 1}});
  EXPECT_NEAR(big_m(jet), 2.0, 1e-14);
}

TEST(Validate, ScaleLadderAndDefaults) {
  const WhitneyJet jet = fixtures::restrict_to(line_curve(), {{0, 0.4}, {0.45, 1}});
  EXPECT_EQ(default_min_scale(jet), 1.0 / 16.0);
  const ValidationVerdict v = validate(jet);
  ASSERT_FALSE(v.scales.empty());
  EXPECT_EQ(v.scales.back().t, 1.0 / 16.0);
  for (std::size_t k = 1; k < v.scales.size(); ++k) EXPECT_LT(v.scales[k].t, v.scales[k - 1].t);
  EXPECT_TRUE(v.failing.empty());
}

TEST(Validate, HeightJumpIsRejected) {
  std::vector<JetPiece> ps{constant_piece(0, 0, 0), constant_piece(0, 0, 0.5)};
  const WhitneyJet jet(1, CompactSet({{0, 0.45}, {0.55, 1}}), ps);
  const ValidationVerdict v = validate(jet);
  EXPECT_FALSE(v.extendable);
  EXPECT_NE(std::find(v.failing.begin(), v.failing.end(), "area"), v.failing.end());
}

TEST(Validate, NonHorizontalJetIsRejected) {
  JetPiece p = constant_piece(0, 0, 0);
  p.gamma[0].x = Polynomial({0, 1});
  p.height = Polynomial({0, 1});
  const WhitneyJet jet(1, CompactSet({{0, 1}}), {p});
  const ValidationVerdict v = validate(jet);
  EXPECT_FALSE(v.horizontality_ok);
  EXPECT_NEAR(v.horizontality, 1.0, 1e-14);
}

TEST(Validate, RestrictionKeepsAcceptance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const GlobalCurve c = fixtures::random_curve(rng, 1, 3, 0.5);
    const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 5, 0, 1, 0.02));
    Tolerances tol;
    tol.t_min = 1.0 / 32.0;
    if (!validate(jet, tol).extendable) continue;
    const WhitneyJet sub = jet.restricted({0, 2, 4});
    EXPECT_TRUE(validate(sub, tol).extendable);
  }
}

TEST(ImpliedHeightBound, HeightModulusControlledByOthers) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const GlobalCurve c = fixtures::random_curve(rng, 2, 3, 0.5);
    const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 3, 0, 1, 0.02));
    const double t = 0.05;
    const PairModuli m = pair_moduli(jet, t, 32);
    const double defect = horizontality_defect(jet, 32);
    EXPECT_LE(m.height_whitney, implied_height_whitney_bound(jet, m, t, defect, 32) * (1 + 1e-12) + 1e-15);
  }
}

TEST(JetIo, RoundTripAndErrors) {
  std::mt19937_64 rng(31);
  const GlobalCurve c = fixtures::random_curve(rng, 2, 2, 0.5);
  const WhitneyJet jet = fixtures::restrict_to(c, {{0, 0.3}, {0.5, 0.5}, {0.7, 1}});
  const WhitneyJet back = parse_jet(jet_to_json(jet));
  EXPECT_EQ(jet_to_json(back), jet_to_json(jet));
  for (double s : {0.1, 0.5, 0.9}) EXPECT_EQ(back.value(s), jet.value(s));
  try {
    parse_jet("{\n  \"n\": 1,\n  oops\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_jet(R"({"n":1,"intervals":[[0,1]],"pieces":[{"gamma":[[1]],"height":0}]})"), Error);
  EXPECT_EQ(format_double(0.1), "0.1");
}
