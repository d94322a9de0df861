#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "hwext/error.hpp"
#include "hwext/extension.hpp"
#include "hwext/jet_io.hpp"

using namespace hwext;
using fixtures::GlobalCurve;

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

GlobalCurve parabola() {
  GlobalCurve c;
  c.planar = {{Polynomial({0, 1}), Polynomial({0, 0, 1})}};
  c.height = fixtures::lift_height(c.planar, 0.0, 0.0);
  return c;
}

}  // namespace

TEST(Extend, SingleIntervalIsTheJetItself) {
  const WhitneyJet jet = fixtures::restrict_to(parabola(), {{0, 1}});
  const ExtendedCurve ext = extend(jet);
  ASSERT_EQ(ext.segments().size(), 1u);
  EXPECT_EQ(ext.segments()[0].kind, Segment::Kind::OnK);
  EXPECT_TRUE(ext.gap_records().empty());
  EXPECT_EQ(ext.value(0.3), jet.value(0.3));
  EXPECT_TRUE(verify(ext, 200).passed);
}

TEST(Extend, TwoIntervalsMatchOnKAndPassVerification) {
  const GlobalCurve c = parabola();
  const WhitneyJet jet = fixtures::restrict_to(c, {{0, 0.45}, {0.55, 1}});
  const ExtendedCurve ext = extend(jet);
  ASSERT_EQ(ext.segments().size(), 3u);
  EXPECT_EQ(ext.segments()[1].kind, Segment::Kind::GapFill);
  for (double s : {0.0, 0.2, 0.45, 0.55, 0.8, 1.0}) {
    EXPECT_EQ(ext.value(s), jet.value(s));
    EXPECT_EQ(ext.derivative(s), jet.derivative(s));
  }
  const VerificationReport r = verify(ext, 500);
  EXPECT_TRUE(r.passed) << report_json(r);
  ASSERT_EQ(r.gaps.size(), 1u);
  EXPECT_LT(r.gaps[0].value, r.gaps[0].envelope);
  // The filler is a genuine curve between the gap ends: it stays close to the global curve.
  for (int k = 0; k <= 20; ++k) {
    const double s = 0.45 + 0.1 * k / 20;
    EXPECT_LE(max_abs_diff(ext.value(s), c.value(s)), 0.5);
  }
}

TEST(Extend, IsolatedPointJet) {
  const WhitneyJet jet = read_jet_file(std::string(HWEXT_DATA_DIR) + "/isolated_point.json");
  const ExtendedCurve ext = extend(jet);
  EXPECT_EQ(ext.value(0.5), jet.value(0.5));
  EXPECT_EQ(ext.derivative(0.5), jet.derivative(0.5));
  const VerificationReport r = verify(ext, 400);
  EXPECT_TRUE(r.passed) << report_json(r);
}

TEST(Extend, WindowAddsTails) {
  const WhitneyJet jet = fixtures::restrict_to(parabola(), {{0, 0.45}, {0.55, 1}});
  const ExtendedCurve ext = extend(jet, Interval{-0.5, 1.5});
  EXPECT_EQ(ext.segments().front().kind, Segment::Kind::Tail);
  EXPECT_EQ(ext.segments().back().kind, Segment::Kind::Tail);
  const auto v = ext.value(1.5);
  const auto d = jet.derivative(1.0);
  EXPECT_NEAR(v[0], 1.0 + 0.5 * d[0], 1e-14);
  EXPECT_NEAR(v[1], 1.0 + 0.5 * d[1], 1e-14);
  EXPECT_TRUE(verify(ext, 300).passed);
  EXPECT_THROW(ext.value(2.0), Error);
  EXPECT_THROW(extend(jet, Interval{0.1, 1.0}), Error);
}

TEST(Extend, RejectedJetNeedsForce) {
  const WhitneyJet jet = read_jet_file(std::string(HWEXT_DATA_DIR) + "/height_jump.json");
  try {
    extend(jet);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ValidationRejected);
    EXPECT_NE(std::string(e.what()).find("area"), std::string::npos);
  }
}

TEST(Extend, DerivativeMatchesFiniteDifferences) {
  std::mt19937_64 rng(51);
  const GlobalCurve c = fixtures::random_curve(rng, 2, 3, 0.5);
  const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 4, 0, 1, 0.05));
  const ExtendedCurve ext = extend(jet);
  for (std::size_t k = 0; k < ext.segments().size(); ++k) {
    const Interval dom = ext.segments()[k].domain;
    if (dom.length() == 0.0) continue;
    for (int q = 1; q < 10; ++q) {
      const double s = dom.lo + dom.length() * q / 10;
      const double h = 1e-6 * dom.length();
      const auto fd_hi = ext.segment_value(k, s + h);
      const auto fd_lo = ext.segment_value(k, s - h);
      const auto d = ext.segment_derivative(k, s);
      for (std::size_t m = 0; m < d.size(); ++m)
        EXPECT_NEAR((fd_hi[m] - fd_lo[m]) / (2 * h), d[m], 1e-5 * std::max(1.0, std::abs(d[m])));
    }
  }
}

TEST(Extend, SampleRestrictsToJetOnK) {
  std::mt19937_64 rng(53);
  const GlobalCurve c = fixtures::random_curve(rng, 1, 3, 0.5);
  const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 3, 0, 1, 0.05));
  const ExtendedCurve ext = extend(jet);
  std::vector<double> grid;
  for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
  const SampledCurve sc = sample(ext, grid);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!jet.set().contains(grid[k])) continue;
    EXPECT_EQ(sc.values[k], jet.value(grid[k]));
    EXPECT_EQ(sc.derivs[k], jet.derivative(grid[k]));
  }
  const std::string csv = sample_csv(sc, 1);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "s,x1,y1,t,dx1,dy1,dt");
}

TEST(Manifest, RoundTripReproducesTheCurve) {
  std::mt19937_64 rng(57);
  const GlobalCurve c = fixtures::random_curve(rng, 2, 3, 0.5);
  const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 4, 0, 1, 0.03));
  const ExtendedCurve ext = extend(jet, Interval{-0.25, 1.25});
  const std::string text = manifest_json(ext, verify(ext, 200));
  const ExtendedCurve back = extension_from_manifest(text);
  EXPECT_EQ(back.segments().size(), ext.segments().size());
  for (int k = 0; k <= 300; ++k) {
    const double s = -0.25 + 1.5 * k / 300;
    EXPECT_LE(max_abs_diff(back.value(s), ext.value(s)), 1e-13);
    EXPECT_LE(max_abs_diff(back.derivative(s), ext.derivative(s)), 1e-12);
  }
  EXPECT_EQ(manifest_json(back, std::nullopt), manifest_json(ext, std::nullopt));
  EXPECT_THROW(extension_from_manifest("{}"), Error);
}

TEST(Verify, RandomJetsPass) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 6; ++trial) {
    const GlobalCurve c = fixtures::random_curve(rng, 1 + trial % 2, 3, 0.5);
    const WhitneyJet jet = fixtures::restrict_to(c, fixtures::random_intervals(rng, 2 + trial % 4, 0, 1, 0.02));
    const VerificationReport r = verify(extend(jet), 400);
    EXPECT_TRUE(r.passed) << report_json(r);
  }
}
