#include <gtest/gtest.h>

#include "hwext/error.hpp"
#include "hwext/jet_io.hpp"
#include "hwext/luzin.hpp"

using namespace hwext;

namespace {

PiecewiseCurve corner() {
  return parse_piecewise_curve(read_text_file(std::string(HWEXT_DATA_DIR) + "/corner.json"));
}

}  // namespace

TEST(PiecewiseCurve, ParsingAndChecks) {
  const PiecewiseCurve c = corner();
  EXPECT_EQ(c.pieces().size(), 2u);
  EXPECT_FALSE(c.c1_at_knot(0));
  EXPECT_EQ(c.value(0.5), (std::vector<double>{0.5, 0.5, 0.0}));
  // Value jump at the knot.
  EXPECT_THROW(parse_piecewise_curve(R"({"n":1,"interval":[0,1],"knots":[0.5],
      "pieces":[{"gamma":[[0,0]]},{"gamma":[[1,0]]}]})"),
               Error);
  // Explicit heights must be horizontal.
  EXPECT_THROW(parse_piecewise_curve(R"({"n":1,"interval":[0,1],
      "pieces":[{"gamma":[[[0,1],0]],"height":[0,1]}]})"),
               Error);
}

TEST(Luzin, CornerCurveAcrossBudgets) {
  const PiecewiseCurve c = corner();
  double prev_measure = 0.0;
  for (double eps : {0.2, 0.1, 0.05}) {
    const LuzinResult r = approximate(c, eps);
    EXPECT_LT(r.measure_removed, eps);
    EXPECT_GT(r.e.measure(), 2.0 - eps);
    EXPECT_FALSE(r.e.contains(0.0));
    EXPECT_GE(r.e.measure(), prev_measure);
    prev_measure = r.e.measure();
    EXPECT_LE(r.agreement, 1e-9);
    const VerificationReport rep = verify(r.extension, 300);
    EXPECT_TRUE(rep.passed) << report_json(rep);
  }
}

TEST(Luzin, SmoothCurveKeepsEverything) {
  const PiecewiseCurve c = parse_piecewise_curve(R"({"n":1,"interval":[0,1],
      "pieces":[{"gamma":[[[0,1],[0,0,1]]]}]})");
  const LuzinResult r = approximate(c, 0.1);
  ASSERT_EQ(r.e.intervals().size(), 1u);
  EXPECT_EQ(r.e.intervals()[0], (Interval{0, 1}));
  EXPECT_EQ(r.measure_removed, 0.0);
}

TEST(Luzin, SmoothKnotStillCostsOneCell) {
  // Each interval of E carries a single polynomial, so one cell at every knot goes.
  const PiecewiseCurve c = parse_piecewise_curve(R"({"n":1,"interval":[0,1],"knots":[0.5],
      "pieces":[{"gamma":[[[0,1],[0,0,1]]]},{"gamma":[[[0,1],[0,0,1]]]}]})");
  EXPECT_TRUE(c.c1_at_knot(0));
  LuzinOptions opt;
  opt.cells = 256;
  const LuzinResult r = approximate(c, 0.1, opt);
  EXPECT_EQ(r.e.intervals().size(), 2u);
  EXPECT_NEAR(r.measure_removed, 1.0 / 256, 1e-15);
}

TEST(Luzin, BudgetTooSmallForResolution) {
  LuzinOptions opt;
  opt.cells = 16;
  try {
    approximate(corner(), 1e-4, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MeasureBudget);
  }
}
