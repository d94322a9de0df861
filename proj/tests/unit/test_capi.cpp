#include <gtest/gtest.h>

#include <cstring>
#include <string>

#include "hwext/hwext.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hwext_string_free(s);
  return out;
}

const char* kJet = R"({"n":1,"intervals":[[0,0.45],[0.55,1]],
  "pieces":[{"gamma":[[[0,1],[0,0,1]]],"height":[0,0,0,-0.6666666666666666]},
            {"gamma":[[[0,1],[0,0,1]]],"height":[0,0,0,-0.6666666666666666]}]})";

}  // namespace

TEST(CApi, HeisenbergPrimitives) {
  const double p[3] = {1, 0, 0}, q[3] = {0, 1, 0};
  double out[3];
  ASSERT_EQ(hwext_group_mul(1, p, q, out), HWEXT_OK);
  EXPECT_EQ(out[2], -2.0);
  EXPECT_EQ(hwext_group_mul(0, p, q, out), HWEXT_E_DIMENSION);
  EXPECT_NE(std::strlen(hwext_last_error()), 0u);
  ASSERT_EQ(hwext_dilate(1, 2.0, p, out), HWEXT_OK);
  EXPECT_EQ(out[0], 2.0);
  EXPECT_EQ(hwext_dilate(1, -1.0, p, out), HWEXT_E_DOMAIN);
  EXPECT_STREQ(hwext_status_name(HWEXT_OK), "ok");
}

TEST(CApi, JetLifecycleAndExtension) {
  hwext_jet* jet = nullptr;
  ASSERT_EQ(hwext_jet_from_json(kJet, &jet), HWEXT_OK);
  int n = 0;
  EXPECT_EQ(hwext_jet_dimension(jet, &n), HWEXT_OK);
  EXPECT_EQ(n, 1);

  hwext_tolerances tol;
  hwext_tolerances_default(&tol);
  EXPECT_EQ(tol.whitney, 0.5);
  int ok = 0;
  char* report = nullptr;
  ASSERT_EQ(hwext_validate(jet, &tol, &ok, &report), HWEXT_OK);
  EXPECT_EQ(ok, 1);
  EXPECT_NE(take(report).find("\"extendable\": true"), std::string::npos);

  hwext_extend_options opt;
  hwext_extend_options_default(&opt);
  hwext_extension* ext = nullptr;
  ASSERT_EQ(hwext_extend(jet, &opt, &ext), HWEXT_OK);
  int passed = 0;
  ASSERT_EQ(hwext_extension_verify(ext, 200, &passed, &report), HWEXT_OK);
  take(report);
  EXPECT_EQ(passed, 1);

  double v[3], d[3];
  ASSERT_EQ(hwext_extension_eval(ext, 0.2, v, d), HWEXT_OK);
  EXPECT_EQ(v[0], 0.2);
  EXPECT_EQ(hwext_extension_eval(ext, 3.0, v, nullptr), HWEXT_E_DOMAIN);

  char* manifest = nullptr;
  ASSERT_EQ(hwext_extension_manifest(ext, 0, &manifest), HWEXT_OK);
  hwext_extension* back = nullptr;
  ASSERT_EQ(hwext_extension_from_manifest(manifest, &back), HWEXT_OK);
  hwext_string_free(manifest);
  double lo = 0, hi = 0;
  EXPECT_EQ(hwext_extension_window(back, &lo, &hi), HWEXT_OK);
  EXPECT_EQ(lo, 0.0);
  EXPECT_EQ(hi, 1.0);

  char* csv = nullptr;
  ASSERT_EQ(hwext_extension_sample_csv(back, 11, &csv), HWEXT_OK);
  EXPECT_EQ(take(csv).rfind("s,x1,y1,t,dx1,dy1,dt\n", 0), 0u);

  hwext_extension_free(back);
  hwext_extension_free(ext);
  hwext_jet_free(jet);
}

TEST(CApi, ErrorsAreReported) {
  hwext_jet* jet = nullptr;
  EXPECT_EQ(hwext_jet_from_json("{", &jet), HWEXT_E_PARSE);
  EXPECT_EQ(jet, nullptr);
  EXPECT_EQ(hwext_jet_from_file("/nonexistent/jet.json", &jet), HWEXT_E_IO);
  EXPECT_EQ(hwext_jet_from_json(nullptr, &jet), HWEXT_E_INVALID_ARGUMENT);
  hwext_jet_free(nullptr);
  hwext_extension_free(nullptr);
  hwext_string_free(nullptr);
}

TEST(CApi, CounterexampleAndLuzin) {
  char* csv = nullptr;
  ASSERT_EQ(hwext_counterexample_table(4, &csv), HWEXT_OK);
  const std::string table = take(csv);
  EXPECT_NE(table.find("\n3,"), std::string::npos);

  hwext_jet* jet = nullptr;
  ASSERT_EQ(hwext_counterexample_jet(6, &jet), HWEXT_OK);
  hwext_extend_options opt;
  hwext_extend_options_default(&opt);
  hwext_extension* ext = nullptr;
  EXPECT_EQ(hwext_extend(jet, &opt, &ext), HWEXT_E_VALIDATION_REJECTED);
  EXPECT_NE(std::string(hwext_last_error()).find("area"), std::string::npos);
  hwext_jet_free(jet);

  const char* corner = R"({"n":1,"interval":[-1,1],"knots":[0],
    "pieces":[{"gamma":[[[0,1],[0,-1]]]},{"gamma":[[[0,1],[0,1]]]}]})";
  int passed = 0;
  char* result = nullptr;
  ASSERT_EQ(hwext_luzin(corner, 0.2, 512, 200, &passed, &result, &ext), HWEXT_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_NE(take(result).find("\"measureRemoved\""), std::string::npos);
  hwext_extension_free(ext);
  EXPECT_EQ(hwext_luzin(corner, 1e-5, 16, 0, &passed, &result, &ext), HWEXT_E_MEASURE_BUDGET);
}
