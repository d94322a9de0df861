#pragma once

// The Cantor-like jet that is Whitney C^1 but violates the area condition.

#include <string>
#include <vector>

#include "hwext/whitney.hpp"

namespace hwext::counterexample {

/// Left end c_k = 1 - 2^{-k} and right end d_k = 1 - (3/4) 2^{-k} of the k-th interval.
double left_end(int k);
double right_end(int k);
/// 3^{-k}, the height carried on the k-th interval.
double level_height(int k);

/// K = [c_0, d_0] u ... u [c_{levels-1}, d_{levels-1}] u {1} in H^1 with Gamma = (0, 0, 3^{-k})
/// on the k-th interval, Gamma(1) = 0 and Gamma' = 0. Error(InvalidArgument) unless levels >= 1.
WhitneyJet build(int levels);

/// |h(c_{n+1}) - h(d_n)| / (c_{n+1} - d_n)^2 measured on build(n + 2).
double blowup_ratio(int n);
/// (32/3) (4/3)^n.
double blowup_closed_form(int n);

struct WhitneyBound {
  int index = 0;
  double scale = 0.0;     // 2^{-(index+2)}
  double measured = 0.0;  // whitney_modulus at that scale
  double bound = 0.0;     // 4 (2/3)^index
  bool holds = false;
};

/// Measured Whitney modulus of build(levels) at scale 2^{-(index+2)}; levels is raised to
/// index + 2 when smaller. Endpoint pairs realize the sup, so 2 samples per interval suffice.
WhitneyBound whitney_bound(int index, int levels = 0, int samples_per_interval = 2);

struct TableRow {
  int n = 0;
  double ratio = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;
  WhitneyBound whitney;
};

/// Rows n = 0 .. levels-1.
std::vector<TableRow> table(int levels);
std::string table_csv(const std::vector<TableRow>& rows);

}  // namespace hwext::counterexample
