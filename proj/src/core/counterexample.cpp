#include "hwext/counterexample.hpp"

#include <algorithm>
#include <cmath>

#include "hwext/error.hpp"
#include "hwext/jet_io.hpp"

namespace hwext::counterexample {

double left_end(int k) { return 1.0 - std::ldexp(1.0, -k); }
double right_end(int k) { return 1.0 - 0.75 * std::ldexp(1.0, -k); }
double level_height(int k) { return 1.0 / std::pow(3.0, k); }

WhitneyJet build(int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "counterexample needs levels >= 1");
  std::vector<Interval> ivs;
  std::vector<JetPiece> pieces;
  auto piece = [](double h) {
    JetPiece p;
    p.gamma = {PolyPair{Polynomial::constant(0.0), Polynomial::constant(0.0)}};
    p.height = Polynomial::constant(h);
    p.has_prime = true;
    p.gamma_prime = {PolyPair{Polynomial::constant(0.0), Polynomial::constant(0.0)}};
    p.height_prime = Polynomial::constant(0.0);
    return p;
  };
  for (int k = 0; k < levels; ++k) {
    ivs.push_back({left_end(k), right_end(k)});
    pieces.push_back(piece(level_height(k)));
  }
  ivs.push_back({1.0, 1.0});
  pieces.push_back(piece(0.0));
  return WhitneyJet(1, CompactSet(std::move(ivs)), std::move(pieces));
}

double blowup_ratio(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "level index must be >= 0");
  const WhitneyJet jet = build(n + 2);
  const double a = right_end(n);
  const double b = left_end(n + 1);
  const double gap = b - a;
  return std::abs(jet.height(b) - jet.height(a)) / (gap * gap);
}

double blowup_closed_form(int n) { return 32.0 / 3.0 * std::pow(4.0 / 3.0, n); }

WhitneyBound whitney_bound(int index, int levels, int samples_per_interval) {
  if (index < 0) throw Error(ErrorCode::InvalidArgument, "level index must be >= 0");
  const WhitneyJet jet = build(std::max(levels, index + 2));
  WhitneyBound w;
  w.index = index;
  w.scale = std::ldexp(1.0, -(index + 2));
  w.measured = whitney_modulus(jet, w.scale, samples_per_interval);
  w.bound = 4.0 * std::pow(2.0 / 3.0, index);
  w.holds = w.measured <= w.bound;
  return w;
}

std::vector<TableRow> table(int levels) {
  if (levels < 1) throw Error(ErrorCode::InvalidArgument, "counterexample needs levels >= 1");
  std::vector<TableRow> rows;
  for (int n = 0; n < levels; ++n) {
    TableRow r;
    r.n = n;
    r.ratio = blowup_ratio(n);
    r.expected = blowup_closed_form(n);
    r.relative_error = std::abs(r.ratio - r.expected) / r.expected;
    r.whitney = whitney_bound(n, levels);
    rows.push_back(r);
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,gap,blowup_ratio,closed_form,relative_error,whitney_scale,whitney_measured,whitney_bound,whitney_holds\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + "," + format_double(std::ldexp(1.0, -(r.n + 2))) + "," +
           format_double(r.ratio) + "," + format_double(r.expected) + "," +
           format_double(r.relative_error) + "," + format_double(r.whitney.scale) + "," +
           format_double(r.whitney.measured) + "," + format_double(r.whitney.bound) + "," +
           (r.whitney.holds ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace hwext::counterexample
