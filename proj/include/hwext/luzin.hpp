#pragma once

// Approximation of a piecewise-polynomial horizontal curve by a C^1 horizontal curve that
// agrees with it (values and derivatives) off a set of small measure.

#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "hwext/extension.hpp"
#include "hwext/whitney.hpp"

namespace hwext {

/// Continuous piecewise-polynomial curve on `domain`; piece k lives on
/// [knot_{k-1}, knot_k] with the domain ends as outer knots. Polynomials use the absolute
/// parameter. Derivatives may jump at knots.
class PiecewiseCurve {
 public:
  /// Throws Error(InvalidJet) on misaligned pieces, unsorted knots, a value jump at a knot
  /// or a piece that is not horizontal.
  PiecewiseCurve(int n, Interval domain, std::vector<double> knots, std::vector<JetPiece> pieces);

  /// Pieces without heights: h is lifted from h0 at domain.lo and carried across knots.
  static PiecewiseCurve lifted(int n, Interval domain, std::vector<double> knots,
                               std::vector<std::vector<PolyPair>> planar, double h0);

  int n() const { return n_; }
  const Interval& domain() const { return domain_; }
  const std::vector<double>& knots() const { return knots_; }
  const std::vector<JetPiece>& pieces() const { return pieces_; }
  Interval piece_domain(std::size_t k) const;

  /// Piece containing s; at a knot the left piece unless `prefer_right`.
  std::size_t piece_at(double s, bool prefer_right = false) const;
  std::vector<double> value(double s, std::size_t piece) const;
  std::vector<double> derivative(double s, std::size_t piece) const;
  std::vector<double> value(double s) const { return value(s, piece_at(s)); }

  /// True when both one-sided derivatives agree at knot k (to 1e-12 relative).
  bool c1_at_knot(std::size_t k) const;

 private:
  int n_;
  Interval domain_;
  std::vector<double> knots_;
  std::vector<JetPiece> pieces_;
};

PiecewiseCurve parse_piecewise_curve(std::string_view text);

struct LuzinOptions {
  int cells = 512;
  int envelope_samples = 2000;
};

struct CellProfile {
  Interval cell;
  std::size_t piece = 0;
  /// Smallest level from which the cell stays good; kNever when it is bad at the finest level.
  int level = 0;
  std::vector<double> psi;  // per level, max Whitney quotient over the cell samples
  std::vector<double> phi;  // per level, max area quotient over the cell samples

  static constexpr int kNever = std::numeric_limits<int>::max();
};

struct LuzinResult {
  double eps = 0.0;
  CompactSet e;
  double measure_removed = 0.0;  // upward-rounded
  int selected_level = 0;
  double lambda = 0.0;           // threshold scale: tau_m = lambda 2^{-m}
  std::vector<double> windows;   // rho_m = 2^{-m}
  std::vector<CellProfile> cells;
  ValidationVerdict verdict;
  Tolerances tolerances;         // validation settings derived from the selected level
  ExtendedCurve extension;
  double agreement = 0.0;        // max |extension - curve| (values and derivatives) on sampled E
};

/// Selects E and extends the restricted jet. Error(MeasureBudget) when no level removes less
/// than eps at this cell resolution; Error(Internal) when the restricted jet fails validation.
LuzinResult approximate(const PiecewiseCurve& curve, double eps, const LuzinOptions& opt = {});

std::string luzin_json(const LuzinResult& r, const std::optional<VerificationReport>& report);

}  // namespace hwext
