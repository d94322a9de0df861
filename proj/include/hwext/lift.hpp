#pragma once

#include <vector>

#include "hwext/heisenberg.hpp"
#include "hwext/planar_piece.hpp"

namespace hwext {

/// 2 * integral of omega(gamma', gamma) over [lo, hi] within one piece: closed form for
/// polynomial pieces, adaptive quadrature (abs tol 1e-12) for arcs.
double piece_lift_integral(const PlanarPiece& piece, double lo, double hi);

/// Horizontal lift of n planar curves sharing one domain, with h(anchor) = h0.
class HorizontalLift {
 public:
  HorizontalLift() = default;
  /// Throws Error(Dimension) when planes is empty, Error(InvalidArgument) when domains differ
  /// or the anchor lies outside the domain.
  HorizontalLift(std::vector<PiecewisePlanar> planes, double anchor, double h0);

  int n() const { return static_cast<int>(planes_.size()); }
  Interval domain() const { return planes_.front().domain(); }
  const std::vector<PiecewisePlanar>& planes() const { return planes_; }
  double anchor() const { return anchor_; }
  double anchor_height() const { return h0_; }

  double height(double s) const;
  double height_derivative(double s) const;
  /// (x1, y1, ..., xn, yn, t) at s.
  std::vector<double> point(double s) const;
  std::vector<double> velocity(double s) const;

 private:
  double accumulated(double s) const;

  std::vector<PiecewisePlanar> planes_;
  std::vector<std::vector<double>> starts_;  // per plane, lift integral from domain.lo to each piece start
  double anchor_ = 0.0;
  double h0_ = 0.0;
  double anchor_accumulated_ = 0.0;
};

/// Lift anchored at the left end of the common domain, so h(lo) = h0 exactly.
HorizontalLift horizontal_lift(std::vector<PiecewisePlanar> planes, double h0);

}  // namespace hwext
