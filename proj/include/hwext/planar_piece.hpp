#pragma once

// Exact planar curve pieces (polynomial pairs and cubic-reparametrized circle
// arcs) used to fill gaps and to describe tails.

#include <vector>

#include "hwext/heisenberg.hpp"
#include "hwext/polynomial.hpp"

namespace hwext {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double s) const { return lo <= s && s <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Rotation matrix [[m00, m01], [m10, m11]].
struct Rot2 {
  double m00 = 1.0, m01 = 0.0, m10 = 0.0, m11 = 1.0;

  PlanarPoint apply(PlanarPoint p) const { return {m00 * p.x + m01 * p.y, m10 * p.x + m11 * p.y}; }
  double det() const { return m00 * m11 - m01 * m10; }
  /// Rotation angle in (-pi, pi].
  double angle() const;
};

struct PolyPair {
  Polynomial x;
  Polynomial y;
};

/// x = R cos(tau) + center.x, y = R sin(tau) + center.y. `sign` records the
/// orientation of the loop; it is already folded into tau.
struct Arc {
  double radius = 0.0;
  PlanarPoint center;
  Polynomial tau;
  int sign = 1;
};

/// A planar piece on `domain`; coefficients are in the local variable u = s - origin.
class PlanarPiece {
 public:
  enum class Kind { Polynomial, Arc };

  static PlanarPiece polynomial(PolyPair p, Interval domain, double origin);
  static PlanarPiece arc(Arc a, Interval domain, double origin);

  Kind kind() const { return kind_; }
  const Interval& domain() const { return domain_; }
  double origin() const { return origin_; }
  const PolyPair& poly() const;
  const Arc& arc_data() const;

  PlanarPoint value(double s) const;
  PlanarPoint derivative(double s) const;

  /// Lift integrand 2 omega(gamma', gamma) at s.
  double area_integrand(double s) const;
  /// 2 * integral over [lo, hi] of (x' y - x y'), closed form for both kinds.
  double signed_area(double lo, double hi) const;

  /// Applies p -> rot p + shift and moves the domain by `parameter_shift`.
  PlanarPiece relocated(const Rot2& rot, PlanarPoint shift, double parameter_shift) const;
  /// Same curve with a replaced domain (used to snap endpoints to exact gap ends).
  PlanarPiece with_domain(Interval domain) const;

 private:
  Kind kind_ = Kind::Polynomial;
  Interval domain_;
  double origin_ = 0.0;
  PolyPair poly_;
  Arc arc_;
  Polynomial area_antiderivative_;
};

/// Chain of pieces tiling an interval with C^1 intent; lookup picks the piece
/// containing s (the left piece at shared endpoints).
class PiecewisePlanar {
 public:
  PiecewisePlanar() = default;
  /// Throws Error(InvalidArgument) when pieces are empty or do not tile contiguously.
  explicit PiecewisePlanar(std::vector<PlanarPiece> pieces);

  Interval domain() const { return {pieces_.front().domain().lo, pieces_.back().domain().hi}; }
  const std::vector<PlanarPiece>& pieces() const { return pieces_; }
  std::size_t locate(double s) const;

  PlanarPoint value(double s) const { return pieces_[locate(s)].value(s); }
  PlanarPoint derivative(double s) const { return pieces_[locate(s)].derivative(s); }
  double area_integrand(double s) const { return pieces_[locate(s)].area_integrand(s); }

 private:
  std::vector<PlanarPiece> pieces_;
};

}  // namespace hwext
