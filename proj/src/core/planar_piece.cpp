#include "hwext/planar_piece.hpp"

#include <cmath>

#include "hwext/error.hpp"

namespace hwext {

double Rot2::angle() const { return std::atan2(m10, m00); }

PlanarPiece PlanarPiece::polynomial(PolyPair p, Interval domain, double origin) {
  if (!p.x.is_finite() || !p.y.is_finite() || !std::isfinite(origin))
    throw Error(ErrorCode::NonFinite, "polynomial piece has non-finite coefficients");
  if (!(domain.lo <= domain.hi))
    throw Error(ErrorCode::InvalidArgument, "piece domain must satisfy lo <= hi");
  PlanarPiece piece;
  piece.kind_ = Kind::Polynomial;
  piece.domain_ = domain;
  piece.origin_ = origin;
  piece.poly_ = std::move(p);
  const Polynomial integrand =
      2.0 * (piece.poly_.x.derivative() * piece.poly_.y - piece.poly_.x * piece.poly_.y.derivative());
  piece.area_antiderivative_ = integrand.antiderivative();
  return piece;
}

PlanarPiece PlanarPiece::arc(Arc a, Interval domain, double origin) {
  if (!std::isfinite(a.radius) || a.radius < 0.0 || !a.tau.is_finite() ||
      !std::isfinite(a.center.x) || !std::isfinite(a.center.y))
    throw Error(ErrorCode::NonFinite, "arc piece has invalid radius, center or phase");
  if (!(domain.lo <= domain.hi))
    throw Error(ErrorCode::InvalidArgument, "piece domain must satisfy lo <= hi");
  PlanarPiece piece;
  piece.kind_ = Kind::Arc;
  piece.domain_ = domain;
  piece.origin_ = origin;
  piece.arc_ = std::move(a);
  return piece;
}

const PolyPair& PlanarPiece::poly() const {
  if (kind_ != Kind::Polynomial) throw Error(ErrorCode::InvalidArgument, "piece is not polynomial");
  return poly_;
}

const Arc& PlanarPiece::arc_data() const {
  if (kind_ != Kind::Arc) throw Error(ErrorCode::InvalidArgument, "piece is not an arc");
  return arc_;
}

PlanarPoint PlanarPiece::value(double s) const {
  const double u = s - origin_;
  if (kind_ == Kind::Polynomial) return {poly_.x(u), poly_.y(u)};
  const double tau = arc_.tau(u);
  return {arc_.radius * std::cos(tau) + arc_.center.x, arc_.radius * std::sin(tau) + arc_.center.y};
}

PlanarPoint PlanarPiece::derivative(double s) const {
  const double u = s - origin_;
  if (kind_ == Kind::Polynomial) return {poly_.x.derivative_at(u), poly_.y.derivative_at(u)};
  const double tau = arc_.tau(u);
  const double speed = arc_.radius * arc_.tau.derivative_at(u);
  return {-speed * std::sin(tau), speed * std::cos(tau)};
}

double PlanarPiece::area_integrand(double s) const {
  return 2.0 * symplectic(derivative(s), value(s));
}

double PlanarPiece::signed_area(double lo, double hi) const {
  const double u0 = lo - origin_;
  const double u1 = hi - origin_;
  if (kind_ == Kind::Polynomial) return area_antiderivative_(u1) - area_antiderivative_(u0);
  const double t0 = arc_.tau(u0);
  const double t1 = arc_.tau(u1);
  const double r = arc_.radius;
  return 2.0 * (-r * r * (t1 - t0) + r * arc_.center.y * (std::cos(t1) - std::cos(t0)) -
                r * arc_.center.x * (std::sin(t1) - std::sin(t0)));
}

PlanarPiece PlanarPiece::relocated(const Rot2& rot, PlanarPoint shift, double parameter_shift) const {
  const Interval domain{domain_.lo + parameter_shift, domain_.hi + parameter_shift};
  const double origin = origin_ + parameter_shift;
  if (kind_ == Kind::Polynomial) {
    Polynomial x = rot.m00 * poly_.x + rot.m01 * poly_.y + Polynomial::constant(shift.x);
    Polynomial y = rot.m10 * poly_.x + rot.m11 * poly_.y + Polynomial::constant(shift.y);
    return polynomial({std::move(x), std::move(y)}, domain, origin);
  }
  Arc a = arc_;
  a.center = rot.apply(arc_.center) + shift;
  a.tau = arc_.tau + Polynomial::constant(rot.angle());
  return arc(std::move(a), domain, origin);
}

PlanarPiece PlanarPiece::with_domain(Interval domain) const {
  if (!(domain.lo <= domain.hi))
    throw Error(ErrorCode::InvalidArgument, "piece domain must satisfy lo <= hi");
  PlanarPiece copy = *this;
  copy.domain_ = domain;
  return copy;
}

PiecewisePlanar::PiecewisePlanar(std::vector<PlanarPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error(ErrorCode::InvalidArgument, "piecewise curve needs a piece");
  for (std::size_t k = 1; k < pieces_.size(); ++k) {
    if (pieces_[k].domain().lo != pieces_[k - 1].domain().hi)
      throw Error(ErrorCode::InvalidArgument, "piece domains must be contiguous");
  }
}

std::size_t PiecewisePlanar::locate(double s) const {
  for (std::size_t k = 0; k + 1 < pieces_.size(); ++k) {
    if (s <= pieces_[k].domain().hi) return k;
  }
  return pieces_.size() - 1;
}

}  // namespace hwext
