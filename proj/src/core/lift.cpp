#include "hwext/lift.hpp"

#include <cmath>

#include "hwext/error.hpp"
#include "hwext/quadrature.hpp"

namespace hwext {

double piece_lift_integral(const PlanarPiece& piece, double lo, double hi) {
  if (lo == hi) return 0.0;
  if (piece.kind() == PlanarPiece::Kind::Polynomial) return piece.signed_area(lo, hi);
  return integrate_adaptive([&piece](double s) { return piece.area_integrand(s); }, lo, hi, 1e-12)
      .value;
}

HorizontalLift::HorizontalLift(std::vector<PiecewisePlanar> planes, double anchor, double h0)
    : planes_(std::move(planes)), anchor_(anchor), h0_(h0) {
  if (planes_.empty()) throw Error(ErrorCode::Dimension, "lift needs at least one plane");
  if (!std::isfinite(anchor) || !std::isfinite(h0))
    throw Error(ErrorCode::NonFinite, "lift anchor and starting height must be finite");
  const Interval d = planes_.front().domain();
  for (const auto& plane : planes_) {
    if (!(plane.domain() == d))
      throw Error(ErrorCode::InvalidArgument, "all planes of a lift must share one domain");
  }
  if (!d.contains(anchor)) throw Error(ErrorCode::InvalidArgument, "lift anchor outside domain");
  starts_.reserve(planes_.size());
  for (const auto& plane : planes_) {
    std::vector<double> starts;
    double acc = 0.0;
    for (const auto& piece : plane.pieces()) {
      starts.push_back(acc);
      acc += piece_lift_integral(piece, piece.domain().lo, piece.domain().hi);
    }
    if (!std::isfinite(acc)) throw Error(ErrorCode::NonFinite, "lift integral is not finite");
    starts_.push_back(std::move(starts));
  }
  anchor_accumulated_ = accumulated(anchor_);
}

double HorizontalLift::accumulated(double s) const {
  double total = 0.0;
  for (std::size_t j = 0; j < planes_.size(); ++j) {
    const std::size_t k = planes_[j].locate(s);
    const PlanarPiece& piece = planes_[j].pieces()[k];
    total += starts_[j][k] + piece_lift_integral(piece, piece.domain().lo, s);
  }
  return total;
}

double HorizontalLift::height(double s) const {
  if (s == anchor_) return h0_;
  return h0_ + (accumulated(s) - anchor_accumulated_);
}

double HorizontalLift::height_derivative(double s) const {
  double total = 0.0;
  for (const auto& plane : planes_) total += plane.area_integrand(s);
  return total;
}

std::vector<double> HorizontalLift::point(double s) const {
  std::vector<double> out;
  out.reserve(2 * planes_.size() + 1);
  for (const auto& plane : planes_) {
    const PlanarPoint p = plane.value(s);
    out.push_back(p.x);
    out.push_back(p.y);
  }
  out.push_back(height(s));
  return out;
}

std::vector<double> HorizontalLift::velocity(double s) const {
  std::vector<double> out;
  out.reserve(2 * planes_.size() + 1);
  for (const auto& plane : planes_) {
    const PlanarPoint p = plane.derivative(s);
    out.push_back(p.x);
    out.push_back(p.y);
  }
  out.push_back(height_derivative(s));
  return out;
}

HorizontalLift horizontal_lift(std::vector<PiecewisePlanar> planes, double h0) {
  if (planes.empty()) throw Error(ErrorCode::Dimension, "lift needs at least one plane");
  const double lo = planes.front().domain().lo;
  return HorizontalLift(std::move(planes), lo, h0);
}

}  // namespace hwext
