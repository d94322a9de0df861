#include "hwext/heisenberg.hpp"

#include <algorithm>
#include <string>

#include "hwext/error.hpp"

namespace hwext {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Dimension: return "dimension mismatch";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::NonFinite: return "non-finite value";
    case ErrorCode::Quadrature: return "quadrature did not converge";
    case ErrorCode::InvalidJet: return "invalid jet";
    case ErrorCode::LemmaBound: return "gap bound violated";
    case ErrorCode::ValidationRejected: return "validation rejected";
    case ErrorCode::MeasureBudget: return "measure budget not achievable";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Internal: return "internal error";
  }
  return "unknown error";
}

HPoint::HPoint(std::vector<double> coords) : c_(std::move(coords)) {
  if (c_.size() < 3 || c_.size() % 2 == 0)
    throw Error(ErrorCode::Dimension,
                "HPoint needs 2n+1 coordinates with n >= 1, got " + std::to_string(c_.size()));
  if (!std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); }))
    throw Error(ErrorCode::NonFinite, "HPoint coordinates must be finite");
}

HPoint HPoint::origin(int n) {
  if (n < 1) throw Error(ErrorCode::Dimension, "origin needs n >= 1");
  return HPoint(std::vector<double>(2 * static_cast<std::size_t>(n) + 1, 0.0));
}

namespace {

void require_same_n(const HPoint& p, const HPoint& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::Dimension, "points live in H^" + std::to_string(p.n()) + " and H^" +
                                          std::to_string(q.n()));
}

}  // namespace

HPoint group_mul(const HPoint& p, const HPoint& q) {
  require_same_n(p, q);
  std::vector<double> r(p.size());
  double twist = 0.0;
  for (int j = 0; j < p.n(); ++j) {
    r[2 * j] = p.x(j) + q.x(j);
    r[2 * j + 1] = p.y(j) + q.y(j);
    twist += q.x(j) * p.y(j) - p.x(j) * q.y(j);
  }
  r.back() = p.t() + q.t() + 2.0 * twist;
  return HPoint(std::move(r));
}

HPoint group_inv(const HPoint& p) {
  std::vector<double> r(p.coords().begin(), p.coords().end());
  for (double& v : r) v = -v;
  return HPoint(std::move(r));
}

HPoint dilate(double r, const HPoint& p) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw Error(ErrorCode::Domain, "dilation factor must be positive, got " + std::to_string(r));
  std::vector<double> c(p.coords().begin(), p.coords().end());
  for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] *= r;
  c.back() *= r * r;
  return HPoint(std::move(c));
}

double contact_residual(const HPoint& value, std::span<const double> velocity) {
  if (velocity.size() != value.size())
    throw Error(ErrorCode::Dimension, "velocity has " + std::to_string(velocity.size()) +
                                          " entries, point has " + std::to_string(value.size()));
  double twist = 0.0;
  for (int j = 0; j < value.n(); ++j)
    twist += velocity[2 * j] * value.y(j) - value.x(j) * velocity[2 * j + 1];
  return velocity.back() - 2.0 * twist;
}

HPoint pansu_quotient(const HPoint& pa, const HPoint& pb, double step) {
  if (!(step > 0.0) || !std::isfinite(step))
    throw Error(ErrorCode::Domain, "Pansu quotient step must be positive");
  return dilate(1.0 / step, group_mul(group_inv(pa), pb));
}

void SampledCurve::check() const {
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] > grid[k - 1]))
      throw Error(ErrorCode::InvalidArgument, "sample grid must be strictly increasing");
  if (values.size() != grid.size())
    throw Error(ErrorCode::InvalidArgument, "sample values misaligned with grid");
  if (!derivs.empty() && derivs.size() != grid.size())
    throw Error(ErrorCode::InvalidArgument, "sample derivatives misaligned with grid");
}

}  // namespace hwext
