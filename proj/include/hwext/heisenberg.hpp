#pragma once

// Group law, dilations and the contact structure of the Heisenberg group H^n,
// with points stored as (x1, y1, ..., xn, yn, t).

#include <cmath>
#include <span>
#include <vector>

namespace hwext {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend PlanarPoint operator+(PlanarPoint a, PlanarPoint b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanarPoint operator-(PlanarPoint a, PlanarPoint b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanarPoint operator*(double s, PlanarPoint a) { return {s * a.x, s * a.y}; }
  friend bool operator==(PlanarPoint a, PlanarPoint b) = default;
};

inline double dot(PlanarPoint a, PlanarPoint b) { return a.x * b.x + a.y * b.y; }
inline double norm(PlanarPoint a) { return std::hypot(a.x, a.y); }

/// Standard symplectic form on R^2: u.x v.y - u.y v.x.
inline double symplectic(PlanarPoint u, PlanarPoint v) { return u.x * v.y - u.y * v.x; }

class HPoint {
 public:
  /// Throws Error(Dimension) unless coords.size() is 2n+1 with n >= 1, Error(NonFinite) on NaN/inf.
  explicit HPoint(std::vector<double> coords);

  static HPoint origin(int n);

  int n() const { return static_cast<int>(c_.size() / 2); }
  std::size_t size() const { return c_.size(); }
  double x(int j) const { return c_[2 * j]; }
  double y(int j) const { return c_[2 * j + 1]; }
  double t() const { return c_.back(); }
  PlanarPoint plane(int j) const { return {c_[2 * j], c_[2 * j + 1]}; }
  std::span<const double> coords() const { return c_; }
  double operator[](std::size_t k) const { return c_[k]; }

  friend bool operator==(const HPoint&, const HPoint&) = default;

 private:
  std::vector<double> c_;
};

HPoint group_mul(const HPoint& p, const HPoint& q);
HPoint group_inv(const HPoint& p);
/// Anisotropic dilation (r on horizontal coordinates, r^2 on t); r must be > 0.
HPoint dilate(double r, const HPoint& p);

/// h' - 2 sum_j (f_j' g_j - f_j g_j'); zero iff `velocity` is horizontal at `value`.
double contact_residual(const HPoint& value, std::span<const double> velocity);

/// dilate(1/step, pa^{-1} * pb).
HPoint pansu_quotient(const HPoint& pa, const HPoint& pb, double step);

/// Parameter grid with values (and optionally derivatives) in R^{2n+1}.
struct SampledCurve {
  std::vector<double> grid;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<double>> derivs;

  /// Throws Error(InvalidArgument) when the grid is not strictly increasing or rows are misaligned.
  void check() const;
};

}  // namespace hwext
