#pragma once

#include <span>
#include <vector>

namespace hwext {

/// Real polynomial with coefficients in ascending degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

  static Polynomial constant(double c) { return Polynomial({c}); }

  double operator()(double x) const;
  double derivative_at(double x) const;

  Polynomial derivative() const;
  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const;

  /// Highest index with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  bool is_finite() const;
  std::span<const double> coefficients() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Largest coefficient-wise absolute difference (missing entries count as 0).
  static double max_coefficient_difference(const Polynomial& a, const Polynomial& b);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double s, const Polynomial& p);

 private:
  std::vector<double> c_;
};

}  // namespace hwext
