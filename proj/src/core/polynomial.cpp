#include "hwext/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace hwext {

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::derivative_at(double x) const {
  double acc = 0.0;
  for (std::size_t k = c_.size(); k-- > 1;) acc = acc * x + static_cast<double>(k) * c_[k];
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial({0.0});
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  std::vector<double> a(c_.size() + 1, 0.0);
  for (std::size_t k = 0; k < c_.size(); ++k) a[k + 1] = c_[k] / static_cast<double>(k + 1);
  return Polynomial(std::move(a));
}

int Polynomial::degree() const {
  for (std::size_t k = c_.size(); k-- > 0;)
    if (c_[k] != 0.0) return static_cast<int>(k);
  return -1;
}

bool Polynomial::is_finite() const {
  return std::all_of(c_.begin(), c_.end(), [](double v) { return std::isfinite(v); });
}

double Polynomial::max_coefficient_difference(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::max(a.c_.size(), b.c_.size());
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ak = k < a.c_.size() ? a.c_[k] : 0.0;
    const double bk = k < b.c_.size() ? b.c_[k] : 0.0;
    worst = std::max(worst, std::abs(ak - bk));
  }
  return worst;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<double> r(std::max(a.c_.size(), b.c_.size()), 0.0);
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return Polynomial({0.0});
  std::vector<double> r(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(double s, const Polynomial& p) {
  std::vector<double> r = p.c_;
  for (double& v : r) v *= s;
  return Polynomial(std::move(r));
}

}  // namespace hwext
