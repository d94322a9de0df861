#include "hwext/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "hwext/error.hpp"

namespace hwext {
namespace {

constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error, abs_value;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double absk = std::abs(kronrod);
  for (int k = 0; k < 7; ++k) {
    const double dx = h * kKronrodNodes[k];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    kronrod += kKronrodWeights[k] * (f1 + f2);
    absk += kKronrodWeights[k] * (std::abs(f1) + std::abs(f2));
    if (k % 2 == 1) gauss += kGaussWeights[k / 2] * (f1 + f2);
  }
  return {a, b, kronrod * h, std::abs((kronrod - gauss) * h), absk * std::abs(h)};
}

struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule make_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussLegendreRule& rule_for(int order) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, make_rule(order)).first;
  return it->second;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_intervals) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorCode::NonFinite, "integration limits must be finite");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Panel> heap;
  Panel first = gk15(f, a, b);
  double total = first.value;
  double error = first.error;
  double total_abs = first.abs_value;
  heap.push(first);
  int count = 1;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  while (error > std::max(abs_tol, 50.0 * kEps * total_abs)) {
    if (!std::isfinite(total))
      throw Error(ErrorCode::NonFinite, "integrand produced a non-finite value");
    if (count >= max_intervals) {
      std::ostringstream msg;
      msg << "adaptive quadrature stopped after " << count << " panels with error estimate "
          << error << " (target " << abs_tol << ")";
      throw Error(ErrorCode::Quadrature, msg.str());
    }
    Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    total_abs += left.abs_value + right.abs_value - worst.abs_value;
    heap.push(left);
    heap.push(right);
    ++count;
  }

  // Re-sum from the panels to shed the drift of the incremental updates.
  double value = 0.0, err = 0.0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  if (!std::isfinite(value)) throw Error(ErrorCode::NonFinite, "integral is not finite");
  return {value, err, count};
}

double integrate_gauss_legendre(const std::function<double(double)>& f, double a, double b,
                                int panels, int order) {
  if (panels < 1 || order < 2)
    throw Error(ErrorCode::InvalidArgument, "Gauss-Legendre needs panels >= 1 and order >= 2");
  const GaussLegendreRule& rule = rule_for(order);
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double hi = (p + 1 == panels) ? b : lo + width;
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double panel = 0.0;
    for (int i = 0; i < order; ++i) panel += rule.weights[i] * f(c + h * rule.nodes[i]);
    sum += panel * h;
  }
  return sum;
}

}  // namespace hwext
