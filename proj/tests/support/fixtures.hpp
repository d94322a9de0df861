#pragma once

#include <random>
#include <vector>

#include "hwext/whitney.hpp"

namespace hwext::fixtures {

/// Global curve with polynomial planar components and its exact horizontal lift.
struct GlobalCurve {
  int n = 1;
  std::vector<PolyPair> planar;
  Polynomial height;

  std::vector<double> value(double s) const {
    std::vector<double> out;
    for (const auto& g : planar) {
      out.push_back(g.x(s));
      out.push_back(g.y(s));
    }
    out.push_back(height(s));
    return out;
  }

  std::vector<double> derivative(double s) const {
    std::vector<double> out;
    for (const auto& g : planar) {
      out.push_back(g.x.derivative_at(s));
      out.push_back(g.y.derivative_at(s));
    }
    out.push_back(height.derivative_at(s));
    return out;
  }
};

inline Polynomial lift_height(const std::vector<PolyPair>& planar, double h0, double s0) {
  Polynomial integrand;
  for (const auto& g : planar)
    integrand = integrand + 2.0 * (g.x.derivative() * g.y - g.x * g.y.derivative());
  const Polynomial anti = integrand.antiderivative();
  return anti + Polynomial::constant(h0 - anti(s0));
}

inline Polynomial random_poly(std::mt19937_64& rng, int degree, double range) {
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<double> c(degree + 1);
  for (double& v : c) v = u(rng);
  return Polynomial(std::move(c));
}

inline GlobalCurve random_curve(std::mt19937_64& rng, int n, int degree, double range) {
  GlobalCurve c;
  c.n = n;
  for (int j = 0; j < n; ++j) c.planar.push_back({random_poly(rng, degree, range), random_poly(rng, degree, range)});
  std::uniform_real_distribution<double> u(-range, range);
  c.height = lift_height(c.planar, u(rng), 0.0);
  return c;
}

/// Jet obtained by restricting the curve; isolated points carry the exact derivative.
inline WhitneyJet restrict_to(const GlobalCurve& c, const std::vector<Interval>& intervals) {
  std::vector<JetPiece> pieces;
  for (const auto& iv : intervals) {
    JetPiece p;
    p.gamma = c.planar;
    p.height = c.height;
    if (iv.length() == 0.0) {
      p.has_prime = true;
      const auto d = c.derivative(iv.lo);
      for (int j = 0; j < c.n; ++j)
        p.gamma_prime.push_back({Polynomial::constant(d[2 * j]), Polynomial::constant(d[2 * j + 1])});
      p.height_prime = Polynomial::constant(d.back());
    }
    pieces.push_back(std::move(p));
  }
  return WhitneyJet(c.n, CompactSet(intervals), std::move(pieces));
}

/// `count` disjoint intervals in [lo, hi], one per equal slot, gaps at least `min_gap`.
inline std::vector<Interval> random_intervals(std::mt19937_64& rng, int count, double lo, double hi,
                                              double min_gap) {
  const double slot = (hi - lo) / count;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Interval> out;
  for (int k = 0; k < count; ++k) {
    const double s0 = lo + slot * k;
    const double left = k == 0 ? 0.0 : min_gap / 2 + u(rng) * 0.15 * slot;
    const double right = k == count - 1 ? 0.0 : min_gap / 2 + u(rng) * 0.15 * slot;
    out.push_back({s0 + left, s0 + slot - right});
  }
  return out;
}

}  // namespace hwext::fixtures
