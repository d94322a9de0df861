#include "hwext/gap_filler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hwext/error.hpp"

namespace hwext {
namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void bound_violation(const char* name, double value, double eps) {
  std::ostringstream msg;
  msg << "lemma bound " << name << " violated: " << value << " >= eps = " << eps;
  throw Error(ErrorCode::LemmaBound, msg.str());
}

}  // namespace

GapFrame gap_frame(PlanarPoint pA, PlanarPoint pB) {
  GapFrame f;
  f.shift = pA;
  const PlanarPoint d = pB - pA;
  f.ell = norm(d);
  if (f.ell == 0.0) return f;
  f.degenerate = false;
  f.u = (1.0 / f.ell) * d;
  f.v = {-f.u.y, f.u.x};
  f.rot = {f.u.x, -f.u.y, f.u.y, f.u.x};
  return f;
}

double default_c_prime(double big_m) {
  return std::max({6.0 * big_m + 5.0, 12.0, 2.0 * big_m + 2.0,
                   2.0 * std::sqrt(46656.0 * kPi), 300.0});
}

double envelope_bound(double c_prime, double eps) {
  return c_prime * (std::sqrt(eps) + eps * eps);
}

void check_lemma_bounds(const LemmaParams& p) {
  const double e = p.eps;
  if (!(e > 0.0)) throw Error(ErrorCode::LemmaBound, "lemma needs eps > 0");
  if (!(p.delta > 0.0)) throw Error(ErrorCode::LemmaBound, "lemma needs delta > 0");
  if (!(p.delta < e)) bound_violation("delta < eps", p.delta, e);
  if (!(p.ell < e)) bound_violation("ell < eps", p.ell, e);
  const double lam = std::abs(p.lambda) / (p.delta * p.delta);
  if (!(lam < e)) bound_violation("|lambda|/delta^2 < eps", lam, e);
  const double slope = p.ell / p.delta;
  if (!(std::abs(p.alpha - slope) < e)) bound_violation("|alpha - ell/delta| < eps", std::abs(p.alpha - slope), e);
  if (!(std::abs(p.beta - slope) < e)) bound_violation("|beta - ell/delta| < eps", std::abs(p.beta - slope), e);
  if (!(std::abs(p.mu) < e)) bound_violation("|mu| < eps", std::abs(p.mu), e);
  if (!(std::abs(p.nu) < e)) bound_violation("|nu| < eps", std::abs(p.nu), e);
}

LemmaParams lemma_params(const WhitneyJet& jet, const Gap& gap, int j, double c_prime,
                         double big_m) {
  if (j < 0 || j >= jet.n()) throw Error(ErrorCode::Dimension, "plane index out of range");
  const PlanarPoint pa = jet.planar(gap.a, j);
  const PlanarPoint pb = jet.planar(gap.b, j);
  const PlanarPoint da = jet.planar_derivative(gap.a, j);
  const PlanarPoint db = jet.planar_derivative(gap.b, j);
  const GapFrame f = gap_frame(pa, pb);

  double cross = 0.0;
  for (int m = 0; m < jet.n(); ++m) {
    const PlanarPoint qa = jet.planar(gap.a, m);
    const PlanarPoint qb = jet.planar(gap.b, m);
    cross += qb.x * qa.y - qa.x * qb.y;
  }
  LemmaParams p;
  p.delta = gap.b - gap.a;
  p.ell = f.ell;
  p.alpha = dot(da, f.u);
  p.beta = dot(db, f.u);
  p.mu = dot(da, f.v);
  p.nu = dot(db, f.v);
  p.lambda = (jet.height(gap.b) - jet.height(gap.a) - 2.0 * cross) / jet.n();
  p.eps = gap.epsilon;
  p.big_m = big_m;
  p.c_prime = c_prime;
  try {
    check_lemma_bounds(p);
  } catch (const Error& e) {
    std::ostringstream msg;
    msg << "gap (" << gap.a << ", " << gap.b << "), plane " << j + 1 << ": " << e.what();
    throw Error(ErrorCode::LemmaBound, msg.str());
  }
  return p;
}

Branch branch_test(const LemmaParams& p) {
  return std::abs(p.alpha + p.beta - 9.0 * p.ell / p.delta) > std::sqrt(p.eps) ? Branch::Polynomial
                                                                              : Branch::Circle;
}

const char* to_string(Branch b) noexcept {
  return b == Branch::Polynomial ? "polynomial" : "circle";
}

PlanarPiece eta_polynomial(const LemmaParams& p) {
  const double d = p.delta, l = p.ell, a = p.alpha, b = p.beta, m = p.mu, v = p.nu, lam = p.lambda;
  const double den = d * (a + b) - 9.0 * l;
  if (!(std::abs(den) >= std::sqrt(p.eps) * d))
    throw Error(ErrorCode::Internal, "polynomial filler denominator too small for this branch");
  const double d2 = d * d, d3 = d2 * d, d4 = d3 * d;

  const double A = (d * (a + b) - 2.0 * l) / d3;
  const double B = (-d * (2.0 * a + b) + 3.0 * l) / d2;
  const double D = 7.0 * (6.0 * d * l * (m - v) + d2 * (a * v - b * m) - 15.0 * lam) / (2.0 * d4 * den);
  const double E =
      (d * l * (33.0 * v - 51.0 * m) + d2 * (a * (m - 6.0 * v) + b * (8.0 * m + v)) + 105.0 * lam) /
      (d3 * den);
  const double F = -(d * l * (24.0 * v - 78.0 * m) +
                     d2 * (4.0 * a * m + 11.0 * b * m - 5.0 * a * v + 2.0 * b * v) + 105.0 * lam) /
                   (2.0 * d2 * den);
  return PlanarPiece::polynomial({Polynomial({0.0, a, B, A}), Polynomial({0.0, m, F, E, D})},
                                 {0.0, d}, 0.0);
}

double circle_loop_area(const LemmaParams& p) {
  return p.lambda - p.delta * p.ell * (p.mu - p.nu) / 15.0;
}

std::vector<PlanarPiece> eta_circle(const LemmaParams& p) {
  const double d = p.delta, l = p.ell, a = p.alpha, b = p.beta, m = p.mu, v = p.nu;
  const double d2 = d * d, d3 = d2 * d;
  const double third = d / 3.0;
  const double two_thirds = 2.0 * d / 3.0;

  Polynomial left_x({0.0, a, (-12.0 * d * a + 27.0 * l) / (2.0 * d2), (9.0 * d * a - 27.0 * l) / d3});
  Polynomial left_y({0.0, m, -6.0 * m / d, 9.0 * m / d2});
  Polynomial right_x({-4.0 * d * b + 29.0 * l / 2.0, (16.0 * d * b - 54.0 * l) / d,
                      (-42.0 * d * b + 135.0 * l) / (2.0 * d2), (9.0 * d * b - 27.0 * l) / d3});
  Polynomial right_y({-4.0 * d * v, 16.0 * v, -21.0 * v / d, 9.0 * v / d2});

  const double H = circle_loop_area(p);
  Arc arc;
  arc.radius = std::sqrt(std::abs(H)) / (2.0 * std::sqrt(kPi));
  arc.center = {-arc.radius + l / 2.0, 0.0};
  arc.sign = H <= 0.0 ? 1 : -1;
  const double s = arc.sign;
  arc.tau = Polynomial({s * 10.0 * kPi, s * -72.0 * kPi / d, s * 162.0 * kPi / d2, s * -108.0 * kPi / d3});

  std::vector<PlanarPiece> out;
  out.push_back(PlanarPiece::polynomial({std::move(left_x), std::move(left_y)}, {0.0, third}, 0.0));
  out.push_back(PlanarPiece::arc(std::move(arc), {third, two_thirds}, 0.0));
  out.push_back(PlanarPiece::polynomial({std::move(right_x), std::move(right_y)}, {two_thirds, d}, 0.0));
  return out;
}

std::vector<PlanarPiece> build_eta(const LemmaParams& p) {
  if (!(p.delta > 0.0) || !(p.eps > 0.0))
    throw Error(ErrorCode::LemmaBound, "filler needs delta > 0 and eps > 0");
  if (branch_test(p) == Branch::Polynomial) return {eta_polynomial(p)};
  return eta_circle(p);
}

EnvelopeReport envelope_check(const std::vector<PlanarPiece>& pieces, const LemmaParams& p,
                              int samples) {
  EnvelopeReport r;
  r.c_prime = p.c_prime;
  r.bound = envelope_bound(p.c_prime, p.eps);
  r.samples = samples;
  const PiecewisePlanar curve(pieces);
  const Interval dom = curve.domain();
  const PlanarPoint start_velocity{p.alpha, p.mu};
  for (int k = 0; k < samples; ++k) {
    const double s = k == samples - 1 ? dom.hi : dom.lo + dom.length() * k / (samples - 1);
    r.sup_value = std::max(r.sup_value, norm(curve.value(s)));
    r.sup_derivative_deviation =
        std::max(r.sup_derivative_deviation, norm(curve.derivative(s) - start_velocity));
  }
  r.value_ok = r.sup_value < r.bound;
  r.derivative_ok = r.sup_derivative_deviation < r.bound;
  return r;
}

std::vector<PlanarPiece> relocate(const std::vector<PlanarPiece>& pieces, const GapFrame& frame,
                                  double gap_start, double gap_end) {
  std::vector<PlanarPiece> out;
  out.reserve(pieces.size());
  for (const auto& piece : pieces) out.push_back(piece.relocated(frame.rot, frame.shift, gap_start));
  if (!out.empty()) {
    Interval first = out.front().domain();
    first.lo = gap_start;
    out.front() = out.front().with_domain(first);
    Interval last = out.back().domain();
    last.hi = gap_end;
    out.back() = out.back().with_domain(last);
  }
  return out;
}

std::vector<PlanarPiece> relocate(const std::vector<PlanarPiece>& pieces, const GapFrame& frame,
                                  double gap_start) {
  if (pieces.empty()) return {};
  return relocate(pieces, frame, gap_start, pieces.back().domain().hi + gap_start);
}

}  // namespace hwext
