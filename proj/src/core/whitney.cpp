#include "hwext/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hwext/error.hpp"

namespace hwext {
namespace {

double consistency_scale(const Polynomial& p) {
  double m = 1.0;
  for (double c : p.coefficients()) m = std::max(m, std::abs(c));
  return m;
}

void check_consistent(const Polynomial& given, const Polynomial& exact, const char* what,
                      std::size_t piece) {
  const double diff = Polynomial::max_coefficient_difference(given, exact);
  if (diff > 1e-9 * std::max(consistency_scale(given), consistency_scale(exact))) {
    std::ostringstream msg;
    msg << "piece " << piece << ": supplied " << what
        << " disagrees with the derivative of the values (coefficient gap " << diff << ")";
    throw Error(ErrorCode::InvalidJet, msg.str());
  }
}

double norm_of(const std::vector<double>& v, std::size_t begin, std::size_t end) {
  double s = 0.0;
  for (std::size_t k = begin; k < end; ++k) s += v[k] * v[k];
  return std::sqrt(s);
}

struct Sample {
  double s;
  std::vector<double> value;
  std::vector<double> deriv;
};

std::vector<Sample> samples_of(const WhitneyJet& jet, int samples_per_interval) {
  std::vector<Sample> out;
  for (double s : sample_points(jet, samples_per_interval))
    out.push_back({s, jet.value(s), jet.derivative(s)});
  return out;
}

double area_term(const std::vector<double>& pa, const std::vector<double>& pb, int n) {
  double sum = 0.0;
  for (int j = 0; j < n; ++j) sum += pb[2 * j] * pa[2 * j + 1] - pa[2 * j] * pb[2 * j + 1];
  return pb.back() - pa.back() - 2.0 * sum;
}

}  // namespace

CompactSet::CompactSet(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
  if (intervals_.empty()) throw Error(ErrorCode::InvalidArgument, "compact set must be nonempty");
  for (std::size_t k = 0; k < intervals_.size(); ++k) {
    const Interval& iv = intervals_[k];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw Error(ErrorCode::NonFinite, "interval endpoints must be finite");
    if (iv.lo > iv.hi) throw Error(ErrorCode::InvalidArgument, "interval with lo > hi");
    if (k > 0 && !(intervals_[k - 1].hi < iv.lo))
      throw Error(ErrorCode::InvalidArgument, "intervals must be sorted and pairwise disjoint");
  }
}

double CompactSet::measure() const {
  double m = 0.0;
  for (const auto& iv : intervals_) m += iv.length();
  return m;
}

int CompactSet::find(double s) const {
  auto it = std::upper_bound(intervals_.begin(), intervals_.end(), s,
                             [](double v, const Interval& iv) { return v < iv.lo; });
  if (it == intervals_.begin()) return -1;
  --it;
  return it->hi >= s ? static_cast<int>(it - intervals_.begin()) : -1;
}

WhitneyJet::WhitneyJet(int n, CompactSet set, std::vector<JetPiece> pieces, int degree_cap)
    : n_(n), set_(std::move(set)), pieces_(std::move(pieces)), degree_cap_(degree_cap) {
  if (n_ < 1) throw Error(ErrorCode::Dimension, "jet needs n >= 1");
  if (pieces_.size() != set_.intervals().size())
    throw Error(ErrorCode::InvalidJet, "one jet piece is required per interval");
  derived_.reserve(pieces_.size());
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const JetPiece& p = pieces_[k];
    const bool degenerate = set_.intervals()[k].length() == 0.0;
    if (p.gamma.size() != static_cast<std::size_t>(n_))
      throw Error(ErrorCode::InvalidJet, "piece " + std::to_string(k) + ": gamma needs n planes");
    auto check_poly = [&](const Polynomial& q) {
      if (!q.is_finite())
        throw Error(ErrorCode::NonFinite, "piece " + std::to_string(k) + ": non-finite coefficient");
      if (q.degree() > degree_cap_)
        throw Error(ErrorCode::InvalidJet, "piece " + std::to_string(k) + ": degree above cap " +
                                               std::to_string(degree_cap_));
    };
    for (const auto& g : p.gamma) {
      check_poly(g.x);
      check_poly(g.y);
    }
    check_poly(p.height);

    JetPiece d;
    d.has_prime = true;
    if (p.has_prime) {
      if (p.gamma_prime.size() != static_cast<std::size_t>(n_))
        throw Error(ErrorCode::InvalidJet,
                    "piece " + std::to_string(k) + ": gammaPrime needs n planes");
      for (const auto& g : p.gamma_prime) {
        check_poly(g.x);
        check_poly(g.y);
      }
      check_poly(p.height_prime);
    } else if (degenerate) {
      throw Error(ErrorCode::InvalidJet,
                  "piece " + std::to_string(k) + ": isolated point needs gammaPrime and heightPrime");
    }
    for (int j = 0; j < n_; ++j) {
      if (degenerate) {
        d.gamma_prime.push_back(p.gamma_prime[j]);
      } else {
        PolyPair exact{p.gamma[j].x.derivative(), p.gamma[j].y.derivative()};
        if (p.has_prime) {
          check_consistent(p.gamma_prime[j].x, exact.x, "gammaPrime", k);
          check_consistent(p.gamma_prime[j].y, exact.y, "gammaPrime", k);
        }
        d.gamma_prime.push_back(std::move(exact));
      }
    }
    if (degenerate) {
      d.height_prime = p.height_prime;
    } else {
      d.height_prime = p.height.derivative();
      if (p.has_prime) check_consistent(p.height_prime, d.height_prime, "heightPrime", k);
    }
    derived_.push_back(std::move(d));
  }
}

std::size_t WhitneyJet::piece_at(double s) const {
  const int k = set_.find(s);
  if (k < 0) {
    std::ostringstream msg;
    msg << "parameter " << s << " is not in K";
    throw Error(ErrorCode::Domain, msg.str());
  }
  return static_cast<std::size_t>(k);
}

std::vector<double> WhitneyJet::value(double s) const {
  const JetPiece& p = pieces_[piece_at(s)];
  std::vector<double> out;
  out.reserve(2 * n_ + 1);
  for (const auto& g : p.gamma) {
    out.push_back(g.x(s));
    out.push_back(g.y(s));
  }
  out.push_back(p.height(s));
  return out;
}

std::vector<double> WhitneyJet::derivative(double s) const {
  const JetPiece& d = derived_[piece_at(s)];
  std::vector<double> out;
  out.reserve(2 * n_ + 1);
  for (const auto& g : d.gamma_prime) {
    out.push_back(g.x(s));
    out.push_back(g.y(s));
  }
  out.push_back(d.height_prime(s));
  return out;
}

PlanarPoint WhitneyJet::planar(double s, int j) const {
  const PolyPair& g = pieces_[piece_at(s)].gamma.at(j);
  return {g.x(s), g.y(s)};
}

PlanarPoint WhitneyJet::planar_derivative(double s, int j) const {
  const PolyPair& g = derived_[piece_at(s)].gamma_prime.at(j);
  return {g.x(s), g.y(s)};
}

double WhitneyJet::height(double s) const { return pieces_[piece_at(s)].height(s); }

double WhitneyJet::height_derivative(double s) const {
  return derived_[piece_at(s)].height_prime(s);
}

WhitneyJet WhitneyJet::restricted(const std::vector<std::size_t>& keep) const {
  std::vector<Interval> ivs;
  std::vector<JetPiece> ps;
  for (std::size_t k : keep) {
    ivs.push_back(set_.intervals().at(k));
    ps.push_back(pieces_.at(k));
  }
  return WhitneyJet(n_, CompactSet(std::move(ivs)), std::move(ps), degree_cap_);
}

std::vector<Gap> gaps(const WhitneyJet& jet) {
  std::vector<Gap> out;
  const auto& ivs = jet.set().intervals();
  for (std::size_t k = 1; k < ivs.size(); ++k) out.push_back({ivs[k - 1].hi, ivs[k].lo, 0.0});
  return out;
}

std::vector<double> sample_points(const WhitneyJet& jet, int samples_per_interval) {
  if (samples_per_interval < 2)
    throw Error(ErrorCode::InvalidArgument, "need at least 2 samples per interval");
  std::vector<double> out;
  for (const auto& iv : jet.set().intervals()) {
    if (iv.length() == 0.0) {
      out.push_back(iv.lo);
      continue;
    }
    const int m = samples_per_interval;
    for (int k = 0; k < m; ++k) {
      out.push_back(k == m - 1 ? iv.hi : iv.lo + iv.length() * k / (m - 1));
    }
  }
  return out;
}

PairModuli pair_moduli(const WhitneyJet& jet, double t, int samples_per_interval) {
  if (!(t > 0.0)) throw Error(ErrorCode::Domain, "modulus scale t must be positive");
  const int n = jet.n();
  const std::size_t dim = 2 * n + 1;
  const auto samples = samples_of(jet, samples_per_interval);
  const double reach = t * (1.0 + 1e-12);
  PairModuli m;
  std::vector<double> rem_a(dim), rem_b(dim);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& a = samples[i];
    for (std::size_t k = i + 1; k < samples.size(); ++k) {
      const Sample& b = samples[k];
      const double d = b.s - a.s;
      if (d > reach) break;
      ++m.pairs;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = b.value[c] - a.value[c];
        rem_a[c] = diff - d * a.deriv[c];
        rem_b[c] = diff - d * b.deriv[c];
      }
      for (const auto* r : {&rem_a, &rem_b}) {
        m.whitney = std::max(m.whitney, norm_of(*r, 0, dim) / d);
        m.planar_whitney = std::max(m.planar_whitney, norm_of(*r, 0, dim - 1) / d);
        m.height_whitney = std::max(m.height_whitney, std::abs(r->back()) / d);
      }
      m.area = std::max(m.area, std::abs(area_term(a.value, b.value, n)) / (d * d));
    }
  }
  return m;
}

double whitney_modulus(const WhitneyJet& jet, double t, int samples_per_interval) {
  return pair_moduli(jet, t, samples_per_interval).whitney;
}

double area_modulus(const WhitneyJet& jet, double t, int samples_per_interval) {
  return pair_moduli(jet, t, samples_per_interval).area;
}

double horizontality_defect(const WhitneyJet& jet, int samples_per_interval) {
  double worst = 0.0;
  for (double s : sample_points(jet, samples_per_interval)) {
    const HPoint p(jet.value(s));
    worst = std::max(worst, std::abs(contact_residual(p, jet.derivative(s))));
  }
  return worst;
}

double big_m(const WhitneyJet& jet) {
  double worst = 0.0;
  for (const Gap& g : gaps(jet)) {
    for (int j = 0; j < jet.n(); ++j) {
      const PlanarPoint pa = jet.planar(g.a, j);
      const PlanarPoint pb = jet.planar(g.b, j);
      worst = std::max({worst, norm(pb - pa) / (g.b - g.a), norm(jet.planar_derivative(g.a, j)),
                        norm(jet.planar_derivative(g.b, j))});
    }
  }
  return 1.0 + worst;
}

std::vector<Gap> epsilon_sequence(const WhitneyJet& jet, const std::vector<Gap>& gs) {
  const int n = jet.n();
  std::vector<Gap> out = gs;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Gap& g = out[i];
    const double len = g.b - g.a;
    if (!(len > 0.0)) throw Error(ErrorCode::InvalidArgument, "gap with b <= a");
    const auto va = jet.value(g.a);
    const auto vb = jet.value(g.b);
    const auto da = jet.derivative(g.a);
    const auto db = jet.derivative(g.b);
    double chord = 0.0, qa = 0.0, qb = 0.0;
    for (int c = 0; c < 2 * n; ++c) {
      const double diff = vb[c] - va[c];
      chord += diff * diff;
      qa += (diff / len - da[c]) * (diff / len - da[c]);
      qb += (diff / len - db[c]) * (diff / len - db[c]);
    }
    const double lam = std::abs(area_term(va, vb, n)) / (n * len * len);
    const double tight = std::max({len, std::sqrt(chord), std::sqrt(qa), std::sqrt(qb), lam});
    if (!std::isfinite(tight)) {
      std::ostringstream msg;
      msg << "gap (" << g.a << ", " << g.b << ") has a non-finite epsilon quantity";
      throw Error(ErrorCode::NonFinite, msg.str());
    }
    g.epsilon = std::max(1.01 * tight, 1e-12);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Gap& x, const Gap& y) { return (x.b - x.a) > (y.b - y.a); });
  for (std::size_t i = out.size(); i-- > 1;)
    out[i - 1].epsilon = std::max(out[i - 1].epsilon, out[i].epsilon);
  return out;
}

double implied_height_whitney_bound(const WhitneyJet& jet, const PairModuli& m, double t,
                                    double horizontality, int samples_per_interval) {
  double g = 0.0;
  for (double s : sample_points(jet, samples_per_interval)) {
    const auto v = jet.value(s);
    g = std::max(g, norm_of(v, 0, v.size() - 1));
  }
  return t * m.area + 2.0 * g * m.planar_whitney + horizontality;
}

double default_min_scale(const WhitneyJet& jet) {
  const double width = jet.hull().length();
  if (width <= 0.0) return 1.0;
  const auto gs = gaps(jet);
  if (gs.empty()) return std::ldexp(width, -10);
  double smallest = width;
  for (const Gap& g : gs) smallest = std::min(smallest, g.b - g.a);
  double t = width;
  while (std::ldexp(t, -1) >= smallest) t = std::ldexp(t, -1);
  return t;
}

ValidationVerdict validate(const WhitneyJet& jet, const Tolerances& tol) {
  if (!(tol.whitney > 0.0) || !(tol.area > 0.0) || !(tol.horizontality > 0.0) || tol.levels < 1)
    throw Error(ErrorCode::InvalidArgument, "tolerances must be positive and levels >= 1");
  ValidationVerdict v;
  v.samples_per_interval = tol.samples_per_interval;
  const double width = jet.hull().length();
  const double t_min = tol.t_min > 0.0 ? tol.t_min : default_min_scale(jet);

  std::vector<double> ladder;
  for (int k = tol.levels - 1; k >= 0; --k) {
    double t = std::ldexp(t_min, k);
    if (width > 0.0) t = std::min(t, width);
    if (ladder.empty() || t < ladder.back()) ladder.push_back(t);
  }

  double smallest_whitney = 0.0, smallest_area = 0.0;
  bool smallest_conclusive = false;
  for (double t : ladder) {
    const PairModuli m = pair_moduli(jet, t, tol.samples_per_interval);
    ScaleRow row;
    row.t = t;
    row.whitney = tol.check_height_whitney ? m.whitney : m.planar_whitney;
    row.area = m.area;
    row.pairs = m.pairs;
    row.inconclusive = m.pairs == 0;
    v.scales.push_back(row);
    smallest_whitney = row.whitney;
    smallest_area = row.area;
    smallest_conclusive = !row.inconclusive;
  }
  v.horizontality = horizontality_defect(jet, tol.samples_per_interval);
  v.big_m = big_m(jet);

  v.whitney_ok = !smallest_conclusive || smallest_whitney <= tol.whitney;
  v.area_ok = !smallest_conclusive || smallest_area <= tol.area;
  v.horizontality_ok = v.horizontality <= tol.horizontality;
  if (!v.whitney_ok) v.failing.push_back("whitney");
  if (!v.area_ok) v.failing.push_back("area");
  if (!v.horizontality_ok) v.failing.push_back("horizontality");
  v.extendable = v.failing.empty();
  return v;
}

}  // namespace hwext
