#include "hwext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hwext/error.hpp"
#include "hwext/quadrature.hpp"

namespace hwext {
namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

HorizontalLift tail_lift(const WhitneyJet& jet, double endpoint, Interval domain) {
  std::vector<PiecewisePlanar> planes;
  for (int j = 0; j < jet.n(); ++j) {
    const PlanarPoint p = jet.planar(endpoint, j);
    const PlanarPoint d = jet.planar_derivative(endpoint, j);
    planes.emplace_back(std::vector<PlanarPiece>{PlanarPiece::polynomial(
        {Polynomial({p.x, d.x}), Polynomial({p.y, d.y})}, domain, endpoint)});
  }
  return HorizontalLift(std::move(planes), endpoint, jet.height(endpoint));
}

std::vector<double> sample_grid(const Segment& seg, int samples) {
  std::vector<double> grid;
  const Interval d = seg.domain;
  if (d.length() == 0.0) return {d.lo};
  for (int k = 0; k < samples; ++k)
    grid.push_back(k == samples - 1 ? d.hi : d.lo + d.length() * k / (samples - 1));
  if (seg.kind != Segment::Kind::OnK) {
    for (const auto& plane : seg.lift.planes())
      for (const auto& piece : plane.pieces()) grid.push_back(piece.domain().lo);
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

}  // namespace

const char* to_string(Segment::Kind k) noexcept {
  switch (k) {
    case Segment::Kind::OnK: return "onK";
    case Segment::Kind::GapFill: return "gapFill";
    case Segment::Kind::Tail: return "tail";
  }
  return "unknown";
}

ExtendedCurve::ExtendedCurve(WhitneyJet jet, Interval window, std::vector<Segment> segments,
                             std::vector<GapRecord> gaps, double c_prime, double big_m,
                             bool forced, unsigned long long seed)
    : jet_(std::move(jet)),
      window_(window),
      segments_(std::move(segments)),
      gaps_(std::move(gaps)),
      c_prime_(c_prime),
      big_m_(big_m),
      forced_(forced),
      seed_(seed) {
  if (segments_.empty()) throw Error(ErrorCode::InvalidArgument, "extension has no segments");
  if (segments_.front().domain.lo != window_.lo || segments_.back().domain.hi != window_.hi)
    throw Error(ErrorCode::InvalidArgument, "segments must tile the window");
  for (std::size_t k = 1; k < segments_.size(); ++k) {
    if (segments_[k].domain.lo != segments_[k - 1].domain.hi)
      throw Error(ErrorCode::InvalidArgument, "segments must be contiguous");
  }
}

std::size_t ExtendedCurve::locate(double s) const {
  if (!window_.contains(s)) {
    std::ostringstream msg;
    msg << "parameter " << s << " outside the window [" << window_.lo << ", " << window_.hi << "]";
    throw Error(ErrorCode::Domain, msg.str());
  }
  const bool in_k = jet_.set().contains(s);
  auto it = std::lower_bound(segments_.begin(), segments_.end(), s,
                             [](const Segment& seg, double v) { return seg.domain.hi < v; });
  std::size_t k = static_cast<std::size_t>(it - segments_.begin());
  if (k >= segments_.size()) k = segments_.size() - 1;
  if (in_k) {
    while (segments_[k].kind != Segment::Kind::OnK) ++k;
  }
  return k;
}

std::vector<double> ExtendedCurve::segment_value(std::size_t k, double s) const {
  const Segment& seg = segments_.at(k);
  if (seg.kind == Segment::Kind::OnK) return jet_.value(s);
  return seg.lift.point(s);
}

std::vector<double> ExtendedCurve::segment_derivative(std::size_t k, double s) const {
  const Segment& seg = segments_.at(k);
  if (seg.kind == Segment::Kind::OnK) return jet_.derivative(s);
  return seg.lift.velocity(s);
}

std::vector<double> ExtendedCurve::value(double s) const { return segment_value(locate(s), s); }

std::vector<double> ExtendedCurve::derivative(double s) const {
  return segment_derivative(locate(s), s);
}

ExtendedCurve extend(const WhitneyJet& jet, Interval window, const ExtendOptions& opt) {
  const Interval hull = jet.hull();
  if (!(window.lo <= hull.lo && hull.hi <= window.hi))
    throw Error(ErrorCode::InvalidArgument, "window must contain [min K, max K]");
  if (!opt.force) {
    const ValidationVerdict v = validate(jet, opt.validation);
    if (!v.extendable) {
      std::string names;
      for (const auto& f : v.failing) names += (names.empty() ? "" : ", ") + f;
      throw Error(ErrorCode::ValidationRejected,
                  "jet is not extendable; failing condition(s): " + names);
    }
  }

  const double m = big_m(jet);
  const double c_prime = opt.c_prime > 0.0 ? opt.c_prime : default_c_prime(m);
  std::vector<Gap> left_to_right = epsilon_sequence(jet, gaps(jet));
  std::sort(left_to_right.begin(), left_to_right.end(),
            [](const Gap& x, const Gap& y) { return x.a < y.a; });

  std::vector<GapRecord> records;
  std::vector<Segment> segments;
  if (window.lo < hull.lo) {
    Segment tail;
    tail.kind = Segment::Kind::Tail;
    tail.domain = {window.lo, hull.lo};
    tail.lift = tail_lift(jet, hull.lo, tail.domain);
    tail.height_offset = tail.lift.height(window.lo);
    segments.push_back(std::move(tail));
  }

  const auto& ivs = jet.set().intervals();
  for (std::size_t k = 0; k < ivs.size(); ++k) {
    Segment on;
    on.kind = Segment::Kind::OnK;
    on.domain = ivs[k];
    on.jet_piece = k;
    on.height_offset = jet.height(ivs[k].lo);
    segments.push_back(std::move(on));
    if (k + 1 == ivs.size()) break;

    const Gap& g = left_to_right[k];
    GapRecord rec;
    rec.gap = g;
    std::vector<PiecewisePlanar> planes;
    for (int j = 0; j < jet.n(); ++j) {
      const LemmaParams p = lemma_params(jet, g, j, c_prime, m);
      const auto eta = build_eta(p);
      rec.params.push_back(p);
      rec.branches.push_back(branch_test(p));
      rec.envelopes.push_back(envelope_check(eta, p, opt.envelope_samples));
      const GapFrame frame = gap_frame(jet.planar(g.a, j), jet.planar(g.b, j));
      planes.emplace_back(relocate(eta, frame, g.a, g.b));
    }
    Segment fill;
    fill.kind = Segment::Kind::GapFill;
    fill.domain = {g.a, g.b};
    fill.gap_index = static_cast<int>(records.size());
    fill.height_offset = jet.height(g.a);
    fill.lift = HorizontalLift(std::move(planes), g.a, fill.height_offset);
    segments.push_back(std::move(fill));
    records.push_back(std::move(rec));
  }

  if (hull.hi < window.hi) {
    Segment tail;
    tail.kind = Segment::Kind::Tail;
    tail.domain = {hull.hi, window.hi};
    tail.lift = tail_lift(jet, hull.hi, tail.domain);
    tail.height_offset = jet.height(hull.hi);
    segments.push_back(std::move(tail));
  }
  return ExtendedCurve(jet, window, std::move(segments), std::move(records), c_prime, m,
                       opt.force, opt.seed);
}

ExtendedCurve extend(const WhitneyJet& jet, const ExtendOptions& opt) {
  return extend(jet, jet.hull(), opt);
}

VerificationReport verify(const ExtendedCurve& ext, int samples_per_segment,
                          const VerifyTolerances& tol) {
  if (samples_per_segment < 2)
    throw Error(ErrorCode::InvalidArgument, "verification needs at least 2 samples per segment");
  VerificationReport r;
  r.samples_per_segment = samples_per_segment;
  const WhitneyJet& jet = ext.jet();
  const int n = ext.n();
  const auto& segs = ext.segments();

  for (double s : sample_points(jet, std::max(2, samples_per_segment / 10))) {
    r.match_on_k_value = std::max(r.match_on_k_value, max_abs_diff(ext.value(s), jet.value(s)));
    r.match_on_k_derivative =
        std::max(r.match_on_k_derivative, max_abs_diff(ext.derivative(s), jet.derivative(s)));
  }

  for (std::size_t k = 1; k < segs.size(); ++k) {
    const double s = segs[k].domain.lo;
    r.seam_value = std::max(r.seam_value, max_abs_diff(ext.segment_value(k - 1, s), ext.segment_value(k, s)));
    r.seam_derivative = std::max(
        r.seam_derivative, max_abs_diff(ext.segment_derivative(k - 1, s), ext.segment_derivative(k, s)));
  }
  for (const auto& seg : segs) {
    if (seg.kind == Segment::Kind::OnK) continue;
    for (const auto& plane : seg.lift.planes()) {
      const auto& ps = plane.pieces();
      for (std::size_t q = 1; q < ps.size(); ++q) {
        const double s = ps[q].domain().lo;
        const PlanarPoint dv = ps[q].value(s) - ps[q - 1].value(s);
        const PlanarPoint dd = ps[q].derivative(s) - ps[q - 1].derivative(s);
        r.seam_value = std::max({r.seam_value, std::abs(dv.x), std::abs(dv.y)});
        r.seam_derivative = std::max({r.seam_derivative, std::abs(dd.x), std::abs(dd.y)});
      }
    }
  }

  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& seg = segs[k];
    const auto grid = sample_grid(seg, samples_per_segment);
    double start_h = 0.0;
    double integral = 0.0;
    for (std::size_t q = 0; q < grid.size(); ++q) {
      const double s = grid[q];
      const auto v = ext.segment_value(k, s);
      const auto d = ext.segment_derivative(k, s);
      r.horizontality = std::max(r.horizontality, std::abs(contact_residual(HPoint(v), d)));
      if (seg.kind == Segment::Kind::OnK) continue;
      if (q == 0) {
        start_h = v.back();
      } else {
        const double lo = grid[q - 1];
        integral += integrate_gauss_legendre(
            [&](double x) { return seg.lift.height_derivative(x); }, lo, s, 1, 20);
        const double scale = std::max(1.0, std::abs(v.back() - start_h));
        r.lift_consistency =
            std::max(r.lift_consistency, std::abs((v.back() - start_h) - integral) / scale);
      }
    }
  }

  for (std::size_t k = 0; k < segs.size(); ++k) {
    const Segment& seg = segs[k];
    if (seg.kind != Segment::Kind::GapFill) continue;
    const GapRecord& rec = ext.gap_records().at(seg.gap_index);
    const Gap& g = rec.gap;
    GapDeviation dev;
    dev.a = g.a;
    dev.b = g.b;
    dev.epsilon = g.epsilon;
    dev.delta = g.b - g.a;
    dev.envelope = envelope_bound(ext.c_prime(), g.epsilon);
    for (Branch b : rec.branches) dev.branches.push_back(to_string(b));

    double oracle = 0.0;
    for (const auto& plane : seg.lift.planes()) {
      for (const auto& piece : plane.pieces()) {
        oracle += integrate_gauss_legendre([&](double x) { return piece.area_integrand(x); },
                                           piece.domain().lo, piece.domain().hi, 64, 20);
      }
    }
    const double dh = jet.height(g.b) - jet.height(g.a);
    dev.lift_scale = std::max(1.0, std::abs(dh));
    dev.lift_residual = std::abs(oracle - dh);

    const auto va = jet.value(g.a);
    const auto da = jet.derivative(g.a);
    const double p = dev.envelope;
    double henv = 0.0;
    for (int j = 0; j < n; ++j) {
      const PlanarPoint ga{va[2 * j], va[2 * j + 1]};
      const PlanarPoint gda{da[2 * j], da[2 * j + 1]};
      henv += 2.0 * (p * (norm(ga) + p) + norm(gda) * p);
    }
    henv += std::abs(contact_residual(HPoint(va), da));
    dev.height_envelope = henv;

    for (double s : sample_grid(seg, samples_per_segment)) {
      const auto v = seg.lift.point(s);
      const auto d = seg.lift.velocity(s);
      for (int j = 0; j < n; ++j) {
        dev.value = std::max(dev.value, std::hypot(v[2 * j] - va[2 * j], v[2 * j + 1] - va[2 * j + 1]));
        dev.planar_derivative = std::max(
            dev.planar_derivative, std::hypot(d[2 * j] - da[2 * j], d[2 * j + 1] - da[2 * j + 1]));
      }
      dev.height_derivative = std::max(dev.height_derivative, std::abs(d.back() - da.back()));
    }
    r.gaps.push_back(std::move(dev));
  }

  r.match_ok = r.match_on_k_value <= tol.match && r.match_on_k_derivative <= tol.match;
  r.seams_ok = r.seam_value <= tol.seam_value && r.seam_derivative <= tol.seam_derivative;
  r.horizontality_ok = r.horizontality <= tol.horizontality && r.lift_consistency <= tol.horizontality;
  r.lift_ok = true;
  r.envelopes_ok = true;
  for (const auto& g : r.gaps) {
    if (!(g.lift_residual <= tol.lift * g.lift_scale)) r.lift_ok = false;
    if (!(g.value < g.envelope && g.planar_derivative < g.envelope &&
          g.height_derivative <= g.height_envelope))
      r.envelopes_ok = false;
  }
  if (!r.match_ok) r.failing.push_back("matchOnK");
  if (!r.seams_ok) r.failing.push_back("seamJumps");
  if (!r.horizontality_ok) r.failing.push_back("horizontality");
  if (!r.lift_ok) r.failing.push_back("perGapLift");
  if (!r.envelopes_ok) r.failing.push_back("gapSupDeviation");
  r.passed = r.failing.empty();
  return r;
}

SampledCurve sample(const ExtendedCurve& ext, const std::vector<double>& grid) {
  SampledCurve out;
  out.grid = grid;
  for (double s : grid) {
    const std::size_t k = ext.locate(s);
    out.values.push_back(ext.segment_value(k, s));
    out.derivs.push_back(ext.segment_derivative(k, s));
  }
  out.check();
  return out;
}

}  // namespace hwext
