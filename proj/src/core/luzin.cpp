#include "hwext/luzin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hwext/error.hpp"
#include "hwext/jet_io.hpp"
#include "json_detail.hpp"

namespace hwext {
namespace {

double up(double v) { return std::nextafter(v, std::numeric_limits<double>::infinity()); }

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

struct Quotients {
  double whitney;
  double area;
};

Quotients quotients(const std::vector<double>& gt, const std::vector<double>& dt,
                    const std::vector<double>& gs, double d, int n) {
  std::vector<double> rem(gt.size());
  for (std::size_t c = 0; c < gt.size(); ++c) rem[c] = gs[c] - gt[c] - d * dt[c];
  double cross = 0.0;
  for (int j = 0; j < n; ++j) cross += gs[2 * j] * gt[2 * j + 1] - gt[2 * j] * gs[2 * j + 1];
  const double area = gs.back() - gt.back() - 2.0 * cross;
  return {vec_norm(rem) / std::abs(d), std::abs(area) / (d * d)};
}

}  // namespace

PiecewiseCurve::PiecewiseCurve(int n, Interval domain, std::vector<double> knots,
                               std::vector<JetPiece> pieces)
    : n_(n), domain_(domain), knots_(std::move(knots)), pieces_(std::move(pieces)) {
  if (n_ < 1) throw Error(ErrorCode::Dimension, "curve needs n >= 1");
  if (!(domain_.lo < domain_.hi)) throw Error(ErrorCode::InvalidJet, "curve domain needs lo < hi");
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    const double prev = k == 0 ? domain_.lo : knots_[k - 1];
    if (!(prev < knots_[k]) || !(knots_[k] < domain_.hi))
      throw Error(ErrorCode::InvalidJet, "knots must be increasing and interior to the domain");
  }
  if (pieces_.size() != knots_.size() + 1)
    throw Error(ErrorCode::InvalidJet, "curve needs one piece per knot interval");
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    auto& p = pieces_[k];
    if (p.gamma.size() != static_cast<std::size_t>(n_))
      throw Error(ErrorCode::InvalidJet, "curve piece " + std::to_string(k) + ": gamma needs n planes");
    p.has_prime = true;
    p.gamma_prime.clear();
    for (const auto& g : p.gamma) p.gamma_prime.push_back({g.x.derivative(), g.y.derivative()});
    p.height_prime = p.height.derivative();
  }
  for (std::size_t k = 0; k < knots_.size(); ++k) {
    const auto left = value(knots_[k], k);
    const auto right = value(knots_[k], k + 1);
    double jump = 0.0;
    for (std::size_t c = 0; c < left.size(); ++c) jump = std::max(jump, std::abs(left[c] - right[c]));
    if (jump > 1e-9 * std::max(1.0, max_abs(left))) {
      std::ostringstream msg;
      msg << "curve is discontinuous at knot " << knots_[k] << " (jump " << jump << ")";
      throw Error(ErrorCode::InvalidJet, msg.str());
    }
  }
  for (std::size_t k = 0; k < pieces_.size(); ++k) {
    const Interval d = piece_domain(k);
    for (int q = 0; q <= 32; ++q) {
      const double s = q == 32 ? d.hi : d.lo + d.length() * q / 32.0;
      const auto v = value(s, k);
      const auto dv = derivative(s, k);
      const double r = std::abs(contact_residual(HPoint(v), dv));
      if (r > 1e-9 * std::max(1.0, max_abs(v) * max_abs(dv))) {
        std::ostringstream msg;
        msg << "curve piece " << k << " is not horizontal at s = " << s << " (residual " << r << ")";
        throw Error(ErrorCode::InvalidJet, msg.str());
      }
    }
  }
}

PiecewiseCurve PiecewiseCurve::lifted(int n, Interval domain, std::vector<double> knots,
                                      std::vector<std::vector<PolyPair>> planar, double h0) {
  std::vector<JetPiece> pieces;
  double start = domain.lo;
  double h = h0;
  for (std::size_t k = 0; k < planar.size(); ++k) {
    Polynomial integrand;
    for (const auto& g : planar[k])
      integrand = integrand + 2.0 * (g.x.derivative() * g.y - g.x * g.y.derivative());
    const Polynomial anti = integrand.antiderivative();
    JetPiece p;
    p.gamma = std::move(planar[k]);
    p.height = anti + Polynomial::constant(h - anti(start));
    const double end = k < knots.size() ? knots[k] : domain.hi;
    h = p.height(end);
    start = end;
    pieces.push_back(std::move(p));
  }
  return PiecewiseCurve(n, domain, std::move(knots), std::move(pieces));
}

Interval PiecewiseCurve::piece_domain(std::size_t k) const {
  return {k == 0 ? domain_.lo : knots_[k - 1], k == knots_.size() ? domain_.hi : knots_[k]};
}

std::size_t PiecewiseCurve::piece_at(double s, bool prefer_right) const {
  if (!domain_.contains(s)) {
    std::ostringstream msg;
    msg << "parameter " << s << " outside the curve domain";
    throw Error(ErrorCode::Domain, msg.str());
  }
  std::size_t k = 0;
  while (k < knots_.size() && (prefer_right ? knots_[k] <= s : knots_[k] < s)) ++k;
  return k;
}

std::vector<double> PiecewiseCurve::value(double s, std::size_t piece) const {
  const JetPiece& p = pieces_.at(piece);
  std::vector<double> out;
  for (const auto& g : p.gamma) {
    out.push_back(g.x(s));
    out.push_back(g.y(s));
  }
  out.push_back(p.height(s));
  return out;
}

std::vector<double> PiecewiseCurve::derivative(double s, std::size_t piece) const {
  const JetPiece& p = pieces_.at(piece);
  std::vector<double> out;
  for (const auto& g : p.gamma_prime) {
    out.push_back(g.x(s));
    out.push_back(g.y(s));
  }
  out.push_back(p.height_prime(s));
  return out;
}

bool PiecewiseCurve::c1_at_knot(std::size_t k) const {
  const auto l = derivative(knots_.at(k), k);
  const auto r = derivative(knots_.at(k), k + 1);
  double jump = 0.0;
  for (std::size_t c = 0; c < l.size(); ++c) jump = std::max(jump, std::abs(l[c] - r[c]));
  return jump <= 1e-12 * std::max(1.0, max_abs(l));
}

PiecewiseCurve parse_piecewise_curve(std::string_view text) {
  using detail::json;
  const json j = detail::parse_document(text, "curve");
  try {
    const int n = j.at("n").get<int>();
    Interval dom;
    if (j.contains("interval")) {
      dom = {j.at("interval").at(0).get<double>(), j.at("interval").at(1).get<double>()};
    } else {
      const auto& ivs = j.at("intervals");
      if (ivs.size() != 1) throw Error(ErrorCode::Parse, "curve: expected exactly one interval");
      dom = {ivs.at(0).at(0).get<double>(), ivs.at(0).at(1).get<double>()};
    }
    std::vector<double> knots = j.value("knots", std::vector<double>{});
    std::vector<std::vector<PolyPair>> planar;
    std::vector<Polynomial> heights;
    bool all_heights = true;
    for (const auto& pj : j.at("pieces")) {
      std::vector<PolyPair> gamma;
      for (const auto& plane : pj.at("gamma")) {
        if (!plane.is_array() || plane.size() != 2)
          throw Error(ErrorCode::Parse, "curve: each plane is [coeffs_f, coeffs_g]");
        gamma.push_back({detail::poly_from(plane[0], "gamma"), detail::poly_from(plane[1], "gamma")});
      }
      planar.push_back(std::move(gamma));
      if (pj.contains("height")) {
        heights.push_back(detail::poly_from(pj.at("height"), "height"));
      } else {
        all_heights = false;
      }
    }
    if (!all_heights) {
      if (!heights.empty())
        throw Error(ErrorCode::Parse, "curve: give heights for every piece or for none");
      return PiecewiseCurve::lifted(n, dom, std::move(knots), std::move(planar), j.value("h0", 0.0));
    }
    std::vector<JetPiece> pieces;
    for (std::size_t k = 0; k < planar.size(); ++k) {
      JetPiece p;
      p.gamma = std::move(planar[k]);
      p.height = std::move(heights[k]);
      pieces.push_back(std::move(p));
    }
    return PiecewiseCurve(n, dom, std::move(knots), std::move(pieces));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("curve: ") + e.what());
  }
}

LuzinResult approximate(const PiecewiseCurve& curve, double eps, const LuzinOptions& opt) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (opt.cells < 1) throw Error(ErrorCode::InvalidArgument, "need at least one cell");
  const int n = curve.n();
  const Interval dom = curve.domain();

  // Cells: uniform grid refined at the knots.
  std::vector<double> bounds;
  for (int k = 0; k <= opt.cells; ++k)
    bounds.push_back(k == opt.cells ? dom.hi : dom.lo + dom.length() * k / opt.cells);
  for (double kn : curve.knots()) bounds.push_back(kn);
  std::sort(bounds.begin(), bounds.end());
  bounds.erase(std::unique(bounds.begin(), bounds.end()), bounds.end());

  std::vector<CellProfile> cells;
  double width = 0.0;
  for (std::size_t k = 1; k < bounds.size(); ++k) {
    CellProfile c;
    c.cell = {bounds[k - 1], bounds[k]};
    c.piece = curve.piece_at(0.5 * (c.cell.lo + c.cell.hi));
    width = std::max(width, c.cell.length());
    cells.push_back(std::move(c));
  }

  // Lambda: twice the largest same-piece quotient per unit distance.
  double intra = 1.0;
  for (std::size_t k = 0; k < curve.pieces().size(); ++k) {
    const Interval d = curve.piece_domain(k);
    constexpr int m = 64;
    std::vector<double> ss;
    for (int q = 0; q < m; ++q) ss.push_back(q == m - 1 ? d.hi : d.lo + d.length() * q / (m - 1));
    for (double t : ss) {
      const auto gt = curve.value(t, k);
      const auto dt = curve.derivative(t, k);
      for (double s : ss) {
        if (s == t) continue;
        const Quotients q = quotients(gt, dt, curve.value(s, k), s - t, n);
        intra = std::max({intra, q.whitney / std::abs(s - t), q.area / std::abs(s - t)});
      }
    }
  }
  const double lambda = 2.0 * intra;

  int top = static_cast<int>(std::floor(std::log2(1.0 / (2.0 * width))));
  top = std::max(top, 0);
  std::vector<double> windows;
  for (int m = 0; m <= top; ++m) windows.push_back(std::ldexp(1.0, -m));

  for (auto& c : cells) {
    const double t_samples[] = {c.cell.lo, c.cell.lo + 0.25 * c.cell.length(),
                                c.cell.lo + 0.5 * c.cell.length(),
                                c.cell.lo + 0.75 * c.cell.length(), c.cell.hi};
    int last_bad = -1;
    for (int m = 0; m <= top; ++m) {
      const double rho = windows[m];
      double psi = 0.0, phi = 0.0;
      for (double t : t_samples) {
        const auto gt = curve.value(t, c.piece);
        const auto dt = curve.derivative(t, c.piece);
        std::vector<double> ss;
        for (int q = 1; q < 16; ++q) {
          ss.push_back(t + rho * q / 16.0);
          ss.push_back(t - rho * q / 16.0);
        }
        for (double kn : curve.knots()) {
          if (std::abs(kn - t) < rho) ss.push_back(kn);
        }
        for (double s : ss) {
          if (s == t || !dom.contains(s)) continue;
          const Quotients q = quotients(gt, dt, curve.value(s), s - t, n);
          psi = std::max(psi, q.whitney);
          phi = std::max(phi, q.area);
        }
      }
      c.psi.push_back(psi);
      c.phi.push_back(phi);
      const double tau = lambda * rho;
      if (psi > tau || phi > tau) last_bad = m;
    }
    c.level = last_bad == top ? CellProfile::kNever : last_bad + 1;
  }

  // A jet piece cannot straddle a knot, so one neighbour of every knot is dropped.
  for (std::size_t k = 1; k < cells.size(); ++k) {
    if (cells[k].piece == cells[k - 1].piece) continue;
    if (cells[k].level == CellProfile::kNever || cells[k - 1].level == CellProfile::kNever) continue;
    if (cells[k - 1].level > cells[k].level) {
      cells[k - 1].level = CellProfile::kNever;
    } else {
      cells[k].level = CellProfile::kNever;
    }
  }

  for (int m0 = 0; m0 <= top; ++m0) {
    std::vector<Interval> kept;
    std::vector<std::size_t> kept_piece;
    double removed = 0.0;
    for (const auto& c : cells) {
      if (c.level <= m0) {
        if (!kept.empty() && kept.back().hi == c.cell.lo && kept_piece.back() == c.piece) {
          kept.back().hi = c.cell.hi;
        } else {
          kept.push_back(c.cell);
          kept_piece.push_back(c.piece);
        }
      } else {
        removed = up(removed + up(c.cell.hi - c.cell.lo));
      }
    }
    if (kept.empty() || !(removed < eps)) continue;

    // Neighbouring kept intervals can only touch at a knot; the knot rule prevents that.
    std::vector<JetPiece> pieces;
    for (std::size_t piece : kept_piece) {
      JetPiece p = curve.pieces()[piece];
      p.has_prime = false;
      p.gamma_prime.clear();
      pieces.push_back(std::move(p));
    }
    WhitneyJet jet(n, CompactSet(kept), std::move(pieces));
    Tolerances tol;
    tol.t_min = std::ldexp(1.0, -m0) * (1.0 - 1e-9);
    tol.whitney = 2.0 * lambda * std::ldexp(1.0, -m0);
    tol.area = tol.whitney;
    ValidationVerdict verdict = validate(jet, tol);
    if (!verdict.extendable) {
      std::string names;
      for (const auto& f : verdict.failing) names += (names.empty() ? "" : ", ") + f;
      throw Error(ErrorCode::Internal,
                  "restricted jet failed validation at the selected level (" + names + ")");
    }
    ExtendOptions eo;
    eo.force = true;
    eo.envelope_samples = opt.envelope_samples;
    ExtendedCurve ext = extend(jet, dom, eo);

    double agreement = 0.0;
    for (std::size_t q = 0; q < kept.size(); ++q) {
      const Interval iv = kept[q];
      for (int i = 0; i <= 16; ++i) {
        const double s = i == 16 ? iv.hi : iv.lo + iv.length() * i / 16.0;
        const auto ev = ext.value(s);
        const auto ed = ext.derivative(s);
        const auto cv = curve.value(s, kept_piece[q]);
        const auto cd = curve.derivative(s, kept_piece[q]);
        for (std::size_t c = 0; c < ev.size(); ++c)
          agreement = std::max({agreement, std::abs(ev[c] - cv[c]), std::abs(ed[c] - cd[c])});
      }
    }
    return LuzinResult{eps,    CompactSet(kept), removed,          m0,
                       lambda, windows,          std::move(cells), std::move(verdict),
                       tol,    std::move(ext),   agreement};
  }
  std::ostringstream msg;
  msg << "cannot remove less than eps = " << eps << " with " << opt.cells
      << " cells; use a finer grid";
  throw Error(ErrorCode::MeasureBudget, msg.str());
}

std::string luzin_json(const LuzinResult& r, const std::optional<VerificationReport>& report) {
  using detail::json;
  json out;
  out["eps"] = r.eps;
  json e = json::array();
  for (const auto& iv : r.e.intervals()) e.push_back(json::array({iv.lo, iv.hi}));
  out["E"] = e;
  out["measureRemoved"] = r.measure_removed;
  out["selectedLevel"] = r.selected_level;
  out["lambda"] = r.lambda;
  out["windows"] = r.windows;
  json cells = json::array();
  for (const auto& c : r.cells) {
    cells.push_back({{"cell", json::array({c.cell.lo, c.cell.hi})},
                     {"piece", c.piece},
                     {"level", c.level == CellProfile::kNever ? json(nullptr) : json(c.level)},
                     {"psi", c.psi},
                     {"phi", c.phi}});
  }
  out["cells"] = cells;
  out["validation"] = json::parse(verdict_to_json(r.verdict, r.tolerances));
  out["agreement"] = r.agreement;
  out["extension"] = json::parse(manifest_json(r.extension, report));
  return out.dump(2) + "\n";
}

}  // namespace hwext
