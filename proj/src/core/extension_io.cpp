#include <sstream>

#include "hwext/error.hpp"
#include "hwext/extension.hpp"
#include "hwext/jet_io.hpp"
#include "json_detail.hpp"

namespace hwext {
namespace {

using detail::json;
using detail::poly_from;
using detail::poly_json;

constexpr const char* kFormat = "hwext-extension/1";

json piece_json(const PlanarPiece& p) {
  json out;
  out["domain"] = json::array({p.domain().lo, p.domain().hi});
  out["origin"] = p.origin();
  if (p.kind() == PlanarPiece::Kind::Polynomial) {
    out["kind"] = "polynomial";
    out["x"] = poly_json(p.poly().x);
    out["y"] = poly_json(p.poly().y);
  } else {
    const Arc& a = p.arc_data();
    out["kind"] = "arc";
    out["radius"] = a.radius;
    out["center"] = json::array({a.center.x, a.center.y});
    out["tau"] = poly_json(a.tau);
    out["sign"] = a.sign;
  }
  return out;
}

PlanarPiece piece_from(const json& j) {
  const Interval dom{j.at("domain").at(0).get<double>(), j.at("domain").at(1).get<double>()};
  const double origin = j.at("origin").get<double>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "polynomial")
    return PlanarPiece::polynomial({poly_from(j.at("x"), "x"), poly_from(j.at("y"), "y")}, dom, origin);
  if (kind == "arc") {
    Arc a;
    a.radius = j.at("radius").get<double>();
    a.center = {j.at("center").at(0).get<double>(), j.at("center").at(1).get<double>()};
    a.tau = poly_from(j.at("tau"), "tau");
    a.sign = j.at("sign").get<int>();
    return PlanarPiece::arc(std::move(a), dom, origin);
  }
  throw Error(ErrorCode::Parse, "manifest: unknown piece kind '" + kind + "'");
}

json params_json(const LemmaParams& p) {
  return {{"delta", p.delta}, {"ell", p.ell},       {"alpha", p.alpha}, {"beta", p.beta},
          {"mu", p.mu},       {"nu", p.nu},         {"lambda", p.lambda}, {"eps", p.eps},
          {"bigM", p.big_m},  {"cPrime", p.c_prime}};
}

LemmaParams params_from(const json& j) {
  LemmaParams p;
  p.delta = j.at("delta").get<double>();
  p.ell = j.at("ell").get<double>();
  p.alpha = j.at("alpha").get<double>();
  p.beta = j.at("beta").get<double>();
  p.mu = j.at("mu").get<double>();
  p.nu = j.at("nu").get<double>();
  p.lambda = j.at("lambda").get<double>();
  p.eps = j.at("eps").get<double>();
  p.big_m = j.at("bigM").get<double>();
  p.c_prime = j.at("cPrime").get<double>();
  return p;
}

json envelope_json(const EnvelopeReport& e) {
  return {{"supValue", e.sup_value},
          {"supDerivativeDeviation", e.sup_derivative_deviation},
          {"bound", e.bound},
          {"cPrime", e.c_prime},
          {"samples", e.samples},
          {"valueOk", e.value_ok},
          {"derivativeOk", e.derivative_ok}};
}

EnvelopeReport envelope_from(const json& j) {
  EnvelopeReport e;
  e.sup_value = j.at("supValue").get<double>();
  e.sup_derivative_deviation = j.at("supDerivativeDeviation").get<double>();
  e.bound = j.at("bound").get<double>();
  e.c_prime = j.at("cPrime").get<double>();
  e.samples = j.at("samples").get<int>();
  e.value_ok = j.at("valueOk").get<bool>();
  e.derivative_ok = j.at("derivativeOk").get<bool>();
  return e;
}

json report_object(const VerificationReport& r) {
  json gaps = json::array();
  for (const auto& g : r.gaps) {
    gaps.push_back({{"a", g.a},
                    {"b", g.b},
                    {"epsilon", g.epsilon},
                    {"delta", g.delta},
                    {"supValueDeviation", g.value},
                    {"supPlanarDerivativeDeviation", g.planar_derivative},
                    {"supHeightDerivativeDeviation", g.height_derivative},
                    {"envelope", g.envelope},
                    {"heightEnvelope", g.height_envelope},
                    {"liftResidual", g.lift_residual},
                    {"liftScale", g.lift_scale},
                    {"branches", g.branches}});
  }
  return {{"passed", r.passed},
          {"failing", r.failing},
          {"matchOnK", {{"value", r.match_on_k_value}, {"derivative", r.match_on_k_derivative}}},
          {"seamJumps", {{"value", r.seam_value}, {"derivative", r.seam_derivative}}},
          {"horizontalityResidual", r.horizontality},
          {"liftConsistency", r.lift_consistency},
          {"samplesPerSegment", r.samples_per_segment},
          {"gaps", gaps}};
}

}  // namespace

std::string report_json(const VerificationReport& report) {
  return report_object(report).dump(2) + "\n";
}

std::string manifest_json(const ExtendedCurve& ext, const std::optional<VerificationReport>& report) {
  json out;
  out["format"] = kFormat;
  out["n"] = ext.n();
  out["window"] = json::array({ext.window().lo, ext.window().hi});
  out["cPrime"] = ext.c_prime();
  out["bigM"] = ext.big_m();
  out["forced"] = ext.forced();
  out["seed"] = ext.seed();
  out["jet"] = detail::jet_json(ext.jet());

  json gaps = json::array();
  for (const auto& rec : ext.gap_records()) {
    json planes = json::array();
    for (std::size_t j = 0; j < rec.params.size(); ++j) {
      planes.push_back({{"branch", to_string(rec.branches[j])},
                        {"params", params_json(rec.params[j])},
                        {"envelope", envelope_json(rec.envelopes[j])}});
    }
    gaps.push_back({{"a", rec.gap.a}, {"b", rec.gap.b}, {"epsilon", rec.gap.epsilon}, {"planes", planes}});
  }
  out["gaps"] = gaps;

  json segs = json::array();
  for (const auto& seg : ext.segments()) {
    json sj;
    sj["kind"] = to_string(seg.kind);
    sj["domain"] = json::array({seg.domain.lo, seg.domain.hi});
    sj["heightOffset"] = seg.height_offset;
    if (seg.kind == Segment::Kind::OnK) {
      sj["jetPiece"] = seg.jet_piece;
    } else {
      if (seg.kind == Segment::Kind::GapFill) sj["gapIndex"] = seg.gap_index;
      sj["lift"] = {{"anchor", seg.lift.anchor()}, {"h0", seg.lift.anchor_height()}};
      json planes = json::array();
      for (const auto& plane : seg.lift.planes()) {
        json pieces = json::array();
        for (const auto& piece : plane.pieces()) pieces.push_back(piece_json(piece));
        planes.push_back(pieces);
      }
      sj["planes"] = planes;
    }
    segs.push_back(sj);
  }
  out["segments"] = segs;
  out["report"] = report ? report_object(*report) : json(nullptr);
  return out.dump(2) + "\n";
}

ExtendedCurve extension_from_manifest(std::string_view text) {
  const json j = detail::parse_document(text, "manifest");
  try {
    if (j.value("format", std::string()) != kFormat)
      throw Error(ErrorCode::Parse, std::string("manifest: expected format '") + kFormat + "'");
    WhitneyJet jet = detail::jet_from(j.at("jet"));
    const Interval window{j.at("window").at(0).get<double>(), j.at("window").at(1).get<double>()};

    std::vector<GapRecord> records;
    for (const auto& gj : j.at("gaps")) {
      GapRecord rec;
      rec.gap = {gj.at("a").get<double>(), gj.at("b").get<double>(), gj.at("epsilon").get<double>()};
      for (const auto& pj : gj.at("planes")) {
        rec.params.push_back(params_from(pj.at("params")));
        rec.branches.push_back(pj.at("branch").get<std::string>() == "polynomial" ? Branch::Polynomial
                                                                                  : Branch::Circle);
        rec.envelopes.push_back(envelope_from(pj.at("envelope")));
      }
      records.push_back(std::move(rec));
    }

    std::vector<Segment> segments;
    for (const auto& sj : j.at("segments")) {
      Segment seg;
      const std::string kind = sj.at("kind").get<std::string>();
      seg.domain = {sj.at("domain").at(0).get<double>(), sj.at("domain").at(1).get<double>()};
      seg.height_offset = sj.at("heightOffset").get<double>();
      if (kind == "onK") {
        seg.kind = Segment::Kind::OnK;
        seg.jet_piece = sj.at("jetPiece").get<std::size_t>();
      } else if (kind == "gapFill" || kind == "tail") {
        seg.kind = kind == "tail" ? Segment::Kind::Tail : Segment::Kind::GapFill;
        if (seg.kind == Segment::Kind::GapFill) seg.gap_index = sj.at("gapIndex").get<int>();
        std::vector<PiecewisePlanar> planes;
        for (const auto& pj : sj.at("planes")) {
          std::vector<PlanarPiece> pieces;
          for (const auto& piece : pj) pieces.push_back(piece_from(piece));
          planes.emplace_back(std::move(pieces));
        }
        seg.lift = HorizontalLift(std::move(planes), sj.at("lift").at("anchor").get<double>(),
                                  sj.at("lift").at("h0").get<double>());
      } else {
        throw Error(ErrorCode::Parse, "manifest: unknown segment kind '" + kind + "'");
      }
      segments.push_back(std::move(seg));
    }
    return ExtendedCurve(std::move(jet), window, std::move(segments), std::move(records),
                         j.at("cPrime").get<double>(), j.at("bigM").get<double>(),
                         j.at("forced").get<bool>(), j.value("seed", 0ULL));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("manifest: ") + e.what());
  }
}

std::string sample_csv(const SampledCurve& curve, int n) {
  std::string out = "s";
  for (int j = 1; j <= n; ++j) out += ",x" + std::to_string(j) + ",y" + std::to_string(j);
  out += ",t";
  for (int j = 1; j <= n; ++j) out += ",dx" + std::to_string(j) + ",dy" + std::to_string(j);
  out += ",dt\n";
  for (std::size_t k = 0; k < curve.grid.size(); ++k) {
    out += format_double(curve.grid[k]);
    for (double v : curve.values[k]) out += "," + format_double(v);
    for (double v : curve.derivs[k]) out += "," + format_double(v);
    out += "\n";
  }
  return out;
}

}  // namespace hwext
