#include "hwext/jet_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hwext/error.hpp"
#include "json_detail.hpp"

namespace hwext {
namespace detail {

json poly_json(const Polynomial& p) {
  json out = json::array();
  for (double c : p.coefficients()) out.push_back(c);
  return out;
}

Polynomial poly_from(const json& j, const char* what) {
  if (j.is_number()) return Polynomial::constant(j.get<double>());
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + ": expected coefficient array");
  std::vector<double> c;
  for (const auto& e : j) {
    if (!e.is_number())
      throw Error(ErrorCode::Parse, std::string(what) + ": coefficients must be numbers");
    c.push_back(e.get<double>());
  }
  return Polynomial(std::move(c));
}

namespace {

std::vector<PolyPair> pairs_from(const json& j, int n, const char* what) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
    throw Error(ErrorCode::Parse, std::string(what) + ": expected " + std::to_string(n) + " planes");
  std::vector<PolyPair> out;
  for (const auto& plane : j) {
    if (!plane.is_array() || plane.size() != 2)
      throw Error(ErrorCode::Parse, std::string(what) + ": each plane is [coeffs_f, coeffs_g]");
    out.push_back({poly_from(plane[0], what), poly_from(plane[1], what)});
  }
  return out;
}

json pairs_json(const std::vector<PolyPair>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(json::array({poly_json(p.x), poly_json(p.y)}));
  return out;
}

}  // namespace

json jet_json(const WhitneyJet& jet) {
  json out;
  out["n"] = jet.n();
  json ivs = json::array();
  for (const auto& iv : jet.set().intervals()) ivs.push_back(json::array({iv.lo, iv.hi}));
  out["intervals"] = ivs;
  json pieces = json::array();
  for (const auto& p : jet.pieces()) {
    json pj;
    pj["gamma"] = pairs_json(p.gamma);
    pj["height"] = poly_json(p.height);
    if (p.has_prime) {
      pj["gammaPrime"] = pairs_json(p.gamma_prime);
      pj["heightPrime"] = poly_json(p.height_prime);
    }
    pieces.push_back(pj);
  }
  out["pieces"] = pieces;
  return out;
}

WhitneyJet jet_from(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "jet: expected a JSON object");
    const int n = j.at("n").get<int>();
    if (n < 1) throw Error(ErrorCode::Parse, "jet: n must be >= 1");
    std::vector<Interval> ivs;
    for (const auto& iv : j.at("intervals")) {
      if (!iv.is_array() || iv.size() != 2)
        throw Error(ErrorCode::Parse, "jet: each interval is [lo, hi]");
      ivs.push_back({iv[0].get<double>(), iv[1].get<double>()});
    }
    std::vector<JetPiece> pieces;
    for (const auto& pj : j.at("pieces")) {
      JetPiece p;
      p.gamma = pairs_from(pj.at("gamma"), n, "gamma");
      p.height = poly_from(pj.at("height"), "height");
      if (pj.contains("gammaPrime")) {
        p.has_prime = true;
        p.gamma_prime = pairs_from(pj.at("gammaPrime"), n, "gammaPrime");
        if (!pj.contains("heightPrime"))
          throw Error(ErrorCode::Parse, "jet: gammaPrime given without heightPrime");
        p.height_prime = poly_from(pj.at("heightPrime"), "heightPrime");
      }
      pieces.push_back(std::move(p));
    }
    const int cap = j.value("degreeCap", WhitneyJet::kDefaultDegreeCap);
    return WhitneyJet(n, CompactSet(std::move(ivs)), std::move(pieces), cap);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("jet: ") + e.what());
  }
}

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::ostringstream msg;
    msg << what << ": malformed JSON at line " << line << ", column " << col << ": " << e.what();
    throw Error(ErrorCode::Parse, msg.str());
  }
}

}  // namespace detail

WhitneyJet parse_jet(std::string_view text) {
  return detail::jet_from(detail::parse_document(text, "jet"));
}

WhitneyJet read_jet_file(const std::string& path) { return parse_jet(read_text_file(path)); }

std::string jet_to_json(const WhitneyJet& jet) { return detail::jet_json(jet).dump(2) + "\n"; }

std::string verdict_to_json(const ValidationVerdict& v, const Tolerances& tol) {
  using detail::json;
  json out;
  out["extendable"] = v.extendable;
  out["conditions"] = {{"whitney", v.whitney_ok},
                       {"area", v.area_ok},
                       {"horizontality", v.horizontality_ok}};
  out["failing"] = v.failing;
  json scales = json::array();
  for (const auto& r : v.scales) {
    scales.push_back({{"t", r.t},
                      {"whitney", r.whitney},
                      {"area", r.area},
                      {"pairs", r.pairs},
                      {"inconclusive", r.inconclusive}});
  }
  out["scales"] = scales;
  out["horizontality"] = v.horizontality;
  out["bigM"] = v.big_m;
  out["samplesPerInterval"] = v.samples_per_interval;
  out["tolerances"] = {{"whitney", tol.whitney},
                       {"area", tol.area},
                       {"horizontality", tol.horizontality},
                       {"levels", tol.levels},
                       {"checkHeightWhitney", tol.check_height_whitney}};
  return out.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

}  // namespace hwext
