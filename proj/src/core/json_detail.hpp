#pragma once

#include <json.hpp>

#include "hwext/planar_piece.hpp"
#include "hwext/whitney.hpp"

namespace hwext::detail {

using nlohmann::json;

json poly_json(const Polynomial& p);
Polynomial poly_from(const json& j, const char* what);
json jet_json(const WhitneyJet& jet);
WhitneyJet jet_from(const json& j);
json parse_document(std::string_view text, const char* what);

}  // namespace hwext::detail
