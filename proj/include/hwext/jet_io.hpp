#pragma once

#include <string>
#include <string_view>

#include "hwext/whitney.hpp"

namespace hwext {

/// Parses the jet schema {n, intervals, pieces:[{gamma, height, gammaPrime?, heightPrime?}]}.
/// Throws Error(Parse) with line/column on malformed text or schema violations.
WhitneyJet parse_jet(std::string_view text);
WhitneyJet read_jet_file(const std::string& path);
std::string jet_to_json(const WhitneyJet& jet);

std::string verdict_to_json(const ValidationVerdict& verdict, const Tolerances& tol);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double v);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace hwext
