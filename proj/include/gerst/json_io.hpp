#ifndef GERST_JSON_IO_HPP
#define GERST_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "gerst/bracket.hpp"
#include "gerst/cohomology.hpp"

namespace gerst {

std::string generator_name(FGen g);          // "e1*e0'"
std::string generator_display(FGen g);       // "e1(x)e0'" with the tensor glyph
FGen generator_from_name(const std::string& s);

// Cocycle file schema: {"hom_degree": m, "values": {"e1*e0'": "<poly>", ...}}
nlohmann::json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const nlohmann::json& j, const RewriteEngine& eng);
Cochain read_cocycle_file(const std::string& path, const RewriteEngine& eng);

nlohmann::json bimod_to_json(const BimodElement& el);
nlohmann::json hh_report_to_json(const GradedCohomologyReport& rep);
nlohmann::json check_report_to_json(const Report& rep);

// Differential/diagonal/lift dump of the resolution for one twist.
nlohmann::json resolution_to_json(const TtpComplex& ttp, const DiagonalMap& diag,
                                  const ChainLift& lift);

}  // namespace gerst

#endif
