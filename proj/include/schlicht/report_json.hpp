#ifndef SCHLICHT_REPORT_JSON_HPP
#define SCHLICHT_REPORT_JSON_HPP

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "schlicht/geometry.hpp"
#include "schlicht/harmonic.hpp"
#include "schlicht/membership.hpp"
#include "schlicht/sampling.hpp"

namespace schlicht {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_id = "schlicht.report/1";
inline constexpr std::string_view tool_version = "0.1.0";

Json to_json(cplx z); // {"re": .., "im": ..}
Json to_json(const SamplingPlan &plan);
Json to_json(const MembershipReport &report);
Json to_json(const ConvexityCertificate &cert);
/// `psi_terms` leading coefficients of the recovered Schwarz series.
Json to_json(const SubordinationVerdict &verdict, std::size_t psi_terms = 16);
Json to_json(const JuliaReport &report);
Json to_json(const HarmonicCertificate &cert);

Json make_envelope(std::string_view command, Json result, const std::vector<std::string> &warnings,
                   long long wall_time_ms = 0);

/// Path of the schema shipped with the sources.
std::string default_schema_path();
Json load_schema(const std::string &path = default_schema_path());

/// Checks `doc` against a JSON Schema using the keywords the shipped schema
/// needs: type, required, properties, additionalProperties (boolean), items,
/// enum, const, minimum, minItems, allOf, if/then and local "$ref"s into
/// "$defs". Returns one message per violation; empty means valid.
std::vector<std::string> validate_json(const Json &doc, const Json &schema);

} // namespace schlicht

#endif
