#pragma once

#include "nolat/constructions.hpp"
#include "nolat/perturbation.hpp"
#include "nolat/report.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace nolat {

using Json = nlohmann::json;

Json to_json(const Rational& q);
/// Accepts "p/q" strings and JSON integers. Throws ParseError.
Rational rational_from_json(const Json& j);

/// {"name", "rank", "gram", "provenance"} plus "basis" when given.
Json lattice_to_json(const Lattice& lattice, const std::optional<FloatBasis>& basis = std::nullopt);
/// Validates the Gram; a "basis" field must reproduce it within 1e-9.
/// Throws ParseError on malformed input.
Lattice lattice_from_json(const Json& j);

Json to_json(const MinimalVectorSet& mv);
/// Orderings are written 1-based.
Json to_json(const OrthoVerdict& verdict);
Json to_json(const MembershipReport& report);
Json to_json(const EutaxyResult& result);
Json to_json(const ClassificationReport& report);
Json to_json(const PlanarWRResult& result);
Json to_json(const PerturbationOutcome& outcome);

/// Two-space indent, sorted keys, trailing newline.
std::string dump(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace nolat
