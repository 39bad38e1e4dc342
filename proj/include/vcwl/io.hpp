#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "vcwl/cwl.hpp"
#include "vcwl/koszul.hpp"

namespace vcwl {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "vcwl-1.0";

/// Comma-separated generators, all in x or all in t. x-input must have
/// degrees divisible by c and is rewritten in t modulo Q; t-input is
/// reduced modulo Q. Errors are ParseError with a position into `text`.
GradedIdeal parse_ideal(std::string_view text, std::shared_ptr<const VeronesePresentation> pres);

/// Generators joined by ", "; parse_ideal reads it back.
std::string format_ideal(const GradedIdeal& ideal);

Json to_json(const VeronesePresentation& pres);
Json to_json(const BettiTable& table);
Json to_json(const GinCertificate& cert, const Ring& ring);
Json to_json(const BettiWitness& w);
Json to_json(const CwlVerdict& v);
Json to_json(const KoszulHomologyTable& t);
Json to_json(const MaxBettiReport& r);
Json to_json(const ProperSequenceReport& r);
Json to_json(const HilbertFunction& h);

BettiTable betti_from_json(const Json& j);

/// Betti table in the usual layout: columns i, rows j - i; '*' marks an
/// incomplete column.
std::string format_betti(const BettiTable& table);

}  // namespace vcwl
