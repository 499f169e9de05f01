#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "sharpbound/core.hpp"
#include "sharpbound/oracle.hpp"
#include "sharpbound/superquad.hpp"

namespace sharpbound {

// ordered_json keeps insertion order in the output, so results read in the
// documented field order instead of alphabetically.
using Json = nlohmann::ordered_json;

// Malformed or off-schema input. Distinct from DomainError so the CLI can
// tell "bad JSON" apart from "mathematically invalid parameters".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Serialization. Doubles go through the default dump, which emits the
// shortest digit string that parses back to the same double, so every
// numeric output survives a round trip exactly.

Json to_json(const InequalityReport& report);
Json to_json(const BoundCertificate& cert);
Json to_json(const RefinedBound& bound);
Json to_json(const GapBound& gap);
Json to_json(const FuzzInstance& instance);
Json to_json(const Violation& violation);
Json to_json(const CampaignReport& report);

// ---------------------------------------------------------------------------
// Strict parsing. Every object consumed by the CLI passes through
// require_keys first: a missing required key or any key outside
// required + optional throws ParseError naming the key.

void require_keys(const Json& obj,
                  std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional,
                  const std::string& context);

double get_number(const Json& obj, const char* key);

// Complex entries are either a bare number (real) or a two-element
// [re, im] array.
Complex parse_complex(const Json& value, const std::string& context);

std::vector<Complex> get_complex_vector(const Json& obj, const char* key);
std::vector<double> get_real_vector(const Json& obj, const char* key);

// Parses a SearchConfig subobject; keys seed, trials, local_steps,
// step_decay, box (array of [lo, hi] pairs), all optional on top of
// `base`.
SearchConfig search_config_from(const Json& obj, const SearchConfig& base);

}  // namespace sharpbound
