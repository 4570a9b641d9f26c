#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "dinner.hpp"

namespace ethdinner {

using Json = nlohmann::json;

/// Parses JSON keeping the source text of non-integer numbers: every
/// floating-point literal becomes a JSON string holding its exact lexeme,
/// so "0.1" and 0.1 both reach Rational::parse unrounded.
Json parse_json_exact(std::string_view text);

/// Integers as JSON numbers, everything else as an exact decimal or "p/q" string.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"last_mover": "A"|"B", "morsels": [[a, b], ...]}
Json dinner_to_json(const Dinner& d);
Dinner dinner_from_json(const Json& j);

std::string serialize_dinner(const Dinner& d);
/// Throws ParseError on a malformed document, DuplicateUtility on ties.
Dinner parse_dinner(std::string_view text);

Json morsel_to_json(const Morsel& m);

}  // namespace ethdinner
