#pragma once

// Canonical ".lgs.json" scenario documents.
//
// Layout: top-level keys meta, competences, participants, characters,
// pedagogical, ludic, orderings, documents, in that order. Element lists keep
// document order, nesting is modules > acts > activities and
// missions > sequences > levels, cross-links are id strings. Output uses
// two-space indentation, UTF-8 without escaping, and ends with a newline.

#include <string>
#include <string_view>
#include <variant>

#include "ludoscene/model.hpp"

namespace ludoscene {

inline constexpr std::string_view kScenarioExtension = ".lgs.json";
inline constexpr std::string_view kFormatVersion = "1";

enum class ParseErrorCode { kSyntax, kUnknownKey, kBadEnum };

std::string_view to_string(ParseErrorCode code);  // "E_SYNTAX", ...

struct ParseError {
  ParseErrorCode code;
  std::string path;  // JSON pointer into the document, e.g. "/ludic/0/sequences/1/kind"
  std::string message;
};

std::string format_parse_error(const ParseError& error);

using ParseResult = std::variant<Scenario, ParseError>;

// Strict parse: unknown keys, out-of-set enum spellings and malformed values
// are errors. Dangling references are not checked here (see validate).
ParseResult parse(std::string_view text);

// Canonical text. Throws ScenarioRejected if the scenario has error
// diagnostics.
std::string serialize(const Scenario& scenario);

}  // namespace ludoscene
