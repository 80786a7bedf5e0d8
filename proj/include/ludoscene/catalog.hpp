#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ludoscene/index.hpp"

namespace ludoscene {

enum class PatternId { kP1 = 1, kP2, kP3, kP4, kP5, kP6, kP7, kP8, kP9 };

inline constexpr PatternId kAllPatterns[] = {
    PatternId::kP1, PatternId::kP2, PatternId::kP3, PatternId::kP4, PatternId::kP5,
    PatternId::kP6, PatternId::kP7, PatternId::kP8, PatternId::kP9,
};

std::string_view to_string(PatternId id);  // "P1" .. "P9"
std::optional<PatternId> pattern_id_from(std::string_view s);

struct Condition {
  std::string_view name;
  std::string_view text;
};

struct EvidenceRole {
  std::string_view role;
  ElementKind kind;
  bool optional = false;
  bool repeated = false;  // bound once per quantified element
};

enum class Quantifier {
  kFirstMission,  // evaluated on the first mission of the top-level ordering
  kLastMission,
  kExists,
  kForAll,        // reports coverage
};

std::string_view to_string(Quantifier q);

struct PatternRule {
  PatternId id;
  std::string_view name;
  Quantifier quantifier;
  std::string_view statement;
  std::vector<Condition> conditions;
  std::vector<EvidenceRole> evidence_schema;
};

// The closed catalog P1..P9, in id order.
const std::vector<PatternRule>& catalog();
const PatternRule& rule(PatternId id);

std::string render_rule(const PatternRule& rule);
// All rules, blank-line separated; this is the text of `ludoscene rulebook`.
std::string render_rulebook();

}  // namespace ludoscene
