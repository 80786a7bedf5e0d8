#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ludoscene/catalog.hpp"
#include "ludoscene/model.hpp"

namespace ludoscene {

struct EvidenceBinding {
  std::string role;
  ElementId id;

  bool operator==(const EvidenceBinding&) const = default;
};

// A condition that failed. `subject` is the element path of the offending
// element, or a reason code (NO_MISSION, NO_CORE_MISSION, ...) when there is
// no element to point at. `closeness` in [0, 1] ranks near misses: the
// rule's coverage for universal rules, otherwise the fraction of the rule's
// conditions the best candidate satisfies.
struct UnmetCondition {
  std::string condition;
  std::string subject;
  double closeness = 0.0;
  std::string hint;

  bool operator==(const UnmetCondition&) const = default;
};

struct PatternFinding {
  PatternId id = PatternId::kP1;
  bool present = false;
  std::vector<EvidenceBinding> evidence;
  std::vector<UnmetCondition> unmet;
  // Fraction of quantified elements satisfying the rule; universal rules only.
  std::optional<double> coverage;

  bool operator==(const PatternFinding&) const = default;
};

struct PatternReport {
  std::vector<PatternFinding> findings;  // one per catalog rule, P1..P9

  const PatternFinding& at(PatternId id) const;
  std::set<PatternId> present() const;

  bool operator==(const PatternReport&) const = default;
};

struct PatternDiff {
  std::set<PatternId> before;
  std::set<PatternId> after;
  std::set<PatternId> added;
  std::set<PatternId> removed;

  bool operator==(const PatternDiff&) const = default;
};

// Evaluates every catalog rule. Throws ScenarioRejected if the scenario has
// error diagnostics.
PatternReport detect(const Scenario& scenario);

PatternDiff diff(const PatternReport& before, const PatternReport& after);

// Present: the evidence table. Absent: the first failing condition and the
// nearest-miss hint (the unmet condition with the highest closeness).
std::string explain(const PatternReport& report, PatternId id);
// Throws std::invalid_argument for anything but "P1".."P9".
std::string explain(const PatternReport& report, std::string_view pattern_id);

std::string format_pattern_set(const std::set<PatternId>& ids);  // "P1 P5 P7"

}  // namespace ludoscene
