#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ludoscene/model.hpp"

namespace ludoscene {

enum class Severity { kError, kWarning };

enum class DiagnosticCode {
  kDuplicateId,
  kDanglingRef,
  kMissingCompetence,
  kLevelMismatch,
  kTeamEmpty,
  kOrderCycle,
  kBadBranch,
  kSelfHelp,
  kHiddenNonEvaluator,
  kUnorderedSiblings,
};

std::string_view to_string(DiagnosticCode code);  // "E_DUPLICATE_ID", ...
std::string_view to_string(Severity severity);
Severity severity_of(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  Severity severity;
  std::string path;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

// Reports every structural problem of the scenario, sorted by element path and
// then code. Never throws; an empty result means the scenario is well formed.
std::vector<Diagnostic> validate(const Scenario& scenario);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

// "E_DANGLING_REF error ludic/m1: staged ref 'x' does not resolve"
std::string format_diagnostic(const Diagnostic& d);

}  // namespace ludoscene
