#include "ludoscene/errors.hpp"

namespace ludoscene {

namespace {

std::string summarize(const std::vector<Diagnostic>& diagnostics) {
  std::size_t errors = 0;
  const Diagnostic* first = nullptr;
  for (const auto& d : diagnostics) {
    if (d.severity != Severity::kError) continue;
    if (first == nullptr) first = &d;
    ++errors;
  }
  std::string out = "scenario has " + std::to_string(errors) + " error diagnostic(s)";
  if (first != nullptr) out += "; first: " + format_diagnostic(*first);
  return out;
}

}  // namespace

ScenarioRejected::ScenarioRejected(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

void require_valid(const std::vector<Diagnostic>& diagnostics) {
  if (has_errors(diagnostics)) throw ScenarioRejected(diagnostics);
}

}  // namespace ludoscene
