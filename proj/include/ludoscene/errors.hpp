#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ludoscene/validate.hpp"

namespace ludoscene {

// Thrown by operations whose precondition is a scenario free of
// error-severity diagnostics (serialize, detect, propagate via detect).
class ScenarioRejected : public std::runtime_error {
 public:
  explicit ScenarioRejected(std::vector<Diagnostic> diagnostics);

  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Throws ScenarioRejected when validate() reports any error.
void require_valid(const std::vector<Diagnostic>& diagnostics);

}  // namespace ludoscene
