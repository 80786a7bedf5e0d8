#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ludoscene/model.hpp"

namespace ludoscene {

struct ScaffoldConfig {
  std::string title = "Nouveau jeu epistemique";
  int learner_team_size = 3;  // [2, 4]
  int core_mission_count = 2;
  bool include_report_mission = false;
  std::vector<std::string> discipline_labels{"domain", "methodology"};
  int seed_competences_per_module = 2;
};

class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Throws ConfigError naming the first offending field.
void check_config(const ScaffoldConfig& config);

// Starter scenario: a teacher and a learner team with a mentor and an expert
// group character, a teaser mission, core missions opened by a briefing and
// closed by a debriefing, and optionally a final report mission. Generated ids
// follow a fixed scheme ("mission-1", "mission-2-briefing", ...), so equal
// configs give equal scenarios.
Scenario scaffold(const ScaffoldConfig& config);

}  // namespace ludoscene
