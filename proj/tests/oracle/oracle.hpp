#pragma once

// Reference evaluators for property tests. They work on the bare Scenario
// struct with linear scans and tuple enumeration, sharing no code with the
// library's index, ordering, capillarity or detector.

#include <map>
#include <set>
#include <string>

#include "ludoscene/catalog.hpp"
#include "ludoscene/model.hpp"

namespace oracle {

struct Sets {
  std::set<std::string> competences;
  std::set<std::string> participants;

  bool operator==(const Sets&) const = default;
};

// Verdict per pattern id.
std::map<ludoscene::PatternId, bool> detect(const ludoscene::Scenario& s);

// Direct transfer per ludic element id.
std::map<std::string, Sets> capillarity(const ludoscene::Scenario& s);

// Union over each ludic element and its descendants, per ludic element id.
std::map<std::string, Sets> subtrees(const ludoscene::Scenario& s);

}  // namespace oracle
