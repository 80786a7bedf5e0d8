#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ludoscene/catalog.hpp"
#include "ludoscene/model.hpp"

namespace ludoscene {

struct Fixture {
  std::string name;
  std::string document;  // canonical .lgs.json text
  std::set<PatternId> expected_patterns;
};

// LS, PU, then LG1_before, LG1_after, ... LG4_after.
const std::vector<std::string>& fixture_names();

// Fixture documents are compiled into the library from corpus/*.lgs.json.
// Throws std::invalid_argument for an unknown name.
Fixture fixture(std::string_view name);

// Parses the fixture document; throws std::runtime_error if it does not parse.
Scenario load_fixture(std::string_view name);

// Deterministic in `seed`, free of validation diagnostics, and at most
// `max_elements` elements in total (competences, participants, characters,
// pedagogical and ludic elements, documents). max_elements must be >= 1.
Scenario random_scenario(std::uint64_t seed, int max_elements);

// Number of elements random_scenario counts against its budget.
std::size_t element_count(const Scenario& scenario);

}  // namespace ludoscene
