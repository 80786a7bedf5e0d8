#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ludoscene/corpus.hpp"
#include "ludoscene/format.hpp"
#include "ludoscene/index.hpp"
#include "support/builders.hpp"

using namespace ludoscene;
using namespace testkit;
using P = PatternId;

TEST_CASE("fixture names and expected sets") {
  CHECK(fixture_names() == std::vector<std::string>{"LS", "PU", "LG1_before", "LG1_after",
                                                    "LG2_before", "LG2_after", "LG3_before",
                                                    "LG3_after", "LG4_before", "LG4_after"});
  CHECK(fixture("LS").expected_patterns ==
        std::set<P>{P::kP1, P::kP2, P::kP3, P::kP4, P::kP5, P::kP6, P::kP7, P::kP8});
  CHECK(fixture("LG2_after").expected_patterns == std::set<P>{P::kP1, P::kP2, P::kP3, P::kP4});
  CHECK_THROWS_AS(fixture("LG5_before"), std::invalid_argument);
}

TEST_CASE("every fixture parses and is validation clean") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(validate(load_fixture(name)).empty());
  }
}

TEST_CASE("PU has a team of three consultants") {
  const auto s = load_fixture("PU");
  bool found = false;
  for (const auto& p : s.participants) {
    found = found || (p.kind == ParticipantKind::kTeam && p.members.size() == 3);
  }
  CHECK(found);
}

TEST_CASE("LS keeps the named characters") {
  const auto s = load_fixture("LS");
  const ScenarioIndex index(s);
  for (const char* id : {"maggy", "kurt", "sydney", "kira"}) CHECK(index.character(id) != nullptr);
  CHECK(index.character("kurt")->archetype == Archetype::kMentor);
}

TEST_CASE("random scenarios are deterministic in the seed") {
  for (std::uint64_t seed : {0ull, 1ull, 42ull, 123456789ull}) {
    CHECK(random_scenario(seed, 30) == random_scenario(seed, 30));
  }
  CHECK_FALSE(random_scenario(1, 30) == random_scenario(2, 30));
}

TEST_CASE("random scenarios respect the budget and are clean") {
  for (int budget : {1, 2, 5, 30}) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto s = random_scenario(seed, budget);
      CAPTURE(seed);
      CAPTURE(budget);
      CHECK(element_count(s) <= static_cast<std::size_t>(budget));
      CHECK(validate(s).empty());
    }
  }
}

TEST_CASE("random scenarios exercise every enum value") {
  std::set<std::string> seen;
  auto walk = [&](const auto& self, const LudicElement& e) -> void {
    seen.insert("level:" + std::string(to_string(e.level)));
    seen.insert("kind:" + std::string(to_string(e.kind)));
    if (e.interaction_mode) seen.insert("mode:" + std::string(to_string(*e.interaction_mode)));
    for (const auto& c : e.children) self(self, c);
  };
  auto walk_ped = [&](const auto& self, const PedagogicalElement& e) -> void {
    seen.insert("ped:" + std::string(to_string(e.level)));
    for (const auto& c : e.children) self(self, c);
  };
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto s = random_scenario(seed, 30);
    for (const auto& p : s.participants) {
      seen.insert("pkind:" + std::string(to_string(p.kind)));
      seen.insert("role:" + std::string(to_string(p.role)));
    }
    for (const auto& c : s.characters) {
      seen.insert("arch:" + std::string(to_string(c.archetype)));
      seen.insert("vis:" + std::string(to_string(c.visibility)));
    }
    for (const auto& g : s.orderings) {
      for (const auto& b : g.branches) seen.insert("sem:" + std::string(to_string(b.semantics)));
    }
    for (const auto& m : s.pedagogical) walk_ped(walk_ped, m);
    for (const auto& m : s.ludic) walk(walk, m);
  }
  const std::vector<std::string> expected{
      "pkind:role",      "pkind:team",        "role:learner",      "role:teacher",
      "arch:expert_group", "arch:mentor",     "arch:evaluator",    "arch:antagonist",
      "arch:other",      "vis:visible",       "vis:hidden",        "sem:parallel",
      "sem:alternative", "ped:module",        "ped:act",           "ped:activity",
      "level:mission",   "level:sequence",    "level:level",       "kind:teaser",
      "kind:core",       "kind:report",       "kind:narrative",    "kind:test",
      "kind:briefing",   "kind:debriefing",   "kind:level",        "mode:competition",
      "mode:collaboration", "mode:solo",
  };
  for (const auto& e : expected) {
    CAPTURE(e);
    CHECK(seen.count(e) == 1);
  }
}
