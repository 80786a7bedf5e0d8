#include "doctest.h"
#include "ludoscene/detector.hpp"
#include "ludoscene/format.hpp"
#include "ludoscene/scaffold.hpp"
#include "support/builders.hpp"

using namespace ludoscene;
using namespace testkit;
using P = PatternId;

TEST_CASE("defaults: valid shell with P1 P2 P3 P5 P6 P7") {
  const auto s = scaffold({});
  CHECK(validate(s).empty());
  CHECK(detect(s).present() == std::set<P>{P::kP1, P::kP2, P::kP3, P::kP5, P::kP6, P::kP7});
}

TEST_CASE("shell content") {
  const auto s = scaffold({});
  REQUIRE(s.participants.size() == 2);
  CHECK(s.participants[0].role == RoleLabel::kTeacher);
  CHECK(s.participants[1].kind == ParticipantKind::kTeam);
  CHECK(s.participants[1].members.size() == 3);
  REQUIRE(s.characters.size() == 2);
  CHECK(s.characters[0].archetype == Archetype::kMentor);
  CHECK(s.characters[0].helps == IdList{"expert-group"});
  CHECK(s.characters[1].archetype == Archetype::kExpertGroup);
  CHECK(s.ludic.front().id == "mission-1");
  CHECK(s.ludic.front().kind == LudicKind::kTeaser);
  CHECK(s.ludic[1].children.front().id == "mission-2-briefing");
  CHECK(s.ludic[1].children.back().kind == LudicKind::kDebriefing);
  CHECK(s.pedagogical.size() == 2);
  CHECK(s.pedagogical[0].objective.rfind("TODO: ", 0) == 0);
  bool flagged = false;
  for (const auto& note : s.meta.notes) {
    flagged = flagged || note.find("placeholder content to replace") != std::string::npos;
  }
  CHECK(flagged);
}

TEST_CASE("no core mission: P1 P3 P5 only") {
  ScaffoldConfig c;
  c.core_mission_count = 0;
  const auto s = scaffold(c);
  CHECK(validate(s).empty());
  const auto r = detect(s);
  CHECK(r.present() == std::set<P>{P::kP1, P::kP3, P::kP5});
  CHECK(r.at(P::kP6).unmet.at(0).subject == "NO_CORE_MISSION");
  CHECK(r.at(P::kP7).unmet.at(0).subject == "NO_CORE_MISSION");
}

TEST_CASE("report mission adds P9") {
  ScaffoldConfig c;
  c.include_report_mission = true;
  const auto s = scaffold(c);
  CHECK(validate(s).empty());
  CHECK(detect(s).present() ==
        std::set<P>{P::kP1, P::kP2, P::kP3, P::kP5, P::kP6, P::kP7, P::kP9});
  CHECK(s.ludic.back().id == "mission-4");
}

TEST_CASE("configuration bounds name the field") {
  auto field_of = [](ScaffoldConfig c) -> std::string {
    try {
      scaffold(c);
    } catch (const ConfigError& e) {
      return e.field();
    }
    return "";
  };
  ScaffoldConfig c;
  c.learner_team_size = 5;
  CHECK(field_of(c) == "learner_team_size");
  c.learner_team_size = 1;
  CHECK(field_of(c) == "learner_team_size");
  c = {};
  c.core_mission_count = -1;
  CHECK(field_of(c) == "core_mission_count");
  c = {};
  c.discipline_labels = {"only"};
  CHECK(field_of(c) == "discipline_labels");
  c.discipline_labels = {"a", "a"};
  CHECK(field_of(c) == "discipline_labels");
  c = {};
  c.seed_competences_per_module = 1;
  CHECK(field_of(c) == "seed_competences_per_module");
}

TEST_CASE("every valid configuration yields a clean, round-tripping shell") {
  for (int team = 2; team <= 4; ++team) {
    for (int core = 0; core <= 5; ++core) {
      for (bool report : {false, true}) {
        for (int seeds = 2; seeds <= 4; ++seeds) {
          ScaffoldConfig c;
          c.learner_team_size = team;
          c.core_mission_count = core;
          c.include_report_mission = report;
          c.seed_competences_per_module = seeds;
          c.discipline_labels = {"physique", "mathématiques", "français"};
          const auto s = scaffold(c);
          CAPTURE(team);
          CAPTURE(core);
          CAPTURE(report);
          REQUIRE(validate(s).empty());
          const auto text = serialize(s);
          CHECK(parse_or_throw(text) == s);
          CHECK(serialize(scaffold(c)) == text);
          const auto present = detect(s).present();
          for (auto id : {P::kP1, P::kP3, P::kP5}) CHECK(present.count(id) == 1);
          if (core >= 1) {
            for (auto id : {P::kP2, P::kP6, P::kP7}) CHECK(present.count(id) == 1);
          }
          CHECK(present.count(P::kP9) == (report ? 1u : 0u));
        }
      }
    }
  }
}
