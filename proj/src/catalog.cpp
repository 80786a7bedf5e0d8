#include "ludoscene/catalog.hpp"

#include <stdexcept>

namespace ludoscene {

std::string_view to_string(PatternId id) {
  static constexpr std::string_view kNames[] = {"P1", "P2", "P3", "P4", "P5",
                                                "P6", "P7", "P8", "P9"};
  return kNames[static_cast<int>(id) - 1];
}

std::optional<PatternId> pattern_id_from(std::string_view s) {
  for (auto id : kAllPatterns) {
    if (to_string(id) == s) return id;
  }
  return std::nullopt;
}

std::string_view to_string(Quantifier q) {
  switch (q) {
    case Quantifier::kFirstMission:
      return "first mission";
    case Quantifier::kLastMission:
      return "last mission";
    case Quantifier::kExists:
      return "exists";
    case Quantifier::kForAll:
      return "for all";
  }
  return "?";
}

namespace {

std::vector<PatternRule> build_catalog() {
  using K = ElementKind;
  std::vector<PatternRule> rules;

  rules.push_back({
      PatternId::kP1,
      "Game teaser",
      Quantifier::kFirstMission,
      "The first mission (per the top-level ordering) has kind teaser, stages no pedagogical "
      "element, and is linked to at least one character played by a learner participant and at "
      "least one character played by a teacher participant.",
      {
          {"has_missions", "the scenario has at least one mission"},
          {"first_mission_is_teaser", "the first mission has kind teaser"},
          {"first_mission_not_staged", "the first mission has no staged_refs"},
          {"learner_character_linked",
           "the first mission links a character played by a learner participant"},
          {"teacher_character_linked",
           "the first mission links a character played by a teacher participant"},
      },
      {
          {"first_mission", K::kLudic},
          {"learner_character", K::kCharacter},
          {"teacher_character", K::kCharacter},
      },
  });

  rules.push_back({
      PatternId::kP2,
      "Pluridisciplinary problems",
      Quantifier::kForAll,
      "The scenario has at least one module, and the competence_refs of every module span at "
      "least two distinct discipline labels.",
      {
          {"has_modules", "the scenario has at least one module"},
          {"module_spans_two_disciplines",
           "each module references competences of at least two distinct disciplines"},
      },
      {
          {"module", K::kPedagogical, false, true},
      },
  });

  rules.push_back({
      PatternId::kP3,
      "Personify an expert group",
      Quantifier::kExists,
      "Some team participant with role learner has between 2 and 4 members and is played by a "
      "character whose archetype is expert_group.",
      {
          {"learner_team_exists", "a participant of kind team with role_label learner exists"},
          {"team_size_2_to_4", "the team has 2 to 4 members"},
          {"team_plays_expert_group", "an expert_group character lists the team in plays_refs"},
      },
      {
          {"learner_team", K::kParticipant},
          {"expert_character", K::kCharacter},
      },
  });

  rules.push_back({
      PatternId::kP4,
      "Explore different paths",
      Quantifier::kExists,
      "Some ordering graph (top-level missions, or the sequences of any mission) declares at "
      "least one branch group, with parallel or alternative semantics.",
      {
          {"branch_group_exists", "an ordering graph declares a branch group"},
      },
      {
          {"split", K::kLudic},
          {"branch_entry", K::kLudic, false, true},
      },
  });

  rules.push_back({
      PatternId::kP5,
      "Teacher as support",
      Quantifier::kExists,
      "Some teacher participant plays a mentor character whose helps_refs contain a character "
      "played by a learner participant. A hidden evaluator character also played by that "
      "teacher is reported as optional evidence and is not required.",
      {
          {"teacher_plays_mentor", "a teacher participant plays a mentor character"},
          {"mentor_helps_learner_character",
           "the mentor helps a character played by a learner participant"},
      },
      {
          {"teacher", K::kParticipant},
          {"mentor", K::kCharacter},
          {"helped_character", K::kCharacter},
          {"hidden_evaluator", K::kCharacter, true},
      },
  });

  rules.push_back({
      PatternId::kP6,
      "Briefing",
      Quantifier::kForAll,
      "At least one mission of kind core exists, and for every core mission with at least one "
      "sequence, the first sequence (per that mission's ordering) has kind briefing and its "
      "character_refs include a teacher-played mentor and a learner-played character.",
      {
          {"has_core_missions", "at least one mission has kind core"},
          {"first_sequence_is_briefing", "the first sequence of each core mission is a briefing"},
          {"briefing_links_teacher_mentor", "that briefing links a teacher-played mentor"},
          {"briefing_links_learner_character", "that briefing links a learner-played character"},
      },
      {
          {"core_mission", K::kLudic, false, true},
          {"briefing", K::kLudic, false, true},
          {"mentor", K::kCharacter, false, true},
          {"learner_character", K::kCharacter, false, true},
      },
  });

  rules.push_back({
      PatternId::kP7,
      "Debriefing",
      Quantifier::kForAll,
      "At least one mission of kind core exists, and for every core mission with at least one "
      "sequence, the last sequence (per that mission's ordering) has kind debriefing and its "
      "character_refs include a teacher-played mentor and a learner-played character.",
      {
          {"has_core_missions", "at least one mission has kind core"},
          {"last_sequence_is_debriefing",
           "the last sequence of each core mission is a debriefing"},
          {"debriefing_links_teacher_mentor", "that debriefing links a teacher-played mentor"},
          {"debriefing_links_learner_character",
           "that debriefing links a learner-played character"},
      },
      {
          {"core_mission", K::kLudic, false, true},
          {"debriefing", K::kLudic, false, true},
          {"mentor", K::kCharacter, false, true},
          {"learner_character", K::kCharacter, false, true},
      },
  });

  rules.push_back({
      PatternId::kP8,
      "Multi-viewpoint team work",
      Quantifier::kExists,
      "Some team participant has members carrying at least two distinct viewpoint labels and "
      "appears in the effective participants of at least one mission.",
      {
          {"multi_viewpoint_team_exists",
           "a team's members carry at least two distinct viewpoint labels"},
          {"team_in_mission_participants",
           "the team is among the effective participants of a mission"},
      },
      {
          {"team", K::kParticipant},
          {"mission", K::kLudic},
      },
  });

  rules.push_back({
      PatternId::kP9,
      "Post-game analysis report",
      Quantifier::kLastMission,
      "The last mission (per the top-level ordering) has kind report, or stages a pedagogical "
      "element tagged report-writing.",
      {
          {"has_missions", "the scenario has at least one mission"},
          {"last_mission_reports",
           "the last mission has kind report or stages an element tagged report-writing"},
      },
      {
          {"last_mission", K::kLudic},
          {"report_element", K::kPedagogical, true},
      },
  });
  return rules;
}

}  // namespace

const std::vector<PatternRule>& catalog() {
  static const std::vector<PatternRule> rules = build_catalog();
  return rules;
}

const PatternRule& rule(PatternId id) { return catalog().at(static_cast<std::size_t>(id) - 1); }

std::string render_rule(const PatternRule& r) {
  std::string out;
  out += to_string(r.id);
  out += ". ";
  out += r.name;
  out += "\n  quantifier: ";
  out += to_string(r.quantifier);
  out += "\n  rule: ";
  out += r.statement;
  out += "\n  conditions:\n";
  int n = 1;
  for (const auto& c : r.conditions) {
    out += "    " + std::to_string(n++) + ". " + std::string(c.name) + ": " + std::string(c.text) +
           "\n";
  }
  out += "  evidence:\n";
  for (const auto& e : r.evidence_schema) {
    out += "    - " + std::string(e.role) + " (" + std::string(to_string(e.kind));
    if (e.repeated) out += ", per quantified element";
    if (e.optional) out += ", optional";
    out += ")\n";
  }
  return out;
}

std::string render_rulebook() {
  std::string out;
  for (const auto& r : catalog()) {
    if (!out.empty()) out += "\n";
    out += render_rule(r);
  }
  return out;
}

}  // namespace ludoscene
