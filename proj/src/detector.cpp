#include "ludoscene/detector.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "ludoscene/capillarity.hpp"
#include "ludoscene/errors.hpp"
#include "ludoscene/index.hpp"
#include "ludoscene/ordering.hpp"
#include "ludoscene/validate.hpp"

namespace ludoscene {

const PatternFinding& PatternReport::at(PatternId id) const {
  for (const auto& f : findings) {
    if (f.id == id) return f;
  }
  throw std::out_of_range("pattern not in report: " + std::string(to_string(id)));
}

std::set<PatternId> PatternReport::present() const {
  std::set<PatternId> out;
  for (const auto& f : findings) {
    if (f.present) out.insert(f.id);
  }
  return out;
}

std::string format_pattern_set(const std::set<PatternId>& ids) {
  std::string out;
  for (auto id : ids) {
    if (!out.empty()) out += ' ';
    out += to_string(id);
  }
  return out;
}

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

class Detector {
 public:
  explicit Detector(const Scenario& scenario)
      : s_(scenario), index_(scenario), effective_(propagate(scenario)) {
    missions_ = ordered_children(s_, "").value_or(std::vector<const LudicElement*>{});
  }

  PatternReport run() {
    PatternReport report;
    report.findings = {teaser(),  pluridisciplinary(), expert_team(),
                       branching(), teacher_support(),  framing(PatternId::kP6),
                       framing(PatternId::kP7), multi_viewpoint(), post_game_report()};
    return report;
  }

 private:
  std::string path(const ElementId& id) const {
    const auto* r = index_.find(id);
    return r ? r->path : id;
  }

  bool is_role(const ElementId& participant, RoleLabel role) const {
    const auto* p = index_.participant(participant);
    return p != nullptr && p->role == role;
  }

  bool played_by(const Character& c, RoleLabel role) const {
    return std::any_of(c.plays.begin(), c.plays.end(),
                       [&](const ElementId& p) { return is_role(p, role); });
  }

  bool teacher_mentor(const Character& c) const {
    return c.archetype == Archetype::kMentor && played_by(c, RoleLabel::kTeacher);
  }

  // First character linked from `refs` satisfying `pred`.
  template <typename Pred>
  const Character* first_linked(const IdList& refs, Pred pred) const {
    for (const auto& ref : refs) {
      const auto* c = index_.character(ref);
      if (c != nullptr && pred(*c)) return c;
    }
    return nullptr;
  }

  static void mark(PatternFinding& f) { f.present = f.unmet.empty(); }

  PatternFinding teaser() const {
    PatternFinding f;
    f.id = PatternId::kP1;
    if (missions_.empty()) {
      f.unmet.push_back({"has_missions", "NO_MISSION", 0.0,
                         "add a teaser mission at the start of the scenario"});
      return f;
    }
    const LudicElement& first = *missions_.front();
    const auto* learner = first_linked(first.characters, [&](const Character& c) {
      return played_by(c, RoleLabel::kLearner);
    });
    const auto* teacher = first_linked(first.characters, [&](const Character& c) {
      return played_by(c, RoleLabel::kTeacher);
    });
    struct Check {
      const char* name;
      bool ok;
      std::string hint;
    };
    const Check checks[] = {
        {"first_mission_is_teaser", first.kind == LudicKind::kTeaser,
         "give the first mission " + quoted(first.id) + " kind teaser"},
        {"first_mission_not_staged", first.staged.empty(),
         "move the staged elements of " + quoted(first.id) + " to a later mission"},
        {"learner_character_linked", learner != nullptr,
         "link mission " + quoted(first.id) + " to a character played by the learners"},
        {"teacher_character_linked", teacher != nullptr,
         "link mission " + quoted(first.id) + " to a character played by the teacher"},
    };
    int satisfied = 1;
    for (const auto& c : checks) satisfied += c.ok ? 1 : 0;
    const double closeness = satisfied / 5.0;
    for (const auto& c : checks) {
      if (!c.ok) f.unmet.push_back({c.name, path(first.id), closeness, c.hint});
    }
    mark(f);
    if (f.present) {
      f.evidence = {{"first_mission", first.id},
                    {"learner_character", learner->id},
                    {"teacher_character", teacher->id}};
    }
    return f;
  }

  PatternFinding pluridisciplinary() const {
    PatternFinding f;
    f.id = PatternId::kP2;
    if (s_.pedagogical.empty()) {
      f.coverage = 0.0;
      f.unmet.push_back({"has_modules", "NO_MODULE", 0.0,
                         "add a module linked to competences of two disciplines"});
      return f;
    }
    std::vector<const PedagogicalElement*> failing;
    for (const auto& module : s_.pedagogical) {
      std::set<std::string> disciplines;
      for (const auto& ref : module.competences) {
        if (const auto* c = index_.competence(ref)) disciplines.insert(c->discipline);
      }
      if (disciplines.size() >= 2) {
        f.evidence.push_back({"module", module.id});
      } else {
        failing.push_back(&module);
      }
    }
    const double total = static_cast<double>(s_.pedagogical.size());
    f.coverage = (total - static_cast<double>(failing.size())) / total;
    for (const auto* m : failing) {
      f.unmet.push_back({"module_spans_two_disciplines", path(m->id), *f.coverage,
                         "add a competence of a second discipline to module " + quoted(m->id)});
    }
    mark(f);
    if (!f.present) f.evidence.clear();
    return f;
  }

  PatternFinding expert_team() const {
    PatternFinding f;
    f.id = PatternId::kP3;
    const Participant* best = nullptr;
    int best_score = -1;
    bool best_size = false;
    const Character* best_expert = nullptr;
    for (const auto& p : s_.participants) {
      if (p.kind != ParticipantKind::kTeam || p.role != RoleLabel::kLearner) continue;
      const bool size_ok = p.members.size() >= 2 && p.members.size() <= 4;
      const Character* expert = nullptr;
      for (const auto& c : s_.characters) {
        if (c.archetype == Archetype::kExpertGroup &&
            std::find(c.plays.begin(), c.plays.end(), p.id) != c.plays.end()) {
          expert = &c;
          break;
        }
      }
      const int score = (size_ok ? 1 : 0) + (expert ? 1 : 0);
      if (score > best_score) {
        best = &p;
        best_score = score;
        best_size = size_ok;
        best_expert = expert;
      }
      if (score == 2) break;
    }
    if (best == nullptr) {
      f.unmet.push_back({"learner_team_exists", "NO_LEARNER_TEAM", 0.0,
                         "group the learners into a team participant of 2 to 4 members"});
      return f;
    }
    const double closeness = (1 + best_score) / 3.0;
    if (!best_size) {
      f.unmet.push_back({"team_size_2_to_4", path(best->id), closeness,
                         "give team " + quoted(best->id) + " between 2 and 4 members"});
    }
    if (best_expert == nullptr) {
      f.unmet.push_back({"team_plays_expert_group", path(best->id), closeness,
                         "have team " + quoted(best->id) + " play an expert_group character"});
    }
    mark(f);
    if (f.present) f.evidence = {{"learner_team", best->id}, {"expert_character", best_expert->id}};
    return f;
  }

  PatternFinding branching() const {
    PatternFinding f;
    f.id = PatternId::kP4;
    for (const auto& g : s_.orderings) {
      if (g.branches.empty()) continue;
      const auto& b = g.branches.front();
      f.evidence.push_back({"split", b.split});
      for (const auto& e : b.entries) f.evidence.push_back({"branch_entry", e});
      break;
    }
    if (f.evidence.empty()) {
      f.unmet.push_back(
          {"branch_group_exists", "NO_BRANCH", 0.0,
           "declare a parallel or alternative branch group in a mission or sequence ordering"});
    }
    mark(f);
    return f;
  }

  PatternFinding teacher_support() const {
    PatternFinding f;
    f.id = PatternId::kP5;
    const Participant* near_teacher = nullptr;
    const Character* near_mentor = nullptr;
    for (const auto& t : s_.participants) {
      if (t.role != RoleLabel::kTeacher) continue;
      for (const auto& h : s_.characters) {
        if (h.archetype != Archetype::kMentor ||
            std::find(h.plays.begin(), h.plays.end(), t.id) == h.plays.end()) {
          continue;
        }
        if (near_mentor == nullptr) {
          near_teacher = &t;
          near_mentor = &h;
        }
        const auto* helped = first_linked(h.helps, [&](const Character& c) {
          return played_by(c, RoleLabel::kLearner);
        });
        if (helped == nullptr) continue;
        f.evidence = {{"teacher", t.id}, {"mentor", h.id}, {"helped_character", helped->id}};
        for (const auto& e : s_.characters) {
          if (e.archetype == Archetype::kEvaluator && e.visibility == Visibility::kHidden &&
              std::find(e.plays.begin(), e.plays.end(), t.id) != e.plays.end()) {
            f.evidence.push_back({"hidden_evaluator", e.id});
            break;
          }
        }
        f.present = true;
        return f;
      }
    }
    if (near_mentor == nullptr) {
      f.unmet.push_back({"teacher_plays_mentor", "NO_TEACHER_MENTOR", 0.0,
                         "have a teacher participant play a mentor character"});
    } else {
      f.unmet.push_back({"mentor_helps_learner_character", path(near_mentor->id), 0.5,
                         "let mentor " + quoted(near_mentor->id) + " (played by " +
                             quoted(near_teacher->id) +
                             ") help a character played by the learners"});
    }
    return f;
  }

  // P6 (first sequence is a briefing) and P7 (last sequence is a debriefing).
  PatternFinding framing(PatternId id) const {
    const bool opening = id == PatternId::kP6;
    const LudicKind wanted = opening ? LudicKind::kBriefing : LudicKind::kDebriefing;
    const std::string seq_role = opening ? "briefing" : "debriefing";
    const std::string position = opening ? "first" : "last";
    PatternFinding f;
    f.id = id;

    std::vector<const LudicElement*> core;
    for (const auto& m : s_.ludic) {
      if (m.kind == LudicKind::kCore) core.push_back(&m);
    }
    if (core.empty()) {
      f.coverage = 0.0;
      f.unmet.push_back({"has_core_missions", "NO_CORE_MISSION", 0.0,
                         "add a core mission opened by a briefing and closed by a debriefing"});
      return f;
    }

    struct Failure {
      const LudicElement* mission;
      const char* condition;
      std::string hint;
    };
    std::vector<Failure> failures;
    std::size_t quantified = 0;
    std::size_t compliant = 0;
    for (const auto* m : core) {
      if (m->children.empty()) {
        // nothing to quantify, but the mission still backs the finding
        f.evidence.push_back({"core_mission", m->id});
        continue;
      }
      ++quantified;
      const auto order = ordered_children(s_, m->id);
      const LudicElement& seq = opening ? *order->front() : *order->back();
      const auto* mentor = first_linked(seq.characters,
                                        [&](const Character& c) { return teacher_mentor(c); });
      const auto* learner = first_linked(seq.characters, [&](const Character& c) {
        return played_by(c, RoleLabel::kLearner);
      });
      const std::size_t before = failures.size();
      if (seq.kind != wanted) {
        failures.push_back({m, opening ? "first_sequence_is_briefing" : "last_sequence_is_debriefing",
                            "make the " + position + " sequence of mission " + quoted(m->id) +
                                " a " + seq_role});
      }
      if (mentor == nullptr) {
        failures.push_back({m, opening ? "briefing_links_teacher_mentor"
                                       : "debriefing_links_teacher_mentor",
                            "link sequence " + quoted(seq.id) + " of mission " + quoted(m->id) +
                                " to a mentor played by the teacher"});
      }
      if (learner == nullptr) {
        failures.push_back({m, opening ? "briefing_links_learner_character"
                                       : "debriefing_links_learner_character",
                            "link sequence " + quoted(seq.id) + " of mission " + quoted(m->id) +
                                " to a character played by the learners"});
      }
      if (failures.size() == before) {
        ++compliant;
        f.evidence.push_back({"core_mission", m->id});
        f.evidence.push_back({seq_role, seq.id});
        f.evidence.push_back({"mentor", mentor->id});
        f.evidence.push_back({"learner_character", learner->id});
      }
    }
    f.coverage = quantified == 0 ? 1.0
                                 : static_cast<double>(compliant) / static_cast<double>(quantified);
    for (auto& fail : failures) {
      f.unmet.push_back({fail.condition, path(fail.mission->id), *f.coverage, std::move(fail.hint)});
    }
    mark(f);
    if (!f.present) f.evidence.clear();
    return f;
  }

  PatternFinding multi_viewpoint() const {
    PatternFinding f;
    f.id = PatternId::kP8;
    const Participant* near = nullptr;
    for (const auto& p : s_.participants) {
      if (p.kind != ParticipantKind::kTeam) continue;
      std::set<std::string> viewpoints;
      for (const auto& m : p.members) {
        if (m.viewpoint) viewpoints.insert(*m.viewpoint);
      }
      if (viewpoints.size() < 2) continue;
      for (const auto& mission : s_.ludic) {
        const auto it = effective_.find(mission.id);
        if (it != effective_.end() && it->second.participants.count(p.id) != 0) {
          f.evidence = {{"team", p.id}, {"mission", mission.id}};
          f.present = true;
          return f;
        }
      }
      if (near == nullptr) near = &p;
    }
    if (near == nullptr) {
      f.unmet.push_back({"multi_viewpoint_team_exists", "NO_MULTI_VIEWPOINT_TEAM", 0.0,
                         "compose a team whose members hold at least two distinct viewpoints"});
    } else {
      f.unmet.push_back({"team_in_mission_participants", path(near->id), 0.5,
                         "stage a module involving team " + quoted(near->id) +
                             " in a mission, or link a character it plays to a mission"});
    }
    return f;
  }

  PatternFinding post_game_report() const {
    PatternFinding f;
    f.id = PatternId::kP9;
    if (missions_.empty()) {
      f.unmet.push_back({"has_missions", "NO_MISSION", 0.0,
                         "add a final report mission after the game"});
      return f;
    }
    const LudicElement& last = *missions_.back();
    const PedagogicalElement* report_element = nullptr;
    for (const auto& ref : last.staged) {
      const auto* e = index_.pedagogical(ref);
      if (e != nullptr && e->has_tag(kReportWritingTag)) {
        report_element = e;
        break;
      }
    }
    if (last.kind != LudicKind::kReport && report_element == nullptr) {
      f.unmet.push_back({"last_mission_reports", path(last.id), 0.5,
                         "make the last mission " + quoted(last.id) +
                             " a report mission, or stage a module tagged report-writing there"});
      return f;
    }
    f.present = true;
    f.evidence.push_back({"last_mission", last.id});
    if (report_element != nullptr) f.evidence.push_back({"report_element", report_element->id});
    return f;
  }

  const Scenario& s_;
  ScenarioIndex index_;
  EffectiveSets effective_;
  std::vector<const LudicElement*> missions_;
};

std::string format_ratio(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

PatternReport detect(const Scenario& scenario) {
  require_valid(validate(scenario));
  return Detector(scenario).run();
}

PatternDiff diff(const PatternReport& before, const PatternReport& after) {
  PatternDiff d;
  d.before = before.present();
  d.after = after.present();
  std::set_difference(d.after.begin(), d.after.end(), d.before.begin(), d.before.end(),
                      std::inserter(d.added, d.added.end()));
  std::set_difference(d.before.begin(), d.before.end(), d.after.begin(), d.after.end(),
                      std::inserter(d.removed, d.removed.end()));
  return d;
}

std::string explain(const PatternReport& report, PatternId id) {
  const auto& f = report.at(id);
  const auto& r = rule(id);
  std::string out;
  out += to_string(id);
  out += " ";
  out += r.name;
  out += f.present ? ": present\n" : ": absent\n";
  if (f.coverage) out += "  coverage (extension): " + format_ratio(*f.coverage) + "\n";
  if (f.present) {
    std::size_t width = 4;
    for (const auto& e : f.evidence) width = std::max(width, e.role.size());
    auto row = [&](const std::string& role, const std::string& id_text) {
      out += "  " + role + std::string(width - role.size() + 2, ' ') + id_text + "\n";
    };
    row("role", "element");
    for (const auto& e : f.evidence) row(e.role, e.id);
    return out;
  }
  const auto& first = f.unmet.front();
  out += "  first failing condition: " + first.condition + " (" + first.subject + ")\n";
  const UnmetCondition* nearest = &f.unmet.front();
  for (const auto& u : f.unmet) {
    if (u.closeness > nearest->closeness) nearest = &u;
  }
  out += "  nearest miss: " + nearest->condition + " at " + nearest->subject + ", closeness " +
         format_ratio(nearest->closeness) + "\n";
  out += "  hint: " + nearest->hint + "\n";
  return out;
}

std::string explain(const PatternReport& report, std::string_view pattern_id) {
  const auto id = pattern_id_from(pattern_id);
  if (!id) throw std::invalid_argument("unknown pattern id '" + std::string(pattern_id) + "'");
  return explain(report, *id);
}

}  // namespace ludoscene
