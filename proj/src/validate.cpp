#include "ludoscene/validate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "ludoscene/index.hpp"
#include "ludoscene/ordering.hpp"

namespace ludoscene {

std::string_view to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kDuplicateId:
      return "E_DUPLICATE_ID";
    case DiagnosticCode::kDanglingRef:
      return "E_DANGLING_REF";
    case DiagnosticCode::kMissingCompetence:
      return "E_MISSING_COMPETENCE";
    case DiagnosticCode::kLevelMismatch:
      return "E_LEVEL_MISMATCH";
    case DiagnosticCode::kTeamEmpty:
      return "E_TEAM_EMPTY";
    case DiagnosticCode::kOrderCycle:
      return "E_ORDER_CYCLE";
    case DiagnosticCode::kBadBranch:
      return "E_BAD_BRANCH";
    case DiagnosticCode::kSelfHelp:
      return "E_SELF_HELP";
    case DiagnosticCode::kHiddenNonEvaluator:
      return "W_HIDDEN_NON_EVALUATOR";
    case DiagnosticCode::kUnorderedSiblings:
      return "W_UNORDERED_SIBLINGS";
  }
  return "?";
}

std::string_view to_string(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

Severity severity_of(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::kHiddenNonEvaluator:
    case DiagnosticCode::kUnorderedSiblings:
      return Severity::kWarning;
    default:
      return Severity::kError;
  }
}

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string out;
  out += to_string(d.code);
  out += ' ';
  out += to_string(d.severity);
  out += ' ';
  out += d.path;
  out += ": ";
  out += d.message;
  return out;
}

namespace {

std::string quoted(std::string_view s) {
  std::string out = "'";
  out += s;
  out += "'";
  return out;
}

class Validator {
 public:
  explicit Validator(const Scenario& scenario) : scenario_(scenario), index_(scenario) {}

  std::vector<Diagnostic> run() {
    check_duplicates();
    for (const auto& p : scenario_.participants) check_participant(p);
    for (const auto& c : scenario_.characters) check_character(c);
    for (const auto& m : scenario_.pedagogical) {
      check_pedagogical(m, PedagogicalLevel::kModule, "pedagogical");
    }
    for (const auto& m : scenario_.ludic) check_ludic(m, LudicLevel::kMission, "ludic");
    check_orderings();
    check_documents();
    std::stable_sort(out_.begin(), out_.end(), [](const Diagnostic& a, const Diagnostic& b) {
      if (a.path != b.path) return a.path < b.path;
      return to_string(a.code) < to_string(b.code);
    });
    return std::move(out_);
  }

 private:
  void report(DiagnosticCode code, std::string path, std::string message) {
    out_.push_back({code, severity_of(code), std::move(path), std::move(message)});
  }

  // Reference must resolve to an element of the expected kind.
  template <typename T>
  const T* expect_ref(const ElementId& ref, std::string_view field, std::string_view what,
                      const std::string& path) {
    const auto* record = index_.find(ref);
    const T* target = record ? record->as<T>() : nullptr;
    if (target == nullptr) {
      report(DiagnosticCode::kDanglingRef, path,
             std::string(field) + " ref " + quoted(ref) + " does not resolve to a " +
                 std::string(what));
    }
    return target;
  }

  void check_duplicates() {
    std::unordered_set<std::string> seen;
    for (const auto& r : index_.records()) {
      const auto& id = std::visit([](const auto* e) -> const ElementId& { return e->id; },
                                  r.element);
      if (!seen.insert(id).second) {
        report(DiagnosticCode::kDuplicateId, r.path, "id " + quoted(id) + " is already used");
      }
    }
  }

  void check_participant(const Participant& p) {
    if (p.kind == ParticipantKind::kTeam && p.members.empty()) {
      report(DiagnosticCode::kTeamEmpty, "participants/" + p.id, "team has no members");
    }
  }

  void check_character(const Character& c) {
    const std::string path = "characters/" + c.id;
    for (const auto& ref : c.plays) expect_ref<Participant>(ref, "plays", "participant", path);
    for (const auto& ref : c.helps) {
      if (ref == c.id) {
        report(DiagnosticCode::kSelfHelp, path, "character helps itself");
        continue;
      }
      expect_ref<Character>(ref, "helps", "character", path);
    }
    if (c.visibility == Visibility::kHidden && c.archetype != Archetype::kEvaluator) {
      report(DiagnosticCode::kHiddenNonEvaluator, path,
             "hidden visibility on a " + std::string(to_string(c.archetype)) + " character");
    }
  }

  void check_pedagogical(const PedagogicalElement& e, PedagogicalLevel expected,
                         const std::string& parent_path) {
    const std::string path = parent_path + "/" + e.id;
    if (e.level != expected) {
      report(DiagnosticCode::kLevelMismatch, path,
             std::string(to_string(e.level)) + " contained where a " +
                 std::string(to_string(expected)) + " is required");
    }
    if (e.competences.empty()) {
      report(DiagnosticCode::kMissingCompetence, path,
             std::string(to_string(e.level)) + " has no competence");
    }
    for (const auto& ref : e.competences) {
      expect_ref<Competence>(ref, "competence", "competence", path);
    }
    for (const auto& ref : e.participants) {
      expect_ref<Participant>(ref, "participant", "participant", path);
    }
    const auto child_level = expected == PedagogicalLevel::kModule ? PedagogicalLevel::kAct
                                                                   : PedagogicalLevel::kActivity;
    for (const auto& child : e.children) {
      if (expected == PedagogicalLevel::kActivity) {
        report(DiagnosticCode::kLevelMismatch, path + "/" + child.id,
               "activities cannot contain elements");
        continue;
      }
      check_pedagogical(child, child_level, path);
    }
  }

  void check_ludic(const LudicElement& e, LudicLevel expected, const std::string& parent_path) {
    const std::string path = parent_path + "/" + e.id;
    if (e.level != expected) {
      report(DiagnosticCode::kLevelMismatch, path,
             std::string(to_string(e.level)) + " contained where a " +
                 std::string(to_string(expected)) + " is required");
    } else if (!kind_allowed_at(e.kind, e.level)) {
      report(DiagnosticCode::kLevelMismatch, path,
             "kind " + std::string(to_string(e.kind)) + " is not a " +
                 std::string(to_string(e.level)) + " kind");
    }
    for (const auto& ref : e.staged) {
      const auto* target = expect_ref<PedagogicalElement>(ref, "staged", "pedagogical element",
                                                          path);
      if (target != nullptr && target->level != staged_level_for(e.level)) {
        report(DiagnosticCode::kLevelMismatch, path,
               std::string(to_string(e.level)) + " stages " + std::string(to_string(target->level)) +
                   " " + quoted(ref) + "; only a " +
                   std::string(to_string(staged_level_for(e.level))) + " may be staged here");
      }
    }
    for (const auto& ref : e.characters) {
      expect_ref<Character>(ref, "character", "character", path);
    }
    const auto child_level =
        expected == LudicLevel::kMission ? LudicLevel::kSequence : LudicLevel::kLevel;
    for (const auto& child : e.children) {
      if (expected == LudicLevel::kLevel) {
        report(DiagnosticCode::kLevelMismatch, path + "/" + child.id,
               "levels cannot contain elements");
        continue;
      }
      check_ludic(child, child_level, path);
    }
    if (e.level == LudicLevel::kMission && expected == LudicLevel::kMission) {
      check_unordered(e.id, e.children, path);
    }
  }

  void check_unordered(const ElementId& owner, const std::vector<LudicElement>& children,
                       const std::string& path) {
    if (children.size() < 2) return;
    const auto* declared = declared_ordering(scenario_, owner);
    std::size_t missing = 0;
    for (const auto& c : children) {
      if (declared == nullptr ||
          std::find(declared->nodes.begin(), declared->nodes.end(), c.id) == declared->nodes.end()) {
        ++missing;
      }
    }
    if (missing == 0) return;
    const char* what = owner.empty() ? "missions" : "sequences";
    if (declared == nullptr) {
      report(DiagnosticCode::kUnorderedSiblings, path,
             std::string("no ordering declared for ") + what + "; document order assumed");
    } else {
      report(DiagnosticCode::kUnorderedSiblings, path,
             std::to_string(missing) + " " + what +
                 " missing from the declared ordering; document order assumed");
    }
  }

  void check_orderings() {
    check_unordered("", scenario_.ludic, "ludic");
    std::set<ElementId> owners;
    for (const auto& g : scenario_.orderings) {
      const std::string path =
          "orderings/" + (g.owner.empty() ? std::string("(missions)") : g.owner);
      if (!owners.insert(g.owner).second) {
        report(DiagnosticCode::kDuplicateId, path, "ordering already declared for this owner");
        continue;
      }
      const std::vector<LudicElement>* children = nullptr;
      if (g.owner.empty()) {
        children = &scenario_.ludic;
      } else {
        const auto* owner = index_.ludic(g.owner);
        if (owner == nullptr || owner->level != LudicLevel::kMission) {
          report(DiagnosticCode::kDanglingRef, path,
                 "owner " + quoted(g.owner) + " does not resolve to a mission");
          continue;
        }
        children = &owner->children;
      }
      check_graph(g, *children, path);
    }
  }

  void check_graph(const OrderingGraph& g, const std::vector<LudicElement>& children,
                   const std::string& path) {
    std::unordered_set<std::string> sibling_ids;
    for (const auto& c : children) sibling_ids.insert(c.id);
    std::unordered_set<std::string> nodes;
    const std::unordered_set<std::string> declared(g.nodes.begin(), g.nodes.end());
    for (const auto& n : g.nodes) {
      if (sibling_ids.count(n) == 0) {
        report(DiagnosticCode::kDanglingRef, path,
               "node " + quoted(n) + " is not a child of the owner");
      } else if (!nodes.insert(n).second) {
        report(DiagnosticCode::kDuplicateId, path, "node " + quoted(n) + " listed twice");
      }
    }
    // A listed node that is not a child was reported above; say nothing more
    // about it, just keep it out of the cycle check.
    auto known = [&](const ElementId& id, std::string_view role) {
      if (nodes.count(id) != 0) return true;
      if (declared.count(id) == 0) {
        report(DiagnosticCode::kDanglingRef, path,
               std::string(role) + " " + quoted(id) + " is not a node of this ordering");
      }
      return false;
    };

    // Acyclicity is checked over edges whose endpoints are both known nodes.
    OrderingGraph effective;
    effective.nodes.assign(g.nodes.begin(), g.nodes.end());
    for (const auto& e : g.edges) {
      bool ok = known(e.before, "edge source");
      ok = known(e.after, "edge target") && ok;
      if (ok) effective.edges.push_back(e);
    }
    for (const auto& b : g.branches) {
      const bool split_ok = known(b.split, "branch split");
      for (const auto& entry : b.entries) {
        if (known(entry, "branch entry")) {
          if (split_ok && entry != b.split) effective.edges.push_back({b.split, entry});
        }
      }
      if (std::find(b.entries.begin(), b.entries.end(), b.split) != b.entries.end()) {
        report(DiagnosticCode::kBadBranch, path,
               "branch at " + quoted(b.split) + " lists its own split node as an entry");
      }
      if (std::set<ElementId>(b.entries.begin(), b.entries.end()).size() < 2) {
        report(DiagnosticCode::kBadBranch, path,
               "branch at " + quoted(b.split) + " has fewer than two distinct entries");
      }
    }
    if (!linear_order(effective)) {
      report(DiagnosticCode::kOrderCycle, path, "precedence edges form a cycle");
    }
  }

  void check_documents() {
    for (const auto& d : scenario_.documents) {
      expect_ref<LudicElement>(d.produced_in, "produced_in", "ludic element",
                               "documents/" + d.id);
    }
  }

  const Scenario& scenario_;
  ScenarioIndex index_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> validate(const Scenario& scenario) { return Validator(scenario).run(); }

}  // namespace ludoscene
