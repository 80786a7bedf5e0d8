#include "oracle.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using namespace ludoscene;

namespace {

bool contains(const IdList& list, const std::string& id) {
  return std::find(list.begin(), list.end(), id) != list.end();
}

void flatten(const std::vector<PedagogicalElement>& in, std::vector<const PedagogicalElement*>& out) {
  for (const auto& e : in) {
    out.push_back(&e);
    flatten(e.children, out);
  }
}

void flatten(const std::vector<LudicElement>& in, std::vector<const LudicElement*>& out) {
  for (const auto& e : in) {
    out.push_back(&e);
    flatten(e.children, out);
  }
}

// Repeatedly emits the earliest child all of whose predecessors are emitted.
std::vector<const LudicElement*> order(const Scenario& s, const std::string& owner,
                                       const std::vector<LudicElement>& children) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& g : s.orderings) {
    if (g.owner != owner) continue;
    for (const auto& e : g.edges) edges.emplace_back(e.before, e.after);
    for (const auto& b : g.branches) {
      for (const auto& entry : b.entries) edges.emplace_back(b.split, entry);
    }
    break;
  }
  std::vector<bool> done(children.size(), false);
  std::vector<const LudicElement*> out;
  while (out.size() < children.size()) {
    bool progressed = false;
    for (std::size_t i = 0; i < children.size() && !progressed; ++i) {
      if (done[i]) continue;
      bool ready = true;
      for (const auto& [a, b] : edges) {
        if (b != children[i].id) continue;
        for (std::size_t j = 0; j < children.size(); ++j) {
          if (!done[j] && children[j].id == a) ready = false;
        }
      }
      if (ready) {
        done[i] = true;
        out.push_back(&children[i]);
        progressed = true;
      }
    }
    if (!progressed) return {};
  }
  return out;
}

struct World {
  const Scenario& s;
  std::vector<const PedagogicalElement*> peds;

  explicit World(const Scenario& scenario) : s(scenario) { flatten(s.pedagogical, peds); }

  // Character c is linked from `refs` and played by some participant with `role`.
  bool linked_played_by(const IdList& refs, RoleLabel role) const {
    for (const auto& c : s.characters) {
      if (!contains(refs, c.id)) continue;
      for (const auto& p : s.participants) {
        if (p.role == role && contains(c.plays, p.id)) return true;
      }
    }
    return false;
  }

  bool linked_teacher_mentor(const IdList& refs) const {
    for (const auto& h : s.characters) {
      if (!contains(refs, h.id) || h.archetype != Archetype::kMentor) continue;
      for (const auto& t : s.participants) {
        if (t.role == RoleLabel::kTeacher && contains(h.plays, t.id)) return true;
      }
    }
    return false;
  }

  bool p1() const {
    const auto missions = order(s, "", s.ludic);
    if (missions.empty()) return false;
    const auto& m = *missions.front();
    return m.kind == LudicKind::kTeaser && m.staged.empty() &&
           linked_played_by(m.characters, RoleLabel::kLearner) &&
           linked_played_by(m.characters, RoleLabel::kTeacher);
  }

  bool p2() const {
    if (s.pedagogical.empty()) return false;
    for (const auto& m : s.pedagogical) {
      std::set<std::string> disciplines;
      for (const auto& c : s.competences) {
        if (contains(m.competences, c.id)) disciplines.insert(c.discipline);
      }
      if (disciplines.size() < 2) return false;
    }
    return true;
  }

  bool p3() const {
    for (const auto& p : s.participants) {
      for (const auto& c : s.characters) {
        if (p.kind == ParticipantKind::kTeam && p.role == RoleLabel::kLearner &&
            p.members.size() >= 2 && p.members.size() <= 4 &&
            c.archetype == Archetype::kExpertGroup && contains(c.plays, p.id)) {
          return true;
        }
      }
    }
    return false;
  }

  bool p4() const {
    for (const auto& g : s.orderings) {
      if (!g.branches.empty()) return true;
    }
    return false;
  }

  bool p5() const {
    for (const auto& t : s.participants) {
      for (const auto& h : s.characters) {
        for (const auto& x : s.characters) {
          for (const auto& l : s.participants) {
            if (t.role == RoleLabel::kTeacher && h.archetype == Archetype::kMentor &&
                contains(h.plays, t.id) && contains(h.helps, x.id) &&
                l.role == RoleLabel::kLearner && contains(x.plays, l.id)) {
              return true;
            }
          }
        }
      }
    }
    return false;
  }

  bool framing(bool opening) const {
    bool any_core = false;
    for (const auto& m : s.ludic) {
      if (m.kind != LudicKind::kCore) continue;
      any_core = true;
      if (m.children.empty()) continue;
      const auto seqs = order(s, m.id, m.children);
      if (seqs.empty()) return false;
      const auto& seq = opening ? *seqs.front() : *seqs.back();
      const auto wanted = opening ? LudicKind::kBriefing : LudicKind::kDebriefing;
      if (seq.kind != wanted || !linked_teacher_mentor(seq.characters) ||
          !linked_played_by(seq.characters, RoleLabel::kLearner)) {
        return false;
      }
    }
    return any_core;
  }

  bool p8() const {
    for (const auto& p : s.participants) {
      if (p.kind != ParticipantKind::kTeam) continue;
      std::set<std::string> viewpoints;
      for (const auto& member : p.members) {
        if (member.viewpoint) viewpoints.insert(*member.viewpoint);
      }
      if (viewpoints.size() < 2) continue;
      for (const auto& m : s.ludic) {
        for (const auto* e : peds) {
          if (contains(m.staged, e->id) && contains(e->participants, p.id)) return true;
        }
        for (const auto& c : s.characters) {
          if (contains(m.characters, c.id) && contains(c.plays, p.id)) return true;
        }
      }
    }
    return false;
  }

  bool p9() const {
    const auto missions = order(s, "", s.ludic);
    if (missions.empty()) return false;
    const auto& m = *missions.back();
    if (m.kind == LudicKind::kReport) return true;
    for (const auto* e : peds) {
      if (contains(m.staged, e->id) && contains(e->tags, std::string(kReportWritingTag))) return true;
    }
    return false;
  }
};

Sets direct(const Scenario& s, const std::vector<const PedagogicalElement*>& peds,
            const LudicElement& l) {
  Sets out;
  for (const auto* e : peds) {
    if (!contains(l.staged, e->id)) continue;
    out.competences.insert(e->competences.begin(), e->competences.end());
    out.participants.insert(e->participants.begin(), e->participants.end());
  }
  for (const auto& c : s.characters) {
    if (contains(l.characters, c.id)) out.participants.insert(c.plays.begin(), c.plays.end());
  }
  return out;
}

}  // namespace

std::map<PatternId, bool> detect(const Scenario& s) {
  const World w(s);
  return {
      {PatternId::kP1, w.p1()},          {PatternId::kP2, w.p2()},
      {PatternId::kP3, w.p3()},          {PatternId::kP4, w.p4()},
      {PatternId::kP5, w.p5()},          {PatternId::kP6, w.framing(true)},
      {PatternId::kP7, w.framing(false)}, {PatternId::kP8, w.p8()},
      {PatternId::kP9, w.p9()},
  };
}

std::map<std::string, Sets> capillarity(const Scenario& s) {
  std::vector<const PedagogicalElement*> peds;
  flatten(s.pedagogical, peds);
  std::vector<const LudicElement*> luds;
  flatten(s.ludic, luds);
  std::map<std::string, Sets> out;
  for (const auto* l : luds) out[l->id] = direct(s, peds, *l);
  return out;
}

std::map<std::string, Sets> subtrees(const Scenario& s) {
  std::vector<const PedagogicalElement*> peds;
  flatten(s.pedagogical, peds);
  std::vector<const LudicElement*> luds;
  flatten(s.ludic, luds);
  std::map<std::string, Sets> out;
  for (const auto* l : luds) {
    std::vector<const LudicElement*> below{l};
    flatten(l->children, below);
    Sets acc;
    for (const auto* d : below) {
      const auto part = direct(s, peds, *d);
      acc.competences.insert(part.competences.begin(), part.competences.end());
      acc.participants.insert(part.participants.begin(), part.participants.end());
    }
    out[l->id] = acc;
  }
  return out;
}

}  // namespace oracle
