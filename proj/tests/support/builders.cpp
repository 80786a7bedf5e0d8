#include "support/builders.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ludoscene/format.hpp"

namespace testkit {

Competence competence(const std::string& id, const std::string& discipline) {
  return {id, id, discipline, std::nullopt};
}

Participant role(const std::string& id, RoleLabel label) {
  return {id, id, ParticipantKind::kRole, label, {}};
}

Participant team(const std::string& id, RoleLabel label, std::size_t size,
                 const std::vector<std::string>& viewpoints) {
  Participant p{id, id, ParticipantKind::kTeam, label, {}};
  for (std::size_t i = 0; i < size; ++i) {
    TeamMember m{"member " + std::to_string(i + 1), std::nullopt};
    if (i < viewpoints.size()) m.viewpoint = viewpoints[i];
    p.members.push_back(std::move(m));
  }
  return p;
}

Character character(const std::string& id, Archetype archetype, IdList plays, IdList helps) {
  return {id, id, archetype, Visibility::kVisible, std::move(plays), std::move(helps)};
}

PedagogicalElement pedagogical(const std::string& id, PedagogicalLevel level, IdList competences) {
  PedagogicalElement e;
  e.id = id;
  e.level = level;
  e.title = id;
  e.competences = std::move(competences);
  return e;
}

LudicElement ludic(const std::string& id, LudicLevel level, LudicKind kind, IdList staged,
                   IdList characters) {
  LudicElement e;
  e.id = id;
  e.level = level;
  e.kind = kind;
  e.title = id;
  e.staged = std::move(staged);
  e.characters = std::move(characters);
  return e;
}

OrderingGraph chain(const std::string& owner, const IdList& nodes) {
  OrderingGraph g;
  g.owner = owner;
  g.nodes = nodes;
  for (std::size_t i = 1; i < nodes.size(); ++i) g.edges.push_back({nodes[i - 1], nodes[i]});
  return g;
}

Scenario rocket() {
  Scenario s;
  s.competences.push_back(competence("solve-equations", "mathematics"));
  s.pedagogical.push_back(pedagogical("equations", PedagogicalLevel::kModule, {"solve-equations"}));
  s.ludic.push_back(ludic("trajectory", LudicLevel::kMission, LudicKind::kCore, {"equations"}));
  return s;
}

Scenario framed(int core) {
  Scenario s;
  s.competences = {competence("c-math", "mathematics"), competence("c-phys", "physics")};
  s.participants = {role("teacher", RoleLabel::kTeacher), team("team", RoleLabel::kLearner, 3)};
  s.characters = {character("mentor", Archetype::kMentor, {"teacher"}, {"experts"}),
                  character("experts", Archetype::kExpertGroup, {"team"})};
  s.ludic.push_back(ludic("teaser", LudicLevel::kMission, LudicKind::kTeaser, {},
                          {"mentor", "experts"}));
  IdList missions{"teaser"};
  for (int i = 1; i <= core; ++i) {
    const std::string n = std::to_string(i);
    s.pedagogical.push_back(
        pedagogical("module-" + n, PedagogicalLevel::kModule, {"c-math", "c-phys"}));
    auto m = ludic("mission-" + n, LudicLevel::kMission, LudicKind::kCore, {"module-" + n},
                   {"experts"});
    m.children = {
        ludic("mission-" + n + "-briefing", LudicLevel::kSequence, LudicKind::kBriefing, {},
              {"mentor", "experts"}),
        ludic("mission-" + n + "-work", LudicLevel::kSequence, LudicKind::kNarrative, {},
              {"experts"}),
        ludic("mission-" + n + "-debriefing", LudicLevel::kSequence, LudicKind::kDebriefing, {},
              {"mentor", "experts"}),
    };
    s.orderings.push_back(chain(m.id, {m.children[0].id, m.children[1].id, m.children[2].id}));
    missions.push_back(m.id);
    s.ludic.push_back(std::move(m));
  }
  s.orderings.insert(s.orderings.begin(), chain("", missions));
  return s;
}

Scenario parse_or_throw(std::string_view text) {
  auto r = parse(text);
  if (const auto* e = std::get_if<ParseError>(&r)) {
    throw std::runtime_error(format_parse_error(*e));
  }
  return std::get<Scenario>(std::move(r));
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string corpus_path(const std::string& fixture_name) {
  return std::string(LUDOSCENE_SOURCE_DIR) + "/corpus/" + fixture_name + ".lgs.json";
}

std::vector<std::string> codes(const std::vector<Diagnostic>& diagnostics) {
  std::vector<std::string> out;
  for (const auto& d : diagnostics) out.emplace_back(to_string(d.code));
  return out;
}

std::size_t count_code(const std::vector<Diagnostic>& diagnostics, DiagnosticCode code) {
  std::size_t n = 0;
  for (const auto& d : diagnostics) n += d.code == code ? 1 : 0;
  return n;
}

namespace {

void walk(std::vector<PedagogicalElement>& items,
          const std::function<void(PedagogicalElement&)>& fn) {
  for (auto& e : items) {
    fn(e);
    walk(e.children, fn);
  }
}

void walk(std::vector<LudicElement>& items, const std::function<void(LudicElement&)>& fn) {
  for (auto& e : items) {
    fn(e);
    walk(e.children, fn);
  }
}

}  // namespace

void for_each_pedagogical(Scenario& s, const std::function<void(PedagogicalElement&)>& fn) {
  walk(s.pedagogical, fn);
}

void for_each_ludic(Scenario& s, const std::function<void(LudicElement&)>& fn) {
  walk(s.ludic, fn);
}

}  // namespace testkit
