#include "ludoscene/scaffold.hpp"

#include <set>

namespace ludoscene {

namespace {

constexpr const char* kTeacher = "teacher";
constexpr const char* kTeam = "learner-team";
constexpr const char* kMentor = "mentor";
constexpr const char* kExperts = "expert-group";

OrderingGraph chain(const ElementId& owner, const IdList& nodes) {
  OrderingGraph g;
  g.owner = owner;
  g.nodes = nodes;
  for (std::size_t i = 1; i < nodes.size(); ++i) g.edges.push_back({nodes[i - 1], nodes[i]});
  return g;
}

LudicElement sequence(const ElementId& id, LudicKind kind, std::string title,
                      std::string description) {
  LudicElement s;
  s.id = id;
  s.level = LudicLevel::kSequence;
  s.kind = kind;
  s.title = std::move(title);
  s.description = std::move(description);
  s.characters = {kMentor, kExperts};
  return s;
}

}  // namespace

void check_config(const ScaffoldConfig& config) {
  if (config.learner_team_size < 2 || config.learner_team_size > 4) {
    throw ConfigError("learner_team_size", "must be between 2 and 4, got " +
                                               std::to_string(config.learner_team_size));
  }
  if (config.core_mission_count < 0) {
    throw ConfigError("core_mission_count", "must be non-negative");
  }
  if (config.discipline_labels.size() < 2) {
    throw ConfigError("discipline_labels", "needs at least two labels");
  }
  std::set<std::string> distinct;
  for (const auto& label : config.discipline_labels) {
    if (label.empty()) throw ConfigError("discipline_labels", "labels must not be empty");
    distinct.insert(label);
  }
  if (distinct.size() != config.discipline_labels.size()) {
    throw ConfigError("discipline_labels", "labels must be distinct");
  }
  if (config.seed_competences_per_module < 2) {
    throw ConfigError("seed_competences_per_module", "must be at least 2");
  }
}

Scenario scaffold(const ScaffoldConfig& config) {
  check_config(config);
  Scenario s;
  s.meta.title = config.title;
  s.meta.version = "0.1";
  s.meta.notes = {
      "generated scenario shell: placeholder content to replace",
      "placeholder competences seed two disciplines per module so that every module is "
      "pluridisciplinary; replace them with the real competences",
  };

  s.participants.push_back({kTeacher, "Enseignant", ParticipantKind::kRole, RoleLabel::kTeacher, {}});
  Participant team{kTeam, "Groupe d'apprenants", ParticipantKind::kTeam, RoleLabel::kLearner, {}};
  for (int i = 1; i <= config.learner_team_size; ++i) {
    team.members.push_back({"Apprenant " + std::to_string(i), std::nullopt});
  }
  s.participants.push_back(std::move(team));

  s.characters.push_back({kMentor, "Personnage serviable", Archetype::kMentor,
                          Visibility::kVisible, {kTeacher}, {kExperts}});
  s.characters.push_back({kExperts, "Groupe d'experts", Archetype::kExpertGroup,
                          Visibility::kVisible, {kTeam}, {}});

  LudicElement teaser;
  teaser.id = "mission-1";
  teaser.level = LudicLevel::kMission;
  teaser.kind = LudicKind::kTeaser;
  teaser.title = "Teaser";
  teaser.description = "TODO: présenter la mission principale et les rôles des joueurs";
  teaser.characters = {kMentor, kExperts};
  s.ludic.push_back(std::move(teaser));

  const auto labels = config.discipline_labels.size();
  for (int i = 1; i <= config.core_mission_count; ++i) {
    const std::string module_id = "module-" + std::to_string(i);
    PedagogicalElement module;
    module.id = module_id;
    module.level = PedagogicalLevel::kModule;
    module.title = "Module " + std::to_string(i);
    module.objective = "TODO: objectif pédagogique";
    module.participants = {kTeam, kTeacher};
    for (int j = 1; j <= config.seed_competences_per_module; ++j) {
      const std::string cid = "competence-" + std::to_string(i) + "-" + std::to_string(j);
      s.competences.push_back({cid, "TODO: compétence " + std::to_string(i) + "." +
                                        std::to_string(j),
                               config.discipline_labels[static_cast<std::size_t>(j - 1) % labels],
                               std::nullopt});
      module.competences.push_back(cid);
    }
    s.pedagogical.push_back(std::move(module));

    const std::string mission_id = "mission-" + std::to_string(i + 1);
    LudicElement mission;
    mission.id = mission_id;
    mission.level = LudicLevel::kMission;
    mission.kind = LudicKind::kCore;
    mission.title = "Mission " + std::to_string(i);
    mission.description = "TODO: description de la mission";
    mission.staged = {module_id};
    mission.characters = {kMentor, kExperts};
    mission.children.push_back(sequence(mission_id + "-briefing", LudicKind::kBriefing,
                                        "Briefing", "TODO: tâches à accomplir et outils utiles"));
    mission.children.push_back(sequence(mission_id + "-sequence-1", LudicKind::kNarrative,
                                        "Séquence 1", "TODO: contenu de la séquence"));
    mission.children.push_back(sequence(mission_id + "-debriefing", LudicKind::kDebriefing,
                                        "Débriefing",
                                        "TODO: partage des résultats et transfert des compétences"));
    IdList seq_ids;
    for (const auto& c : mission.children) seq_ids.push_back(c.id);
    s.orderings.push_back(chain(mission_id, seq_ids));
    s.ludic.push_back(std::move(mission));
  }

  if (config.include_report_mission) {
    LudicElement report;
    report.id = "mission-" + std::to_string(config.core_mission_count + 2);
    report.level = LudicLevel::kMission;
    report.kind = LudicKind::kReport;
    report.title = "Rapport d'analyse";
    report.description = "TODO: rapport sur les compétences acquises, à rendre après le jeu";
    report.characters = {kExperts};
    s.ludic.push_back(std::move(report));
  }

  IdList mission_ids;
  for (const auto& m : s.ludic) mission_ids.push_back(m.id);
  s.orderings.insert(s.orderings.begin(), chain("", mission_ids));
  return s;
}

}  // namespace ludoscene
