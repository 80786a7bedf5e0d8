#include "ludoscene/index.hpp"

namespace ludoscene {

std::string_view to_string(ElementKind kind) {
  switch (kind) {
    case ElementKind::kCompetence:
      return "competence";
    case ElementKind::kParticipant:
      return "participant";
    case ElementKind::kCharacter:
      return "character";
    case ElementKind::kPedagogical:
      return "pedagogical";
    case ElementKind::kLudic:
      return "ludic";
    case ElementKind::kDocument:
      return "document";
  }
  return "?";
}

namespace {

void index_pedagogical(const PedagogicalElement& e, const std::string& parent_path,
                       std::vector<ElementRecord>& out,
                       std::vector<const PedagogicalElement*>& flat) {
  std::string path = parent_path + "/" + e.id;
  flat.push_back(&e);
  out.push_back({ElementKind::kPedagogical, &e, path});
  for (const auto& child : e.children) index_pedagogical(child, path, out, flat);
}

void index_ludic(const LudicElement& e, const std::string& parent_path,
                 std::vector<ElementRecord>& out, std::vector<const LudicElement*>& flat) {
  std::string path = parent_path + "/" + e.id;
  flat.push_back(&e);
  out.push_back({ElementKind::kLudic, &e, path});
  for (const auto& child : e.children) index_ludic(child, path, out, flat);
}

}  // namespace

ScenarioIndex::ScenarioIndex(const Scenario& scenario) : scenario_(&scenario) {
  for (const auto& c : scenario.competences) {
    records_.push_back({ElementKind::kCompetence, &c, "competences/" + c.id});
  }
  for (const auto& p : scenario.participants) {
    records_.push_back({ElementKind::kParticipant, &p, "participants/" + p.id});
  }
  for (const auto& c : scenario.characters) {
    records_.push_back({ElementKind::kCharacter, &c, "characters/" + c.id});
  }
  for (const auto& m : scenario.pedagogical) {
    index_pedagogical(m, "pedagogical", records_, pedagogical_);
  }
  for (const auto& m : scenario.ludic) index_ludic(m, "ludic", records_, ludic_);
  for (const auto& d : scenario.documents) {
    records_.push_back({ElementKind::kDocument, &d, "documents/" + d.id});
  }
  by_id_.reserve(records_.size());
  for (std::size_t i = 0; i < records_.size(); ++i) {
    std::visit([&](const auto* e) { by_id_.try_emplace(e->id, i); }, records_[i].element);
  }
}

const ElementRecord* ScenarioIndex::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

const Competence* ScenarioIndex::competence(std::string_view id) const {
  const auto* r = find(id);
  return r ? r->as<Competence>() : nullptr;
}

const Participant* ScenarioIndex::participant(std::string_view id) const {
  const auto* r = find(id);
  return r ? r->as<Participant>() : nullptr;
}

const Character* ScenarioIndex::character(std::string_view id) const {
  const auto* r = find(id);
  return r ? r->as<Character>() : nullptr;
}

const PedagogicalElement* ScenarioIndex::pedagogical(std::string_view id) const {
  const auto* r = find(id);
  return r ? r->as<PedagogicalElement>() : nullptr;
}

const LudicElement* ScenarioIndex::ludic(std::string_view id) const {
  const auto* r = find(id);
  return r ? r->as<LudicElement>() : nullptr;
}

std::optional<ElementRecord> resolve(const Scenario& scenario, std::string_view id) {
  ScenarioIndex index(scenario);
  if (const auto* r = index.find(id)) return *r;
  return std::nullopt;
}

}  // namespace ludoscene
