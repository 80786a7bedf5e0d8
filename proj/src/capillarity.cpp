#include "ludoscene/capillarity.hpp"

#include "ludoscene/index.hpp"

namespace ludoscene {

EffectiveSets propagate(const Scenario& scenario) {
  const ScenarioIndex index(scenario);
  EffectiveSets sets;
  for (const auto* element : index.ludic_elements()) {
    auto& entry = sets[element->id];
    for (const auto& ref : element->staged) {
      const auto* staged = index.pedagogical(ref);
      if (staged == nullptr) continue;
      entry.competences.insert(staged->competences.begin(), staged->competences.end());
      entry.participants.insert(staged->participants.begin(), staged->participants.end());
    }
    for (const auto& ref : element->characters) {
      const auto* character = index.character(ref);
      if (character == nullptr) continue;
      entry.participants.insert(character->plays.begin(), character->plays.end());
    }
  }
  return sets;
}

namespace {

void collect(const LudicElement& e, const EffectiveSets& sets, EffectiveEntry& out) {
  if (auto it = sets.find(e.id); it != sets.end()) {
    out.competences.insert(it->second.competences.begin(), it->second.competences.end());
    out.participants.insert(it->second.participants.begin(), it->second.participants.end());
  }
  for (const auto& child : e.children) collect(child, sets, out);
}

}  // namespace

std::optional<EffectiveEntry> aggregate_subtree(const Scenario& scenario,
                                                const EffectiveSets& sets,
                                                const ElementId& ludic_id) {
  const ScenarioIndex index(scenario);
  const auto* root = index.ludic(ludic_id);
  if (root == nullptr) return std::nullopt;
  EffectiveEntry out;
  collect(*root, sets, out);
  return out;
}

std::optional<EffectiveEntry> aggregate_subtree(const Scenario& scenario,
                                                const ElementId& ludic_id) {
  return aggregate_subtree(scenario, propagate(scenario), ludic_id);
}

}  // namespace ludoscene
