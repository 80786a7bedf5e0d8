#pragma once

// Staging links transfer the competences and participants of a pedagogical
// element onto the ludic element that stages it. Characters add the
// participants that play them.

#include <map>
#include <optional>
#include <set>

#include "ludoscene/model.hpp"

namespace ludoscene {

struct EffectiveEntry {
  std::set<ElementId> competences;
  std::set<ElementId> participants;

  bool operator==(const EffectiveEntry&) const = default;
};

// Keyed by ludic element id; every ludic element has an entry.
using EffectiveSets = std::map<ElementId, EffectiveEntry>;

// Direct transfer only: an element's sets depend on its own staged_refs and
// character_refs, never on its children or siblings. Expects a scenario with
// no error diagnostics; dangling references contribute nothing.
EffectiveSets propagate(const Scenario& scenario);

// Union of the entries of the element and all of its descendants. nullopt if
// no ludic element has that id.
std::optional<EffectiveEntry> aggregate_subtree(const Scenario& scenario,
                                                const ElementId& ludic_id);
std::optional<EffectiveEntry> aggregate_subtree(const Scenario& scenario,
                                                const EffectiveSets& sets,
                                                const ElementId& ludic_id);

}  // namespace ludoscene
