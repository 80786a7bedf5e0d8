#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ludoscene/model.hpp"

namespace ludoscene {

enum class ElementKind {
  kCompetence,
  kParticipant,
  kCharacter,
  kPedagogical,
  kLudic,
  kDocument,
};

std::string_view to_string(ElementKind kind);

struct ElementRecord {
  ElementKind kind;
  std::variant<const Competence*, const Participant*, const Character*,
               const PedagogicalElement*, const LudicElement*, const DocumentRecord*>
      element;
  std::string path;

  template <typename T>
  const T* as() const {
    const auto* p = std::get_if<const T*>(&element);
    return p ? *p : nullptr;
  }
};

// Id lookup over a scenario snapshot. Holds pointers into the scenario, which
// must outlive the index and stay unmodified. With duplicate ids, the first
// occurrence in document order wins.
class ScenarioIndex {
 public:
  explicit ScenarioIndex(const Scenario& scenario);

  const ElementRecord* find(std::string_view id) const;

  const Competence* competence(std::string_view id) const;
  const Participant* participant(std::string_view id) const;
  const Character* character(std::string_view id) const;
  const PedagogicalElement* pedagogical(std::string_view id) const;
  const LudicElement* ludic(std::string_view id) const;

  // Every element in document order, duplicates included.
  const std::vector<ElementRecord>& records() const { return records_; }
  // Ludic elements in document order (pre-order traversal).
  const std::vector<const LudicElement*>& ludic_elements() const { return ludic_; }
  const std::vector<const PedagogicalElement*>& pedagogical_elements() const {
    return pedagogical_;
  }

  const Scenario& scenario() const { return *scenario_; }

 private:
  const Scenario* scenario_;
  std::vector<ElementRecord> records_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::vector<const LudicElement*> ludic_;
  std::vector<const PedagogicalElement*> pedagogical_;
};

// Returns the record of the element with that id, or nullopt. The record points
// into `scenario`.
std::optional<ElementRecord> resolve(const Scenario& scenario, std::string_view id);

}  // namespace ludoscene
