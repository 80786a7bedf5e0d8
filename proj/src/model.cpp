#include "ludoscene/model.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace ludoscene {

namespace {

template <typename Enum, std::size_t N>
using NameTable = std::array<std::pair<Enum, std::string_view>, N>;

template <typename Enum, std::size_t N>
std::string_view lookup_name(const NameTable<Enum, N>& table, Enum value) {
  for (const auto& [e, name] : table) {
    if (e == value) return name;
  }
  return "?";
}

template <typename Enum, std::size_t N>
std::optional<Enum> lookup_value(const NameTable<Enum, N>& table, std::string_view name) {
  for (const auto& [e, n] : table) {
    if (n == name) return e;
  }
  return std::nullopt;
}

constexpr NameTable<ParticipantKind, 2> kParticipantKinds{{
    {ParticipantKind::kRole, "role"},
    {ParticipantKind::kTeam, "team"},
}};

constexpr NameTable<RoleLabel, 2> kRoleLabels{{
    {RoleLabel::kLearner, "learner"},
    {RoleLabel::kTeacher, "teacher"},
}};

constexpr NameTable<PedagogicalLevel, 3> kPedagogicalLevels{{
    {PedagogicalLevel::kModule, "module"},
    {PedagogicalLevel::kAct, "act"},
    {PedagogicalLevel::kActivity, "activity"},
}};

constexpr NameTable<LudicLevel, 3> kLudicLevels{{
    {LudicLevel::kMission, "mission"},
    {LudicLevel::kSequence, "sequence"},
    {LudicLevel::kLevel, "level"},
}};

constexpr NameTable<Archetype, 5> kArchetypes{{
    {Archetype::kExpertGroup, "expert_group"},
    {Archetype::kMentor, "mentor"},
    {Archetype::kEvaluator, "evaluator"},
    {Archetype::kAntagonist, "antagonist"},
    {Archetype::kOther, "other"},
}};

constexpr NameTable<Visibility, 2> kVisibilities{{
    {Visibility::kVisible, "visible"},
    {Visibility::kHidden, "hidden"},
}};

constexpr NameTable<InteractionMode, 3> kInteractionModes{{
    {InteractionMode::kCompetition, "competition"},
    {InteractionMode::kCollaboration, "collaboration"},
    {InteractionMode::kSolo, "solo"},
}};

constexpr NameTable<BranchSemantics, 2> kBranchSemantics{{
    {BranchSemantics::kParallel, "parallel"},
    {BranchSemantics::kAlternative, "alternative"},
}};

constexpr NameTable<LudicKind, 8> kLudicKinds{{
    {LudicKind::kTeaser, "teaser"},
    {LudicKind::kCore, "core"},
    {LudicKind::kReport, "report"},
    {LudicKind::kNarrative, "narrative"},
    {LudicKind::kTest, "test"},
    {LudicKind::kBriefing, "briefing"},
    {LudicKind::kDebriefing, "debriefing"},
    {LudicKind::kLevel, "level"},
}};

}  // namespace

bool PedagogicalElement::has_tag(std::string_view tag) const {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

std::string_view to_string(ParticipantKind v) { return lookup_name(kParticipantKinds, v); }
std::string_view to_string(RoleLabel v) { return lookup_name(kRoleLabels, v); }
std::string_view to_string(PedagogicalLevel v) { return lookup_name(kPedagogicalLevels, v); }
std::string_view to_string(LudicLevel v) { return lookup_name(kLudicLevels, v); }
std::string_view to_string(Archetype v) { return lookup_name(kArchetypes, v); }
std::string_view to_string(Visibility v) { return lookup_name(kVisibilities, v); }
std::string_view to_string(InteractionMode v) { return lookup_name(kInteractionModes, v); }
std::string_view to_string(BranchSemantics v) { return lookup_name(kBranchSemantics, v); }
std::string_view to_string(LudicKind v) { return lookup_name(kLudicKinds, v); }

std::optional<ParticipantKind> participant_kind_from(std::string_view s) {
  return lookup_value(kParticipantKinds, s);
}
std::optional<RoleLabel> role_label_from(std::string_view s) {
  return lookup_value(kRoleLabels, s);
}
std::optional<Archetype> archetype_from(std::string_view s) {
  return lookup_value(kArchetypes, s);
}
std::optional<Visibility> visibility_from(std::string_view s) {
  return lookup_value(kVisibilities, s);
}
std::optional<InteractionMode> interaction_mode_from(std::string_view s) {
  return lookup_value(kInteractionModes, s);
}
std::optional<BranchSemantics> branch_semantics_from(std::string_view s) {
  return lookup_value(kBranchSemantics, s);
}

std::optional<LudicKind> ludic_kind_from(std::string_view s, LudicLevel level) {
  auto kind = lookup_value(kLudicKinds, s);
  if (!kind || !kind_allowed_at(*kind, level)) return std::nullopt;
  return kind;
}

bool kind_allowed_at(LudicKind kind, LudicLevel level) {
  switch (level) {
    case LudicLevel::kMission:
      return kind == LudicKind::kTeaser || kind == LudicKind::kCore ||
             kind == LudicKind::kReport;
    case LudicLevel::kSequence:
      return kind == LudicKind::kNarrative || kind == LudicKind::kTest ||
             kind == LudicKind::kBriefing || kind == LudicKind::kDebriefing;
    case LudicLevel::kLevel:
      return kind == LudicKind::kLevel;
  }
  return false;
}

PedagogicalLevel staged_level_for(LudicLevel level) {
  switch (level) {
    case LudicLevel::kMission:
      return PedagogicalLevel::kModule;
    case LudicLevel::kSequence:
      return PedagogicalLevel::kAct;
    case LudicLevel::kLevel:
      return PedagogicalLevel::kActivity;
  }
  return PedagogicalLevel::kModule;
}

}  // namespace ludoscene
