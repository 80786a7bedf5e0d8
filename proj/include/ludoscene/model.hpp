#pragma once

// Scenario metamodel: a pedagogical structure (module > act > activity) and a
// ludic scenario (mission > sequence > level) joined by level-matched staging
// links, plus the competences, participants and characters they reference.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ludoscene {

// Element identifiers are plain strings; uniqueness is a validator concern.
using ElementId = std::string;
using IdList = std::vector<ElementId>;

enum class ParticipantKind { kRole, kTeam };
enum class RoleLabel { kLearner, kTeacher };
enum class PedagogicalLevel { kModule, kAct, kActivity };
enum class LudicLevel { kMission, kSequence, kLevel };
enum class Archetype { kExpertGroup, kMentor, kEvaluator, kAntagonist, kOther };
enum class Visibility { kVisible, kHidden };
enum class InteractionMode { kCompetition, kCollaboration, kSolo };
enum class BranchSemantics { kParallel, kAlternative };

// Missions are teaser/core/report, sequences narrative/test/briefing/debriefing,
// levels always kLevel.
enum class LudicKind {
  kTeaser,
  kCore,
  kReport,
  kNarrative,
  kTest,
  kBriefing,
  kDebriefing,
  kLevel,
};

// Tag marking a pedagogical element whose work product is a written report.
inline constexpr std::string_view kReportWritingTag = "report-writing";

struct Competence {
  ElementId id;
  std::string name;
  std::string discipline;
  std::optional<std::string> description;

  bool operator==(const Competence&) const = default;
};

struct TeamMember {
  std::string name;
  std::optional<std::string> viewpoint;

  bool operator==(const TeamMember&) const = default;
};

struct Participant {
  ElementId id;
  std::string name;
  ParticipantKind kind = ParticipantKind::kRole;
  // Teams carry the single role shared by all of their members.
  RoleLabel role = RoleLabel::kLearner;
  std::vector<TeamMember> members;

  bool operator==(const Participant&) const = default;
};

struct Character {
  ElementId id;
  std::string name;
  Archetype archetype = Archetype::kOther;
  Visibility visibility = Visibility::kVisible;
  IdList plays;  // participants
  IdList helps;  // characters

  bool operator==(const Character&) const = default;
};

struct PedagogicalElement {
  ElementId id;
  PedagogicalLevel level = PedagogicalLevel::kModule;
  std::string title;
  std::string objective;
  IdList competences;
  IdList participants;
  std::vector<std::string> tags;
  std::vector<PedagogicalElement> children;

  bool has_tag(std::string_view tag) const;
  bool operator==(const PedagogicalElement&) const = default;
};

struct LudicElement {
  ElementId id;
  LudicLevel level = LudicLevel::kMission;
  std::string title;
  std::string description;
  LudicKind kind = LudicKind::kCore;
  IdList staged;      // pedagogical elements of the matching level
  IdList characters;
  std::optional<double> duration_minutes;
  std::optional<InteractionMode> interaction_mode;
  std::vector<LudicElement> children;

  bool operator==(const LudicElement&) const = default;
};

struct Edge {
  ElementId before;
  ElementId after;

  bool operator==(const Edge&) const = default;
};

struct BranchGroup {
  ElementId split;
  IdList entries;
  BranchSemantics semantics = BranchSemantics::kParallel;

  bool operator==(const BranchGroup&) const = default;
};

// Precedence among the children of one owner. An empty owner denotes the
// top-level mission group; otherwise the owner is a mission and the nodes are
// its sequences. A branch group implies an edge from the split node to each
// of its entries.
struct OrderingGraph {
  ElementId owner;
  IdList nodes;
  std::vector<Edge> edges;
  std::vector<BranchGroup> branches;

  bool operator==(const OrderingGraph&) const = default;
};

struct DocumentRecord {
  ElementId id;
  std::string title;
  ElementId produced_in;

  bool operator==(const DocumentRecord&) const = default;
};

struct Meta {
  std::string format_version = "1";
  std::string title;
  std::vector<std::string> authors;
  std::string version;
  std::vector<std::string> notes;

  bool operator==(const Meta&) const = default;
};

struct Scenario {
  Meta meta;
  std::vector<Competence> competences;
  std::vector<Participant> participants;
  std::vector<Character> characters;
  std::vector<PedagogicalElement> pedagogical;  // modules
  std::vector<LudicElement> ludic;              // missions
  std::vector<OrderingGraph> orderings;
  std::vector<DocumentRecord> documents;

  bool operator==(const Scenario&) const = default;
};

std::string_view to_string(ParticipantKind v);
std::string_view to_string(RoleLabel v);
std::string_view to_string(PedagogicalLevel v);
std::string_view to_string(LudicLevel v);
std::string_view to_string(Archetype v);
std::string_view to_string(Visibility v);
std::string_view to_string(InteractionMode v);
std::string_view to_string(BranchSemantics v);
std::string_view to_string(LudicKind v);

// Parsers for the enum spellings above; nullopt for anything outside the set.
std::optional<ParticipantKind> participant_kind_from(std::string_view s);
std::optional<RoleLabel> role_label_from(std::string_view s);
std::optional<Archetype> archetype_from(std::string_view s);
std::optional<Visibility> visibility_from(std::string_view s);
std::optional<InteractionMode> interaction_mode_from(std::string_view s);
std::optional<BranchSemantics> branch_semantics_from(std::string_view s);
// Kind spellings are closed per level: "brief" is never valid, "core" only for
// missions, and so on.
std::optional<LudicKind> ludic_kind_from(std::string_view s, LudicLevel level);

bool kind_allowed_at(LudicKind kind, LudicLevel level);

// The pedagogical level a ludic level may stage.
PedagogicalLevel staged_level_for(LudicLevel level);

}  // namespace ludoscene
