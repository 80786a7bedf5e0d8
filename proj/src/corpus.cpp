#include "ludoscene/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "corpus_data.hpp"
#include "ludoscene/format.hpp"

namespace ludoscene {

namespace {

using P = PatternId;

struct FixtureSpec {
  std::string_view name;
  std::set<PatternId> expected;
};

// LS and PU as analysed; LG rows: before = already integrated, after = before
// plus the patterns added once the catalog was presented.
const std::vector<FixtureSpec>& specs() {
  static const std::vector<FixtureSpec> table = {
      {"LS", {P::kP1, P::kP2, P::kP3, P::kP4, P::kP5, P::kP6, P::kP7, P::kP8}},
      {"PU", {P::kP1, P::kP2, P::kP3, P::kP4, P::kP5, P::kP6, P::kP7, P::kP9}},
      {"LG1_before", {P::kP2, P::kP3}},
      {"LG1_after", {P::kP1, P::kP2, P::kP3, P::kP5, P::kP7}},
      {"LG2_before", {P::kP1, P::kP2, P::kP3}},
      {"LG2_after", {P::kP1, P::kP2, P::kP3, P::kP4}},
      {"LG3_before", {P::kP1, P::kP2}},
      {"LG3_after", {P::kP1, P::kP2, P::kP3, P::kP4, P::kP5}},
      {"LG4_before", {P::kP2, P::kP4, P::kP6}},
      {"LG4_after", {P::kP1, P::kP2, P::kP3, P::kP4, P::kP5, P::kP6, P::kP7, P::kP8}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : specs()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

Fixture fixture(std::string_view name) {
  for (const auto& s : specs()) {
    if (s.name != name) continue;
    const auto text = detail::embedded_fixture(name);
    if (!text) throw std::logic_error("fixture not embedded: " + std::string(name));
    return {std::string(name), std::string(*text), s.expected};
  }
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

Scenario load_fixture(std::string_view name) {
  auto parsed = parse(fixture(name).document);
  if (auto* err = std::get_if<ParseError>(&parsed)) {
    throw std::runtime_error("fixture " + std::string(name) +
                             " does not parse: " + format_parse_error(*err));
  }
  return std::get<Scenario>(std::move(parsed));
}

namespace {

std::size_t count_tree(const PedagogicalElement& e) {
  std::size_t n = 1;
  for (const auto& c : e.children) n += count_tree(c);
  return n;
}

std::size_t count_tree(const LudicElement& e) {
  std::size_t n = 1;
  for (const auto& c : e.children) n += count_tree(c);
  return n;
}

// Portable draws on top of mt19937_64, whose raw output is fixed by the
// standard (the <random> distributions are not).
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng_() % n); }
  bool chance(int percent) { return below(100) < static_cast<std::size_t>(percent); }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

  // Each item kept with the given probability; order preserved.
  IdList subset(const IdList& items, int percent) {
    IdList out;
    for (const auto& i : items) {
      if (chance(percent)) out.push_back(i);
    }
    return out;
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 rng_;
};

class Generator {
 public:
  Generator(std::uint64_t seed, int max_elements)
      : draw_(seed), budget_(static_cast<std::size_t>(std::max(max_elements, 1))) {}

  Scenario run() {
    s_.meta.title = "random scenario";
    s_.meta.version = "0";

    // Share the budget between the element families so small budgets still
    // produce mixed scenarios.
    const std::size_t competences = std::min<std::size_t>(1 + draw_.below(3), budget_);
    for (std::size_t i = 0; i < competences && take(); ++i) add_competence();
    const std::size_t participants = 1 + draw_.below(4);
    for (std::size_t i = 0; i < participants && take(); ++i) add_participant();
    const std::size_t characters = 1 + draw_.below(4);
    for (std::size_t i = 0; i < characters && take(); ++i) reserve_character();
    fill_characters();

    if (!competence_ids_.empty()) {
      const std::size_t modules = draw_.below(4);
      for (std::size_t i = 0; i < modules && take(); ++i) {
        s_.pedagogical.push_back(make_pedagogical(PedagogicalLevel::kModule));
      }
    }
    const std::size_t missions = draw_.below(5);
    for (std::size_t i = 0; i < missions && take(); ++i) {
      s_.ludic.push_back(make_ludic(LudicLevel::kMission));
    }
    add_orderings();
    if (!ludic_ids_.empty() && draw_.chance(30) && take()) {
      s_.documents.push_back(
          {next_id("doc"), "document", draw_.pick(ludic_ids_)});
    }
    return std::move(s_);
  }

 private:
  bool take() {
    if (used_ >= budget_) return false;
    ++used_;
    return true;
  }

  ElementId next_id(std::string_view prefix) {
    return std::string(prefix) + "-" + std::to_string(++serial_);
  }

  void add_competence() {
    static const std::vector<std::string> disciplines{"urbanism", "communication", "methodology"};
    Competence c{next_id("comp"), "competence", draw_.pick(disciplines), std::nullopt};
    if (draw_.chance(30)) c.description = "description";
    competence_ids_.push_back(c.id);
    s_.competences.push_back(std::move(c));
  }

  void add_participant() {
    static const std::vector<std::string> viewpoints{"retirees", "ecologists", "families"};
    Participant p;
    p.id = next_id("part");
    p.name = "participant";
    p.kind = draw_.chance(50) ? ParticipantKind::kTeam : ParticipantKind::kRole;
    p.role = draw_.chance(50) ? RoleLabel::kLearner : RoleLabel::kTeacher;
    if (p.kind == ParticipantKind::kTeam) {
      const std::size_t size = 1 + draw_.below(5);
      for (std::size_t i = 0; i < size; ++i) {
        TeamMember m{"member " + std::to_string(i + 1), std::nullopt};
        if (draw_.chance(50)) m.viewpoint = draw_.pick(viewpoints);
        p.members.push_back(std::move(m));
      }
    }
    participant_ids_.push_back(p.id);
    s_.participants.push_back(std::move(p));
  }

  void reserve_character() {
    Character c;
    c.id = next_id("char");
    c.name = "character";
    character_ids_.push_back(c.id);
    s_.characters.push_back(std::move(c));
  }

  void fill_characters() {
    static const std::vector<Archetype> archetypes{Archetype::kExpertGroup, Archetype::kMentor,
                                                   Archetype::kEvaluator, Archetype::kAntagonist,
                                                   Archetype::kOther};
    for (auto& c : s_.characters) {
      c.archetype = draw_.pick(archetypes);
      if (c.archetype == Archetype::kEvaluator && draw_.chance(50)) {
        c.visibility = Visibility::kHidden;
      }
      c.plays = draw_.subset(participant_ids_, 50);
      IdList others;
      for (const auto& id : character_ids_) {
        if (id != c.id) others.push_back(id);
      }
      c.helps = draw_.subset(others, 50);
    }
  }

  PedagogicalElement make_pedagogical(PedagogicalLevel level) {
    PedagogicalElement e;
    e.id = next_id(std::string(to_string(level)));
    e.level = level;
    e.title = "title";
    e.objective = "objective";
    e.competences = draw_.subset(competence_ids_, 50);
    if (e.competences.empty()) e.competences.push_back(draw_.pick(competence_ids_));
    e.participants = draw_.subset(participant_ids_, 40);
    if (draw_.chance(15)) e.tags.emplace_back(kReportWritingTag);
    if (draw_.chance(15)) e.tags.emplace_back("free-form");
    staged_candidates_[static_cast<int>(level)].push_back(e.id);
    if (level != PedagogicalLevel::kActivity) {
      const auto child = level == PedagogicalLevel::kModule ? PedagogicalLevel::kAct
                                                            : PedagogicalLevel::kActivity;
      const std::size_t n = draw_.below(3);
      for (std::size_t i = 0; i < n && take(); ++i) e.children.push_back(make_pedagogical(child));
    }
    return e;
  }

  LudicKind pick_kind(LudicLevel level, std::size_t position, std::size_t siblings) {
    switch (level) {
      case LudicLevel::kMission: {
        static const std::vector<LudicKind> kinds{LudicKind::kTeaser, LudicKind::kCore,
                                                  LudicKind::kReport};
        if (position == 0 && draw_.chance(40)) return LudicKind::kTeaser;
        return draw_.pick(kinds);
      }
      case LudicLevel::kSequence: {
        static const std::vector<LudicKind> kinds{LudicKind::kNarrative, LudicKind::kTest,
                                                  LudicKind::kBriefing, LudicKind::kDebriefing};
        if (position == 0 && draw_.chance(50)) return LudicKind::kBriefing;
        if (position + 1 == siblings && draw_.chance(50)) return LudicKind::kDebriefing;
        return draw_.pick(kinds);
      }
      case LudicLevel::kLevel:
        return LudicKind::kLevel;
    }
    return LudicKind::kLevel;
  }

  LudicElement make_ludic(LudicLevel level, std::size_t position = 0, std::size_t siblings = 1) {
    static const std::vector<InteractionMode> modes{
        InteractionMode::kCompetition, InteractionMode::kCollaboration, InteractionMode::kSolo};
    LudicElement e;
    e.id = next_id(std::string(to_string(level)));
    e.level = level;
    e.title = "title";
    e.description = "description";
    e.kind = pick_kind(level, position, siblings);
    e.staged = draw_.subset(staged_candidates_[static_cast<int>(staged_level_for(level))], 30);
    e.characters = draw_.subset(character_ids_, 50);
    if (draw_.chance(20)) e.duration_minutes = static_cast<double>(draw_.below(240)) / 2.0;
    if (draw_.chance(20)) e.interaction_mode = draw_.pick(modes);
    ludic_ids_.push_back(e.id);
    if (level != LudicLevel::kLevel) {
      const auto child =
          level == LudicLevel::kMission ? LudicLevel::kSequence : LudicLevel::kLevel;
      const std::size_t n = draw_.below(level == LudicLevel::kMission ? 5 : 3);
      for (std::size_t i = 0; i < n && take(); ++i) {
        e.children.push_back(make_ludic(child, i, n));
      }
    }
    return e;
  }

  OrderingGraph random_dag(const ElementId& owner, const std::vector<LudicElement>& children) {
    static const std::vector<BranchSemantics> semantics{BranchSemantics::kParallel,
                                                        BranchSemantics::kAlternative};
    OrderingGraph g;
    g.owner = owner;
    for (const auto& c : children) g.nodes.push_back(c.id);
    // Edges only run forward in a random permutation, so the graph is acyclic.
    IdList perm = g.nodes;
    if (draw_.chance(50)) draw_.shuffle(perm);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) {
        if (draw_.chance(j == i + 1 ? 60 : 15)) g.edges.push_back({perm[i], perm[j]});
      }
    }
    if (perm.size() >= 3 && draw_.chance(30)) {
      const std::size_t split = draw_.below(perm.size() - 2);
      BranchGroup b;
      b.split = perm[split];
      for (std::size_t j = split + 1; j < perm.size(); ++j) {
        if (b.entries.size() < 2 || draw_.chance(50)) b.entries.push_back(perm[j]);
      }
      b.semantics = draw_.pick(semantics);
      g.branches.push_back(std::move(b));
    }
    return g;
  }

  void add_orderings() {
    if (s_.ludic.size() >= 2 || (!s_.ludic.empty() && draw_.chance(30))) {
      s_.orderings.push_back(random_dag("", s_.ludic));
    }
    for (const auto& m : s_.ludic) {
      if (m.children.size() >= 2 || (!m.children.empty() && draw_.chance(30))) {
        s_.orderings.push_back(random_dag(m.id, m.children));
      }
    }
  }

  Draw draw_;
  std::size_t budget_;
  std::size_t used_ = 0;
  int serial_ = 0;
  Scenario s_;
  IdList competence_ids_;
  IdList participant_ids_;
  IdList character_ids_;
  IdList ludic_ids_;
  IdList staged_candidates_[3];
};

}  // namespace

std::size_t element_count(const Scenario& s) {
  std::size_t n = s.competences.size() + s.participants.size() + s.characters.size() +
                  s.documents.size();
  for (const auto& m : s.pedagogical) n += count_tree(m);
  for (const auto& m : s.ludic) n += count_tree(m);
  return n;
}

Scenario random_scenario(std::uint64_t seed, int max_elements) {
  return Generator(seed, max_elements).run();
}

}  // namespace ludoscene
