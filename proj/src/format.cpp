#include "ludoscene/format.hpp"

#include <cmath>
#include <cstdint>
#include <initializer_list>

#include "json.hpp"

#include "ludoscene/errors.hpp"
#include "ludoscene/validate.hpp"

namespace ludoscene {

using Json = nlohmann::ordered_json;

std::string_view to_string(ParseErrorCode code) {
  switch (code) {
    case ParseErrorCode::kSyntax:
      return "E_SYNTAX";
    case ParseErrorCode::kUnknownKey:
      return "E_UNKNOWN_KEY";
    case ParseErrorCode::kBadEnum:
      return "E_BAD_ENUM";
  }
  return "?";
}

std::string format_parse_error(const ParseError& error) {
  std::string out(to_string(error.code));
  out += ' ';
  out += error.path.empty() ? "/" : error.path;
  out += ": ";
  out += error.message;
  return out;
}

namespace {

struct ParseFailure {
  ParseError error;
};

// Walks a parsed JSON tree while tracking the JSON pointer of the current
// value, so every failure carries a path.
class Reader {
 public:
  Scenario read_document(const Json& root) {
    expect_object(root);
    check_keys(root, {"meta", "competences", "participants", "characters", "pedagogical",
                      "ludic", "orderings", "documents"});
    Scenario s;
    if (!root.contains("meta")) fail(ParseErrorCode::kSyntax, "missing required key 'meta'");
    {
      Scope scope(*this, "meta");
      s.meta = read_meta(root.at("meta"));
    }
    read_list(root, "competences", s.competences, &Reader::read_competence);
    read_list(root, "participants", s.participants, &Reader::read_participant);
    read_list(root, "characters", s.characters, &Reader::read_character);
    read_list(root, "pedagogical", s.pedagogical, &Reader::read_module);
    read_list(root, "ludic", s.ludic, &Reader::read_mission);
    read_list(root, "orderings", s.orderings, &Reader::read_ordering);
    read_list(root, "documents", s.documents, &Reader::read_document_record);
    return s;
  }

 private:
  class Scope {
   public:
    Scope(Reader& r, std::string_view token) : r_(r), saved_(r.path_.size()) {
      r_.path_ += '/';
      r_.path_ += token;
    }
    ~Scope() { r_.path_.resize(saved_); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    Reader& r_;
    std::size_t saved_;
  };

  [[noreturn]] void fail(ParseErrorCode code, std::string message) const {
    throw ParseFailure{{code, path_, std::move(message)}};
  }

  void expect_object(const Json& v) const {
    if (!v.is_object()) fail(ParseErrorCode::kSyntax, "expected an object");
  }

  void check_keys(const Json& obj, std::initializer_list<std::string_view> allowed) {
    for (const auto& [key, value] : obj.items()) {
      bool known = false;
      for (auto a : allowed) known = known || a == key;
      if (!known) {
        Scope scope(*this, key);
        fail(ParseErrorCode::kUnknownKey, "unknown key '" + key + "'");
      }
    }
  }

  std::string read_string(const Json& obj, std::string_view key, bool required) {
    const std::string k(key);
    if (!obj.contains(k)) {
      if (required) fail(ParseErrorCode::kSyntax, "missing required key '" + k + "'");
      return {};
    }
    Scope scope(*this, key);
    const auto& v = obj.at(k);
    if (!v.is_string()) fail(ParseErrorCode::kSyntax, "expected a string");
    return v.get<std::string>();
  }

  std::optional<std::string> read_optional_string(const Json& obj, std::string_view key) {
    if (!obj.contains(std::string(key))) return std::nullopt;
    return read_string(obj, key, true);
  }

  ElementId read_id(const Json& obj) {
    auto id = read_string(obj, "id", true);
    if (id.empty()) {
      Scope scope(*this, "id");
      fail(ParseErrorCode::kSyntax, "id must not be empty");
    }
    return id;
  }

  std::vector<std::string> read_string_list(const Json& obj, std::string_view key) {
    std::vector<std::string> out;
    const std::string k(key);
    if (!obj.contains(k)) return out;
    Scope scope(*this, key);
    const auto& v = obj.at(k);
    if (!v.is_array()) fail(ParseErrorCode::kSyntax, "expected an array of strings");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) {
        Scope item(*this, std::to_string(i));
        fail(ParseErrorCode::kSyntax, "expected a string");
      }
      out.push_back(v[i].get<std::string>());
    }
    return out;
  }

  template <typename Enum, typename Conv>
  Enum read_enum(const Json& obj, std::string_view key, Conv conv) {
    auto text = read_string(obj, key, true);
    auto value = conv(text);
    if (!value) {
      Scope scope(*this, key);
      fail(ParseErrorCode::kBadEnum, "illegal " + std::string(key) + " '" + text + "'");
    }
    return *value;
  }

  template <typename T, typename Fn>
  void read_list(const Json& obj, std::string_view key, std::vector<T>& out, Fn fn) {
    const std::string k(key);
    if (!obj.contains(k)) return;
    Scope scope(*this, key);
    const auto& v = obj.at(k);
    if (!v.is_array()) fail(ParseErrorCode::kSyntax, "expected an array");
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      Scope item(*this, std::to_string(i));
      expect_object(v[i]);
      out.push_back((this->*fn)(v[i]));
    }
  }

  Meta read_meta(const Json& v) {
    expect_object(v);
    check_keys(v, {"format_version", "title", "authors", "version", "notes"});
    Meta m;
    if (v.contains("format_version")) {
      m.format_version = read_string(v, "format_version", true);
      if (m.format_version != kFormatVersion) {
        Scope scope(*this, "format_version");
        fail(ParseErrorCode::kSyntax, "unsupported format_version '" + m.format_version + "'");
      }
    }
    m.title = read_string(v, "title", false);
    m.authors = read_string_list(v, "authors");
    m.version = read_string(v, "version", false);
    m.notes = read_string_list(v, "notes");
    return m;
  }

  Competence read_competence(const Json& v) {
    check_keys(v, {"id", "name", "discipline", "description"});
    Competence c;
    c.id = read_id(v);
    c.name = read_string(v, "name", false);
    c.discipline = read_string(v, "discipline", true);
    if (c.discipline.empty()) {
      Scope scope(*this, "discipline");
      fail(ParseErrorCode::kSyntax, "discipline must not be empty");
    }
    c.description = read_optional_string(v, "description");
    return c;
  }

  TeamMember read_member(const Json& v) {
    check_keys(v, {"name", "viewpoint"});
    TeamMember m;
    m.name = read_string(v, "name", true);
    m.viewpoint = read_optional_string(v, "viewpoint");
    return m;
  }

  Participant read_participant(const Json& v) {
    check_keys(v, {"id", "name", "kind", "role_label", "members"});
    Participant p;
    p.id = read_id(v);
    p.name = read_string(v, "name", false);
    p.kind = read_enum<ParticipantKind>(v, "kind", participant_kind_from);
    p.role = read_enum<RoleLabel>(v, "role_label", role_label_from);
    if (p.kind == ParticipantKind::kRole && v.contains("members")) {
      Scope scope(*this, "members");
      fail(ParseErrorCode::kSyntax, "a role participant has no members");
    }
    read_list(v, "members", p.members, &Reader::read_member);
    return p;
  }

  Character read_character(const Json& v) {
    check_keys(v, {"id", "name", "archetype", "visibility", "plays_refs", "helps_refs"});
    Character c;
    c.id = read_id(v);
    c.name = read_string(v, "name", false);
    c.archetype = read_enum<Archetype>(v, "archetype", archetype_from);
    c.visibility = read_enum<Visibility>(v, "visibility", visibility_from);
    c.plays = read_string_list(v, "plays_refs");
    c.helps = read_string_list(v, "helps_refs");
    return c;
  }

  PedagogicalElement read_pedagogical(const Json& v, PedagogicalLevel level) {
    const char* children_key = level == PedagogicalLevel::kModule ? "acts" : "activities";
    if (level == PedagogicalLevel::kActivity) {
      check_keys(v, {"id", "title", "objective", "competence_refs", "participant_refs", "tags"});
    } else {
      check_keys(v, {"id", "title", "objective", "competence_refs", "participant_refs", "tags",
                     children_key});
    }
    PedagogicalElement e;
    e.id = read_id(v);
    e.level = level;
    e.title = read_string(v, "title", false);
    e.objective = read_string(v, "objective", false);
    e.competences = read_string_list(v, "competence_refs");
    e.participants = read_string_list(v, "participant_refs");
    e.tags = read_string_list(v, "tags");
    if (level == PedagogicalLevel::kModule) {
      read_list(v, children_key, e.children, &Reader::read_act);
    } else if (level == PedagogicalLevel::kAct) {
      read_list(v, children_key, e.children, &Reader::read_activity);
    }
    return e;
  }

  PedagogicalElement read_module(const Json& v) {
    return read_pedagogical(v, PedagogicalLevel::kModule);
  }
  PedagogicalElement read_act(const Json& v) { return read_pedagogical(v, PedagogicalLevel::kAct); }
  PedagogicalElement read_activity(const Json& v) {
    return read_pedagogical(v, PedagogicalLevel::kActivity);
  }

  LudicElement read_ludic(const Json& v, LudicLevel level) {
    const char* children_key = level == LudicLevel::kMission ? "sequences" : "levels";
    if (level == LudicLevel::kLevel) {
      check_keys(v, {"id", "title", "description", "kind", "staged_refs", "character_refs",
                     "duration_minutes", "interaction_mode"});
    } else {
      check_keys(v, {"id", "title", "description", "kind", "staged_refs", "character_refs",
                     "duration_minutes", "interaction_mode", children_key});
    }
    LudicElement e;
    e.id = read_id(v);
    e.level = level;
    e.title = read_string(v, "title", false);
    e.description = read_string(v, "description", false);
    e.kind = read_enum<LudicKind>(v, "kind",
                                  [level](std::string_view s) { return ludic_kind_from(s, level); });
    e.staged = read_string_list(v, "staged_refs");
    e.characters = read_string_list(v, "character_refs");
    if (v.contains("duration_minutes")) {
      Scope scope(*this, "duration_minutes");
      const auto& d = v.at("duration_minutes");
      if (!d.is_number()) fail(ParseErrorCode::kSyntax, "expected a number");
      const double minutes = d.get<double>();
      if (!std::isfinite(minutes) || minutes < 0.0) {
        fail(ParseErrorCode::kSyntax, "duration must be a non-negative number");
      }
      e.duration_minutes = minutes;
    }
    if (v.contains("interaction_mode")) {
      e.interaction_mode =
          read_enum<InteractionMode>(v, "interaction_mode", interaction_mode_from);
    }
    if (level == LudicLevel::kMission) {
      read_list(v, children_key, e.children, &Reader::read_sequence);
    } else if (level == LudicLevel::kSequence) {
      read_list(v, children_key, e.children, &Reader::read_level);
    }
    return e;
  }

  LudicElement read_mission(const Json& v) { return read_ludic(v, LudicLevel::kMission); }
  LudicElement read_sequence(const Json& v) { return read_ludic(v, LudicLevel::kSequence); }
  LudicElement read_level(const Json& v) { return read_ludic(v, LudicLevel::kLevel); }

  Edge read_edge(const Json& v, std::size_t i) {
    Scope scope(*this, std::to_string(i));
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string()) {
      fail(ParseErrorCode::kSyntax, "an edge is a [before, after] pair of ids");
    }
    return {v[0].get<std::string>(), v[1].get<std::string>()};
  }

  BranchGroup read_branch(const Json& v) {
    check_keys(v, {"split", "entries", "semantics"});
    BranchGroup b;
    b.split = read_string(v, "split", true);
    b.entries = read_string_list(v, "entries");
    b.semantics = read_enum<BranchSemantics>(v, "semantics", branch_semantics_from);
    return b;
  }

  OrderingGraph read_ordering(const Json& v) {
    check_keys(v, {"owner", "nodes", "edges", "branches"});
    OrderingGraph g;
    g.owner = read_string(v, "owner", true);
    g.nodes = read_string_list(v, "nodes");
    if (v.contains("edges")) {
      Scope scope(*this, "edges");
      const auto& edges = v.at("edges");
      if (!edges.is_array()) fail(ParseErrorCode::kSyntax, "expected an array");
      for (std::size_t i = 0; i < edges.size(); ++i) g.edges.push_back(read_edge(edges[i], i));
    }
    read_list(v, "branches", g.branches, &Reader::read_branch);
    return g;
  }

  DocumentRecord read_document_record(const Json& v) {
    check_keys(v, {"id", "title", "produced_in"});
    DocumentRecord d;
    d.id = read_id(v);
    d.title = read_string(v, "title", false);
    d.produced_in = read_string(v, "produced_in", true);
    return d;
  }

  std::string path_;
};

Json string_array(const std::vector<std::string>& items) {
  Json out = Json::array();
  for (const auto& s : items) out.push_back(s);
  return out;
}

Json write_pedagogical(const PedagogicalElement& e) {
  Json j = Json::object();
  j["id"] = e.id;
  j["title"] = e.title;
  j["objective"] = e.objective;
  j["competence_refs"] = string_array(e.competences);
  j["participant_refs"] = string_array(e.participants);
  j["tags"] = string_array(e.tags);
  if (e.level != PedagogicalLevel::kActivity) {
    Json children = Json::array();
    for (const auto& c : e.children) children.push_back(write_pedagogical(c));
    j[e.level == PedagogicalLevel::kModule ? "acts" : "activities"] = std::move(children);
  }
  return j;
}

Json write_ludic(const LudicElement& e) {
  Json j = Json::object();
  j["id"] = e.id;
  j["title"] = e.title;
  j["description"] = e.description;
  j["kind"] = to_string(e.kind);
  j["staged_refs"] = string_array(e.staged);
  j["character_refs"] = string_array(e.characters);
  if (e.duration_minutes) {
    // Whole minutes are written as integers.
    const double d = *e.duration_minutes;
    if (d == std::floor(d) && d < 9.0e15) {
      j["duration_minutes"] = static_cast<std::int64_t>(d);
    } else {
      j["duration_minutes"] = d;
    }
  }
  if (e.interaction_mode) j["interaction_mode"] = to_string(*e.interaction_mode);
  if (e.level != LudicLevel::kLevel) {
    Json children = Json::array();
    for (const auto& c : e.children) children.push_back(write_ludic(c));
    j[e.level == LudicLevel::kMission ? "sequences" : "levels"] = std::move(children);
  }
  return j;
}

Json write_document(const Scenario& s) {
  Json root = Json::object();

  Json meta = Json::object();
  meta["format_version"] = s.meta.format_version;
  meta["title"] = s.meta.title;
  meta["authors"] = string_array(s.meta.authors);
  meta["version"] = s.meta.version;
  meta["notes"] = string_array(s.meta.notes);
  root["meta"] = std::move(meta);

  Json competences = Json::array();
  for (const auto& c : s.competences) {
    Json j = Json::object();
    j["id"] = c.id;
    j["name"] = c.name;
    j["discipline"] = c.discipline;
    if (c.description) j["description"] = *c.description;
    competences.push_back(std::move(j));
  }
  root["competences"] = std::move(competences);

  Json participants = Json::array();
  for (const auto& p : s.participants) {
    Json j = Json::object();
    j["id"] = p.id;
    j["name"] = p.name;
    j["kind"] = to_string(p.kind);
    j["role_label"] = to_string(p.role);
    if (p.kind == ParticipantKind::kTeam) {
      Json members = Json::array();
      for (const auto& m : p.members) {
        Json mj = Json::object();
        mj["name"] = m.name;
        if (m.viewpoint) mj["viewpoint"] = *m.viewpoint;
        members.push_back(std::move(mj));
      }
      j["members"] = std::move(members);
    }
    participants.push_back(std::move(j));
  }
  root["participants"] = std::move(participants);

  Json characters = Json::array();
  for (const auto& c : s.characters) {
    Json j = Json::object();
    j["id"] = c.id;
    j["name"] = c.name;
    j["archetype"] = to_string(c.archetype);
    j["visibility"] = to_string(c.visibility);
    j["plays_refs"] = string_array(c.plays);
    j["helps_refs"] = string_array(c.helps);
    characters.push_back(std::move(j));
  }
  root["characters"] = std::move(characters);

  Json pedagogical = Json::array();
  for (const auto& m : s.pedagogical) pedagogical.push_back(write_pedagogical(m));
  root["pedagogical"] = std::move(pedagogical);

  Json ludic = Json::array();
  for (const auto& m : s.ludic) ludic.push_back(write_ludic(m));
  root["ludic"] = std::move(ludic);

  Json orderings = Json::array();
  for (const auto& g : s.orderings) {
    Json j = Json::object();
    j["owner"] = g.owner;
    j["nodes"] = string_array(g.nodes);
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back(Json::array({e.before, e.after}));
    j["edges"] = std::move(edges);
    Json branches = Json::array();
    for (const auto& b : g.branches) {
      Json bj = Json::object();
      bj["split"] = b.split;
      bj["entries"] = string_array(b.entries);
      bj["semantics"] = to_string(b.semantics);
      branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    orderings.push_back(std::move(j));
  }
  root["orderings"] = std::move(orderings);

  Json documents = Json::array();
  for (const auto& d : s.documents) {
    Json j = Json::object();
    j["id"] = d.id;
    j["title"] = d.title;
    j["produced_in"] = d.produced_in;
    documents.push_back(std::move(j));
  }
  root["documents"] = std::move(documents);
  return root;
}

}  // namespace

ParseResult parse(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    return ParseError{ParseErrorCode::kSyntax, "", e.what()};
  }
  try {
    return Reader().read_document(root);
  } catch (const ParseFailure& f) {
    return f.error;
  } catch (const Json::exception& e) {
    return ParseError{ParseErrorCode::kSyntax, "", e.what()};
  }
}

std::string serialize(const Scenario& scenario) {
  require_valid(validate(scenario));
  return write_document(scenario).dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace ludoscene
