#include <random>

#include "doctest.h"
#include "ludoscene/corpus.hpp"
#include "ludoscene/errors.hpp"
#include "ludoscene/format.hpp"
#include "support/builders.hpp"

using namespace ludoscene;
using namespace testkit;

namespace {

const char* kSkeleton = R"({
  "meta": {
    "format_version": "1",
    "title": "",
    "authors": [],
    "version": "",
    "notes": []
  },
  "competences": [],
  "participants": [],
  "characters": [],
  "pedagogical": [],
  "ludic": [],
  "orderings": [],
  "documents": []
}
)";

ParseError parse_error(std::string_view text) {
  auto r = parse(text);
  REQUIRE(std::holds_alternative<ParseError>(r));
  return std::get<ParseError>(r);
}

std::string with_sequence_kind(const std::string& kind) {
  return R"({"meta": {"title": "t"},
  "ludic": [{"id": "m", "title": "", "description": "", "kind": "core",
             "sequences": [{"id": "s", "title": "", "description": "", "kind": ")" +
         kind + R"("}]}]})";
}

}  // namespace

TEST_CASE("minimal document gives an empty scenario") {
  const auto s = parse_or_throw(R"({"meta": {"format_version": "1", "title": "x"}})");
  Scenario expected;
  expected.meta.title = "x";
  CHECK(s == expected);
  CHECK(parse_or_throw(R"({"meta": {}})") == Scenario{});
}

TEST_CASE("empty scenario serializes to the canonical skeleton") {
  CHECK(serialize(Scenario{}) == kSkeleton);
  CHECK(parse_or_throw(kSkeleton) == Scenario{});
}

TEST_CASE("LS fixture: learner teams of 3 to 4 and a hidden evaluator") {
  const auto s = parse_or_throw(read_text(corpus_path("LS")));
  int teams = 0;
  for (const auto& p : s.participants) {
    if (p.kind != ParticipantKind::kTeam || p.role != RoleLabel::kLearner) continue;
    ++teams;
    CHECK(p.members.size() >= 3);
    CHECK(p.members.size() <= 4);
  }
  CHECK(teams >= 3);
  CHECK(teams <= 4);
  bool maggy = false;
  for (const auto& c : s.characters) {
    if (c.id == "maggy") {
      maggy = c.visibility == Visibility::kHidden && c.archetype == Archetype::kEvaluator;
    }
  }
  CHECK(maggy);
}

TEST_CASE("sequence kind outside the closed set") {
  CHECK_NOTHROW(parse_or_throw(with_sequence_kind("briefing")));
  const auto e = parse_error(with_sequence_kind("brief"));
  CHECK(e.code == ParseErrorCode::kBadEnum);
  CHECK(e.path == "/ludic/0/sequences/0/kind");
  CHECK(format_parse_error(e).rfind("E_BAD_ENUM", 0) == 0);
  CHECK(parse_error(with_sequence_kind("core")).code == ParseErrorCode::kBadEnum);
}

TEST_CASE("unknown keys are rejected with their path") {
  auto e = parse_error(R"({"meta": {}, "extra": 1})");
  CHECK(e.code == ParseErrorCode::kUnknownKey);
  CHECK(e.path == "/extra");
  e = parse_error(R"({"meta": {}, "characters": [{"id": "c", "name": "", "archetype": "mentor",
                     "visibility": "visible", "colour": "red"}]})");
  CHECK(e.code == ParseErrorCode::kUnknownKey);
  CHECK(e.path == "/characters/0/colour");
  e = parse_error(R"({"meta": {}, "ludic": [{"id": "m", "title": "", "description": "",
                     "kind": "core", "levels": []}]})");
  CHECK(e.code == ParseErrorCode::kUnknownKey);
}

TEST_CASE("malformed documents are syntax errors") {
  CHECK(parse_error("").code == ParseErrorCode::kSyntax);
  CHECK(parse_error("{").code == ParseErrorCode::kSyntax);
  CHECK(parse_error("[]").code == ParseErrorCode::kSyntax);
  CHECK(parse_error(R"({"competences": []})").code == ParseErrorCode::kSyntax);
  CHECK(parse_error(R"({"meta": {"format_version": "2"}})").code == ParseErrorCode::kSyntax);
  CHECK(parse_error(R"({"meta": {}, "competences": [{"id": "", "name": "", "discipline": "x"}]})")
            .code == ParseErrorCode::kSyntax);
  CHECK(parse_error(R"({"meta": {}, "competences": [{"id": "c", "name": ""}]})").code ==
        ParseErrorCode::kSyntax);
  CHECK(parse_error(R"({"meta": {}, "competences": {}})").code == ParseErrorCode::kSyntax);
  const auto e = parse_error(R"({"meta": {}, "participants": [{"id": "p", "name": "",
      "kind": "role", "role_label": "teacher", "members": []}]})");
  CHECK(e.code == ParseErrorCode::kSyntax);
  CHECK(e.path == "/participants/0/members");
  CHECK(parse_error(R"({"meta": {}, "ludic": [{"id": "m", "title": "", "description": "",
      "kind": "core", "duration_minutes": -5}]})")
            .path == "/ludic/0/duration_minutes");
  CHECK(parse_error(R"({"meta": {}, "orderings": [{"owner": "", "edges": [["a"]]}]})").code ==
        ParseErrorCode::kSyntax);
}

TEST_CASE("dangling references parse, then serialize refuses them") {
  const auto s = parse_or_throw(R"({"meta": {}, "ludic": [{"id": "m", "title": "",
      "description": "", "kind": "core", "staged_refs": ["nothing"]}]})");
  CHECK_THROWS_AS(serialize(s), ScenarioRejected);
  try {
    serialize(s);
  } catch (const ScenarioRejected& e) {
    REQUIRE(e.diagnostics().size() == 1);
    CHECK(e.diagnostics()[0].code == DiagnosticCode::kDanglingRef);
  }
}

TEST_CASE("canonical corpus files round trip byte for byte") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto text = read_text(corpus_path(name));
    CHECK(text == fixture(name).document);
    const auto once = serialize(parse_or_throw(text));
    CHECK(once == text);
    CHECK(serialize(parse_or_throw(once)) == once);
  }
}

TEST_CASE("canonical text layout") {
  const auto text = fixture("LS").document;
  CHECK(text.back() == '\n');
  CHECK(text.rfind("\xEF\xBB\xBF", 0) == std::string::npos);
  CHECK(text.find(" \n") == std::string::npos);
  CHECK(text.find('\t') == std::string::npos);
  CHECK(text.find("\\u00") == std::string::npos);
  CHECK(text.find("écologie") != std::string::npos);
}

TEST_CASE("canonicalization orders keys and fills empty lists") {
  const auto messy = R"({"documents": [], "ludic": [{"kind": "core", "description": "d",
      "title": "T", "id": "m", "duration_minutes": 45.0, "interaction_mode": "solo"}],
      "meta": {"title": "x", "format_version": "1"}})";
  const auto canonical = serialize(parse_or_throw(messy));
  CHECK(canonical.find(R"("duration_minutes": 45,)") != std::string::npos);
  CHECK(canonical.find("\"meta\"") < canonical.find("\"competences\""));
  CHECK(canonical.find("\"sequences\": []") != std::string::npos);
  CHECK(serialize(parse_or_throw(canonical)) == canonical);
}

TEST_CASE("fractional durations survive the round trip") {
  auto s = rocket();
  s.ludic[0].duration_minutes = 12.5;
  CHECK(parse_or_throw(serialize(s)) == s);
}

TEST_CASE("parse inverts serialize on random scenarios") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto s = random_scenario(seed, 30);
    const auto text = serialize(s);
    const auto back = parse_or_throw(text);
    CHECK(back == s);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("parse never crashes on damaged input") {
  std::mt19937_64 rng(2024);
  const auto base = fixture("PU").document;
  for (int round = 0; round < 3000; ++round) {
    std::string text = base;
    switch (round % 4) {
      case 0:
        text.resize(rng() % text.size());
        break;
      case 1:
        for (int k = 0; k < 4; ++k) text[rng() % text.size()] = static_cast<char>(rng() % 256);
        break;
      case 2:
        text.erase(rng() % text.size(), 1 + rng() % 40);
        break;
      default: {
        text.assign(1 + rng() % 256, '\0');
        for (auto& ch : text) ch = static_cast<char>(rng() % 256);
      }
    }
    const auto r = parse(text);
    CHECK((std::holds_alternative<Scenario>(r) || std::holds_alternative<ParseError>(r)));
  }
  std::string big(1 << 20, '[');
  CHECK(std::holds_alternative<ParseError>(parse(big)));
  std::string garbage(1 << 20, '\xff');
  CHECK(std::holds_alternative<ParseError>(parse(garbage)));
}
