#include "ludoscene/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ludoscene/capillarity.hpp"
#include "ludoscene/catalog.hpp"
#include "ludoscene/corpus.hpp"
#include "ludoscene/detector.hpp"
#include "ludoscene/errors.hpp"
#include "ludoscene/format.hpp"
#include "ludoscene/index.hpp"
#include "ludoscene/scaffold.hpp"
#include "ludoscene/validate.hpp"

namespace ludoscene::cli {

namespace {

using Json = nlohmann::ordered_json;

// Carries an exit code out of a command body.
struct Exit {
  int code;
};

std::string dump(const Json& j) { return j.dump(2, ' ', false, Json::error_handler_t::replace); }

Json versioned() {
  Json j = Json::object();
  j["report_version"] = kReportVersion;
  return j;
}

Json id_array(const std::set<std::string>& ids) {
  Json a = Json::array();
  for (const auto& id : ids) a.push_back(id);
  return a;
}

Json pattern_array(const std::set<PatternId>& ids) {
  Json a = Json::array();
  for (auto id : ids) a.push_back(to_string(id));
  return a;
}

std::string join(const std::set<std::string>& ids) {
  std::string out;
  for (const auto& id : ids) {
    out += ' ';
    out += id;
  }
  return out;
}

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    throw Exit{kExitUsage};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Scenario parse_or_exit(const std::string& text, const std::string& origin, std::ostream& err) {
  auto parsed = parse(text);
  if (const auto* e = std::get_if<ParseError>(&parsed)) {
    err << origin << ": " << format_parse_error(*e) << "\n";
    throw Exit{kExitUsage};
  }
  return std::get<Scenario>(std::move(parsed));
}

Scenario load(const std::string& path, std::ostream& err) {
  return parse_or_exit(read_file(path, err), path, err);
}

// Prints error diagnostics and exits 1 when the scenario is not well formed.
void require_clean(const Scenario& s, const std::string& origin, std::ostream& err) {
  const auto diagnostics = validate(s);
  if (!has_errors(diagnostics)) return;
  for (const auto& d : diagnostics) {
    if (d.severity == Severity::kError) err << origin << ": " << format_diagnostic(d) << "\n";
  }
  throw Exit{kExitAnalysisFailure};
}

std::string ratio(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// --- validate -------------------------------------------------------------

int cmd_validate(const std::string& path, bool json, std::ostream& out, std::ostream& err) {
  const auto s = load(path, err);
  const auto diagnostics = validate(s);
  std::size_t errors = 0;
  for (const auto& d : diagnostics) errors += d.severity == Severity::kError ? 1 : 0;
  const std::size_t warnings = diagnostics.size() - errors;
  if (json) {
    Json j = versioned();
    Json list = Json::array();
    for (const auto& d : diagnostics) {
      Json dj = Json::object();
      dj["code"] = to_string(d.code);
      dj["severity"] = to_string(d.severity);
      dj["path"] = d.path;
      dj["message"] = d.message;
      list.push_back(std::move(dj));
    }
    j["diagnostics"] = std::move(list);
    j["errors"] = errors;
    j["warnings"] = warnings;
    out << dump(j) << "\n";
  } else {
    for (const auto& d : diagnostics) out << format_diagnostic(d) << "\n";
    out << errors << " error(s), " << warnings << " warning(s)\n";
  }
  return errors == 0 ? kExitOk : kExitAnalysisFailure;
}

// --- detect ---------------------------------------------------------------

Json report_json(const PatternReport& report) {
  Json j = versioned();
  j["extensions"] = Json::array({"coverage"});
  j["present"] = pattern_array(report.present());
  Json patterns = Json::array();
  for (const auto& f : report.findings) {
    Json pj = Json::object();
    pj["id"] = to_string(f.id);
    pj["name"] = rule(f.id).name;
    pj["present"] = f.present;
    Json evidence = Json::array();
    for (const auto& e : f.evidence) evidence.push_back(Json{{"role", e.role}, {"id", e.id}});
    pj["evidence"] = std::move(evidence);
    Json unmet = Json::array();
    for (const auto& u : f.unmet) {
      Json uj = Json::object();
      uj["condition"] = u.condition;
      uj["subject"] = u.subject;
      uj["closeness"] = u.closeness;
      uj["hint"] = u.hint;
      unmet.push_back(std::move(uj));
    }
    pj["unmet"] = std::move(unmet);
    if (f.coverage) pj["coverage"] = *f.coverage;
    patterns.push_back(std::move(pj));
  }
  j["patterns"] = std::move(patterns);
  return j;
}

void print_report(const PatternReport& report, std::ostream& out) {
  for (const auto& f : report.findings) {
    out << to_string(f.id) << (f.present ? " present " : " absent  ") << rule(f.id).name << "\n";
    for (const auto& e : f.evidence) out << "  " << e.role << ": " << e.id << "\n";
    for (const auto& u : f.unmet) out << "  unmet " << u.condition << ": " << u.subject << "\n";
    if (f.coverage) out << "  coverage (extension): " << ratio(*f.coverage) << "\n";
  }
  out << "present: " << format_pattern_set(report.present()) << "\n";
}

std::string fixture_text(const std::string& name, std::ostream& err) {
  if (const char* dir = std::getenv(kCorpusEnv); dir != nullptr && *dir != '\0') {
    return read_file(std::string(dir) + "/" + name + std::string(kScenarioExtension), err);
  }
  try {
    return fixture(name).document;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
}

int cmd_detect(const std::string& path, const std::string& fixture_name,
               const std::string& explain_id, bool json, std::ostream& out, std::ostream& err) {
  if (path.empty() == fixture_name.empty()) {
    err << "error: detect takes exactly one of <file> or --fixture <name>\n";
    throw Exit{kExitUsage};
  }
  std::optional<PatternId> explain_pattern;
  if (!explain_id.empty()) {
    explain_pattern = pattern_id_from(explain_id);
    if (!explain_pattern) {
      err << "error: unknown pattern id '" << explain_id << "'\n";
      throw Exit{kExitUsage};
    }
  }
  const std::string origin = path.empty() ? fixture_name : path;
  const auto s = parse_or_exit(path.empty() ? fixture_text(fixture_name, err) : read_file(path, err),
                               origin, err);
  require_clean(s, origin, err);
  const auto report = detect(s);
  if (explain_pattern) {
    const auto text = explain(report, *explain_pattern);
    if (json) {
      Json j = versioned();
      j["pattern"] = to_string(*explain_pattern);
      j["explanation"] = text;
      out << dump(j) << "\n";
    } else {
      out << text;
    }
    return kExitOk;
  }
  if (json) {
    out << dump(report_json(report)) << "\n";
  } else {
    print_report(report, out);
  }
  return kExitOk;
}

// --- diff -----------------------------------------------------------------

int cmd_diff(const std::string& before_path, const std::string& after_path, bool json,
             std::ostream& out, std::ostream& err) {
  const auto before = load(before_path, err);
  const auto after = load(after_path, err);
  require_clean(before, before_path, err);
  require_clean(after, after_path, err);
  const auto d = diff(detect(before), detect(after));
  if (json) {
    Json j = versioned();
    j["before"] = pattern_array(d.before);
    j["after"] = pattern_array(d.after);
    j["added"] = pattern_array(d.added);
    j["removed"] = pattern_array(d.removed);
    out << dump(j) << "\n";
    return kExitOk;
  }
  auto line = [&](const char* label, const std::set<PatternId>& ids) {
    out << label << ":";
    if (!ids.empty()) out << " " << format_pattern_set(ids);
    out << "\n";
  };
  line("before", d.before);
  line("after", d.after);
  line("added", d.added);
  line("removed", d.removed);
  return kExitOk;
}

// --- show -----------------------------------------------------------------

int cmd_show(const std::string& path, const std::string& element, bool json, std::ostream& out,
             std::ostream& err) {
  const auto s = load(path, err);
  require_clean(s, path, err);
  const auto sets = propagate(s);
  const ScenarioIndex index(s);

  std::vector<const LudicElement*> selected;
  if (element.empty()) {
    selected = index.ludic_elements();
  } else {
    const auto* e = index.ludic(element);
    if (e == nullptr) {
      err << "error: no ludic element with id '" << element << "'\n";
      throw Exit{kExitUsage};
    }
    selected.push_back(e);
  }

  Json list = Json::array();
  for (const auto* e : selected) {
    const auto& entry = sets.at(e->id);
    // Subtree rollups for missions, or for whatever element was asked for.
    std::optional<EffectiveEntry> subtree;
    if (!element.empty() || e->level == LudicLevel::kMission) {
      subtree = aggregate_subtree(s, sets, e->id);
    }
    if (json) {
      Json ej = Json::object();
      ej["id"] = e->id;
      ej["path"] = index.find(e->id)->path;
      ej["level"] = to_string(e->level);
      ej["effective_competences"] = id_array(entry.competences);
      ej["effective_participants"] = id_array(entry.participants);
      if (subtree) {
        ej["subtree_competences"] = id_array(subtree->competences);
        ej["subtree_participants"] = id_array(subtree->participants);
      }
      list.push_back(std::move(ej));
      continue;
    }
    out << index.find(e->id)->path << " (" << to_string(e->level) << ")\n";
    out << "  competences:" << join(entry.competences) << "\n";
    out << "  participants:" << join(entry.participants) << "\n";
    if (subtree) {
      out << "  subtree competences:" << join(subtree->competences) << "\n";
      out << "  subtree participants:" << join(subtree->participants) << "\n";
    }
  }
  if (json) {
    Json j = versioned();
    j["elements"] = std::move(list);
    out << dump(j) << "\n";
  }
  return kExitOk;
}

// --- scaffold -------------------------------------------------------------

int cmd_scaffold(const ScaffoldConfig& config, const std::string& output, std::ostream& out,
                 std::ostream& err) {
  std::string text;
  try {
    text = serialize(scaffold(config));
  } catch (const ConfigError& e) {
    err << "error: invalid scaffold configuration: " << e.what() << "\n";
    throw Exit{kExitUsage};
  }
  if (output.empty() || output == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream file(output, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << output << "\n";
    throw Exit{kExitUsage};
  }
  out << "wrote " << output << "\n";
  return kExitOk;
}

// --- rulebook -------------------------------------------------------------

int cmd_rulebook(bool json, std::ostream& out) {
  if (!json) {
    out << render_rulebook();
    return kExitOk;
  }
  Json j = versioned();
  Json rules = Json::array();
  for (const auto& r : catalog()) {
    Json rj = Json::object();
    rj["id"] = to_string(r.id);
    rj["name"] = r.name;
    rj["quantifier"] = to_string(r.quantifier);
    rj["statement"] = r.statement;
    Json conditions = Json::array();
    for (const auto& c : r.conditions) conditions.push_back(Json{{"name", c.name}, {"text", c.text}});
    rj["conditions"] = std::move(conditions);
    Json evidence = Json::array();
    for (const auto& e : r.evidence_schema) {
      Json ej = Json::object();
      ej["role"] = e.role;
      ej["kind"] = to_string(e.kind);
      ej["optional"] = e.optional;
      ej["repeated"] = e.repeated;
      evidence.push_back(std::move(ej));
    }
    rj["evidence_schema"] = std::move(evidence);
    rules.push_back(std::move(rj));
  }
  j["rules"] = std::move(rules);
  out << dump(j) << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Learning-game scenario analysis: validate, detect design patterns, diff, "
               "inspect capillarity, generate scenario shells",
               "ludoscene"};
  app.require_subcommand(1, 1);

  std::string format = "text";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string file;
  std::string file2;
  std::string fixture_name;
  std::string element;
  std::string explain_id;
  std::string output;
  ScaffoldConfig config;
  std::string disciplines;

  auto* validate_cmd = app.add_subcommand("validate", "Report structural diagnostics");
  validate_cmd->add_option("file", file, "Scenario document")->required();
  add_format(validate_cmd);

  auto* detect_cmd = app.add_subcommand("detect", "Detect the P1-P9 design patterns");
  detect_cmd->add_option("file", file, "Scenario document");
  detect_cmd->add_option("--fixture", fixture_name, "Corpus fixture name instead of a file");
  detect_cmd->add_option("--explain", explain_id, "Explain one pattern (P1..P9)");
  add_format(detect_cmd);

  auto* diff_cmd = app.add_subcommand("diff", "Compare detected patterns of two revisions");
  diff_cmd->add_option("before", file, "Earlier revision")->required();
  diff_cmd->add_option("after", file2, "Later revision")->required();
  add_format(diff_cmd);

  auto* show_cmd = app.add_subcommand("show", "Show effective competences and participants");
  show_cmd->add_option("file", file, "Scenario document")->required();
  show_cmd->add_option("--element", element, "Ludic element id");
  add_format(show_cmd);

  auto* scaffold_cmd = app.add_subcommand("scaffold", "Write a pattern-rich scenario shell");
  scaffold_cmd->add_option("-o,--output", output, "Output file ('-' for stdout)");
  scaffold_cmd->add_option("--title", config.title, "Scenario title");
  scaffold_cmd->add_option("--team-size", config.learner_team_size, "Learners per team (2-4)");
  scaffold_cmd->add_option("--core-missions", config.core_mission_count, "Number of core missions");
  scaffold_cmd->add_flag("--report-mission", config.include_report_mission,
                         "Append a post-game report mission");
  scaffold_cmd->add_option("--disciplines", disciplines,
                           "Comma-separated discipline labels (at least two)");
  scaffold_cmd->add_option("--competences-per-module", config.seed_competences_per_module,
                           "Placeholder competences per module (at least two)");
  add_format(scaffold_cmd);

  auto* rulebook_cmd = app.add_subcommand("rulebook", "Print the pattern rules");
  add_format(rulebook_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const bool json = format == "json";
  try {
    if (validate_cmd->parsed()) return cmd_validate(file, json, out, err);
    if (detect_cmd->parsed()) return cmd_detect(file, fixture_name, explain_id, json, out, err);
    if (diff_cmd->parsed()) return cmd_diff(file, file2, json, out, err);
    if (show_cmd->parsed()) return cmd_show(file, element, json, out, err);
    if (scaffold_cmd->parsed()) {
      if (!disciplines.empty()) {
        config.discipline_labels.clear();
        std::stringstream ss(disciplines);
        for (std::string label; std::getline(ss, label, ',');) {
          config.discipline_labels.push_back(label);
        }
      }
      return cmd_scaffold(config, output, out, err);
    }
    if (rulebook_cmd->parsed()) return cmd_rulebook(json, out);
  } catch (const Exit& e) {
    return e.code;
  } catch (const ScenarioRejected& e) {
    err << "error: " << e.what() << "\n";
    return kExitAnalysisFailure;
  }
  return kExitUsage;
}

}  // namespace ludoscene::cli
