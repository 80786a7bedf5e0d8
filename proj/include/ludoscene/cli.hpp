#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ludoscene::cli {

// Exit codes of every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitAnalysisFailure = 1;  // validation errors
inline constexpr int kExitUsage = 2;            // bad flags, unreadable or unparsable input

// Version of the --format json output schemas, emitted as "report_version".
inline constexpr int kReportVersion = 1;

// Environment variable naming a directory of <fixture>.lgs.json files that
// `detect --fixture` reads instead of the compiled-in corpus.
inline constexpr const char* kCorpusEnv = "LUDOSCENE_CORPUS";

// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ludoscene::cli
