#ifndef DNKIT_CLI_HPP
#define DNKIT_CLI_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dnkit/suite.hpp"

namespace dnkit::cli {

enum class Verdict { holds, refuted, error };

const char* to_string(Verdict v);

/// Exit code for a verdict: holds 0, refuted 1, error 2.
int exit_code(Verdict v);

struct ReportWitness {
  std::vector<std::pair<std::string, std::string>> assignments;
  std::string value;
};

/// Outcome of one CLI invocation. `verdict` is relative to the property the
/// command names (membership, vanishing, coset-freeness, ...).
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  Verdict verdict = Verdict::error;
  std::optional<std::string> defect;
  std::optional<ReportWitness> witness;
  std::string note;
  std::string error;
  long timing_ms = 0;
  std::vector<CheckResult> checks;
};

inline constexpr int kSchemaVersion = 1;

/// Flat JSON object: schema, command, params, verdict, defect, witness,
/// timing_ms, plus note/error/checks when present.
std::string to_json(const Report& report);
std::string to_text(const Report& report);

struct RunResult {
  int exit_code = 2;
  std::string out;
  std::string err;
};

/// Parses argv (without the program name) and runs the command.
RunResult run(const std::vector<std::string>& args);

}  // namespace dnkit::cli

#endif  // DNKIT_CLI_HPP
