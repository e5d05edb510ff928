#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nlomni/check.hpp"
#include "nlomni/instance.hpp"

namespace nlomni {

inline constexpr std::string_view report_schema = "nlomni.report/1";
std::string_view tool_version();

enum class Command { nlie, omni, nonabelian, nambu, linearization, calculus, all };

/// "check-nlie", ..., "all"
std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);

/// Suite ids a command runs, in canonical (sorted) order.
std::vector<std::string> suites_of(Command c);

struct SuiteResult {
  std::string id;
  std::vector<Check> checks;
  double timing_ms = 0;
  Status status() const { return combined_status(checks); }
};

struct TargetResult {
  std::string name;
  int arity = 0;
  int dim = 0;
  std::vector<SuiteResult> suites;
};

struct RunResult {
  Command command = Command::all;
  SuiteConfig config;
  std::vector<TargetResult> targets;
  double timing_ms = 0;
  /// FAIL if any check failed, SKIP if every check skipped, else PASS.
  Status status() const;
};

/// Runs one suite on an algebra. Polynomial work runs under a degree cap of
/// config.max_degree; DegreeOverflow propagates.
SuiteResult run_suite(const std::string& id, const NLieAlgebra& g, const SuiteConfig& config);

/// Every suite of the command on every target, sequentially, in order.
RunResult run(Command command, const std::vector<Instance>& targets, const SuiteConfig& config);

/// Versioned JSON report. Timing fields ("timing_ms") are the only
/// run-dependent content; strip_timing removes them.
nlohmann::json report_json(const RunResult& r);
nlohmann::json strip_timing(nlohmann::json report);
std::string report_text(const RunResult& r);

/// 0 when nothing failed, 1 otherwise.
int exit_code(const RunResult& r);

}  // namespace nlomni
