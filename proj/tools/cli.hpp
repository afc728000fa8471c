#ifndef CAYLEYLAB_TOOLS_CLI_HPP
#define CAYLEYLAB_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cayleylab::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapExceeded = 3,
};

enum class Format { kText, kJson, kDimacs };

struct JobSpec {
  std::string command;
  int n = 4;
  std::string gens = "complete";
  std::string output;  // empty: stdout
  Format format = Format::kText;
  std::string what = "cayley";  // build: cayley | tgraph | line
  int max_n = 5;
  std::optional<std::uint64_t> cap;
  int jobs = 1;
  std::uint64_t seed = 0;
  int samples = 8;
  std::string statement = "all";  // verify
  std::string report_path;        // replay
};

Format parse_format(const std::string& text);

int cmd_build(const JobSpec& spec, std::ostream& out, std::ostream& err);
int cmd_aut(const JobSpec& spec, std::ostream& out, std::ostream& err);
int cmd_normality(const JobSpec& spec, std::ostream& out, std::ostream& err);
int cmd_verify(const JobSpec& spec, std::ostream& out, std::ostream& err);
// Re-runs every statement of a verify JSON report and compares verdicts.
int cmd_replay(const JobSpec& spec, std::ostream& out, std::ostream& err);

// Dispatches on spec.command, mapping library exceptions to exit codes.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

enum class Status { kPass, kFail, kSkipped };
std::string to_string(Status status);

struct StatementResult {
  std::string id;
  Status status = Status::kFail;
  std::string detail;
  nlohmann::json witness;
  double wall_ms = 0;
};

// Canonical statement ids in suite order.
std::vector<std::string> statement_ids();
// Resolves a canonical id or an accepted alias; empty when unknown.
std::optional<std::string> canonical_statement(const std::string& id);
// Runs one statement for complete S (or spec.gens when the statement is
// stated for general S) at degree spec.n.
StatementResult run_statement(const std::string& id, const JobSpec& spec);
nlohmann::json to_json(const StatementResult& result, const JobSpec& spec);

}  // namespace cayleylab::cli

#endif  // CAYLEYLAB_TOOLS_CLI_HPP
