#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"
#include "cayleylab/error.hpp"

namespace {

void add_graph_options(CLI::App* cmd, cayleylab::cli::JobSpec& spec) {
  cmd->add_option("--n", spec.n, "Degree of the symmetric group")->capture_default_str();
  cmd->add_option("--gens", spec.gens,
                  "complete | star | path | cycle | explicit list like \"(1,2),(2,3)\"")
      ->capture_default_str();
  cmd->add_option("--max-n", spec.max_n, "Refuse to build for larger n (hard limit 6)")
      ->capture_default_str();
  cmd->add_option("--cap", spec.cap, "Largest group to materialize element by element");
  cmd->add_option("--jobs", spec.jobs, "Worker threads for the automorphism search")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--output", spec.output, "Write to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = cayleylab::cli;
  cli::JobSpec spec;
  std::string format = "text";

  CLI::App app{"Cayley graphs of symmetric groups on transposition sets"};
  app.require_subcommand(1);

  auto* build = app.add_subcommand("build", "Build a graph and print its summary or export it");
  add_graph_options(build, spec);
  build->add_option("--format", format, "text | json | dimacs")->capture_default_str();
  build->add_option("--what", spec.what, "cayley | tgraph | line")->capture_default_str();

  auto* aut = app.add_subcommand("aut", "Automorphism group report (JSON)");
  add_graph_options(aut, spec);

  auto* normality = app.add_subcommand("normality", "Decide normality of the Cayley graph");
  add_graph_options(normality, spec);
  normality->add_option("--format", format, "text | json")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Check statements computationally");
  add_graph_options(verify, spec);
  verify->add_option("statement", spec.statement, "Statement id, alias, or 'all'")
      ->capture_default_str();
  verify->add_option("--format", format, "text | json")->capture_default_str();
  verify->add_option("--seed", spec.seed, "Seed for sampled checks")->capture_default_str();
  verify->add_option("--samples", spec.samples, "Roots sampled by vertex-transitivity")
      ->capture_default_str();

  auto* replay = app.add_subcommand("replay", "Re-run the statements of a verify JSON report");
  replay->add_option("report", spec.report_path, "Report file")->required();
  replay->add_option("--jobs", spec.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  spec.command = app.get_subcommands().front()->get_name();
  try {
    spec.format = cli::parse_format(format);
  } catch (const cayleylab::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsage;
  }
  return cli::run(spec, std::cout, std::cerr);
}
