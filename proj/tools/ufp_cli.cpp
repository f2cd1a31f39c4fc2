// ufp: command-line front end for the unbounded forecasting simulator.
//
//   ufp run --forecaster <spec> --skeptic <spec> --variant standard|modified
//           --mode exact|float --rounds N --sign-policy positive|alternate
//           [--stop-on-bankruptcy] --out <path>
//   ufp verify
//   ufp sweep --grid <json path> [--summary <csv path>] [--jobs N]
//
// Exit codes: 0 ok, 1 verification failure, 2 config error, 3 I/O error.

#include <CLI11.hpp>

#include <iostream>

#include "ufp/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Unbounded forecasting protocol simulator"};
  app.require_subcommand(1);

  ufp::RunConfig run;
  auto* run_cmd = app.add_subcommand("run", "Play one matchup and write its trace and verdict");
  run_cmd->add_option("--forecaster", run.forecaster, "powerlaw:c=<rat>,p=<int> | constant:c=<rat> | file:<path>")
      ->required();
  run_cmd->add_option("--skeptic", run.skeptic,
                      "zero | avoider:eps=<rat>[,decay=const|geo,ratio=<rat>] | momentum:m=<rat> | negv:v=<rat> | "
                      "replay:<path>")
      ->required();
  std::string variant = "standard";
  std::string mode = "exact";
  std::string sign_policy = "positive";
  run_cmd->add_option("--variant", variant, "Protocol variant")->check(CLI::IsMember({"standard", "modified"}));
  run_cmd->add_option("--mode", mode, "Arithmetic")->check(CLI::IsMember({"exact", "float"}));
  run_cmd->add_option("--rounds", run.horizon, "Horizon N")->required()->check(CLI::PositiveNumber);
  run_cmd->add_option("--sign-policy", sign_policy, "Tie-break for M = 0")
      ->check(CLI::IsMember({"positive", "alternate"}));
  run_cmd->add_flag("--stop-on-bankruptcy", run.stop_on_bankruptcy, "Stop once Skeptic's capital turns negative");
  run_cmd->add_option("--out", run.out, "Trace path (JSON lines); verdict goes to <out>.verdict.json")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");

  std::string grid_path;
  std::string summary_path;
  unsigned jobs = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "Play a grid of matchups and summarize them as CSV");
  sweep_cmd->add_option("--grid", grid_path, "Grid JSON")->required();
  sweep_cmd->add_option("--summary", summary_path, "Summary CSV (default <grid>.summary.csv)");
  sweep_cmd->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ufp::kExitOk : ufp::kExitConfigError;
  }

  if (*run_cmd) {
    run.variant = variant == "modified" ? ufp::ProtocolVariant::Modified : ufp::ProtocolVariant::Standard;
    run.mode = mode == "float" ? ufp::NumericMode::Float : ufp::NumericMode::ExactRational;
    run.sign_policy = sign_policy == "alternate" ? ufp::SignPolicy::Alternate : ufp::SignPolicy::PreferPositive;
    return ufp::run_command(run, std::cerr);
  }
  if (*verify_cmd) return ufp::verify_command(std::cout);
  if (*sweep_cmd) {
    std::vector<ufp::SweepEntry> grid;
    try {
      grid = ufp::load_sweep_grid(grid_path);
    } catch (const ufp::ProtocolError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return ufp::exit_code_for(e);
    }
    if (summary_path.empty()) summary_path = grid_path + ".summary.csv";
    return ufp::sweep_command(grid, summary_path, std::cerr, jobs);
  }
  return ufp::kExitConfigError;
}
