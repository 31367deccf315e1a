// Batch certification front end: generate seeded random instances of the
// registered operator-mean inequalities, certify them in the Loewner order,
// and emit machine-readable per-trial records.
//
// Exit codes: 0 all certifications passed, 1 at least one failed, 2 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loewner/runner.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void print_summary(const loewner::RunSummary& summary) {
  std::printf("%-14s %8s %8s %14s %14s %10s\n", "inequality", "trials", "failures",
              "min_slack", "median_slack", "time_s");
  for (const loewner::IdSummary& s : summary.per_id) {
    std::printf("%-14s %8d %8d %14.3e %14.3e %10.3f\n", s.inequality_id.c_str(),
                s.trials, s.failures, s.min_slack, s.median_slack,
                s.wall_time_seconds);
  }
  std::printf("total failures: %d\n", summary.total_failures);
}

int run_command(const loewner::RunConfig& config) {
  const loewner::RunSummary summary = loewner::run(config);
  print_summary(summary);
  return summary.total_failures == 0 ? kExitPass : kExitFailure;
}

int replay_command(const std::string& input_path, int line_number) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "replay: cannot open " << input_path << "\n";
    return kExitUsage;
  }
  std::string line;
  int line_index = 0;
  int mismatches = 0;
  int replayed = 0;
  while (std::getline(in, line)) {
    ++line_index;
    if (line.empty()) continue;
    if (line_number > 0 && line_index != line_number) continue;
    const loewner::TrialRecord rec = loewner::parse_jsonl_line(line);
    const loewner::ReplayResult result = loewner::replay(rec);
    ++replayed;
    if (!result.matches) {
      ++mismatches;
      std::printf("line %d: MISMATCH %s seed=%llu recorded=%.17g replayed=%.17g\n",
                  line_index, rec.params.inequality_id.c_str(),
                  static_cast<unsigned long long>(rec.params.seed),
                  result.recorded_slack, result.report.slack);
    }
  }
  if (replayed == 0) {
    std::cerr << "replay: no records replayed\n";
    return kExitUsage;
  }
  std::printf("replayed %d record(s), %d mismatch(es)\n", replayed, mismatches);
  return mismatches == 0 ? kExitPass : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loewner-order certification of operator-mean inequalities"};
  app.require_subcommand(1);

  loewner::RunConfig config;
  std::string format = "jsonl";
  int grid_points = 0;
  bool uniform = false;

  CLI::App* run_cmd = app.add_subcommand("run", "generate instances and certify");
  run_cmd->add_option("--ids", config.inequality_ids, "inequality ids (default: all)")
      ->delimiter(',')
      ->envname("LOEWNER_IDS");
  run_cmd->add_option("--dims", config.dims, "matrix dimensions to cycle through")
      ->delimiter(',')
      ->envname("LOEWNER_DIMS");
  run_cmd->add_option("--trials", config.trials, "trials per inequality")
      ->envname("LOEWNER_TRIALS");
  run_cmd->add_option("--seed", config.seed, "master seed")->envname("LOEWNER_SEED");
  CLI::Option* grid_opt =
      run_cmd->add_option("--t-grid", grid_points,
                          "grid mode with this many interior points (0 = default grid)")
          ->expected(0, 1)
          ->envname("LOEWNER_T_GRID");
  CLI::Option* uniform_opt =
      run_cmd->add_flag("--t-uniform", uniform, "draw t uniformly per trial")
          ->envname("LOEWNER_T_UNIFORM");
  grid_opt->excludes(uniform_opt);
  run_cmd->add_option("--N", config.N, "refinement series length")
      ->envname("LOEWNER_N");
  run_cmd->add_option("--cond-cap", config.cond_cap, "condition number cap")
      ->envname("LOEWNER_COND_CAP");
  run_cmd->add_option("--tol", config.tol, "relative certification tolerance")
      ->envname("LOEWNER_TOL");
  run_cmd->add_option("--map-kinds", config.map_kinds, "restrict the positive-map zoo")
      ->delimiter(',')
      ->envname("LOEWNER_MAP_KINDS");
  run_cmd->add_option("--out", config.output_path, "per-trial record output path")
      ->envname("LOEWNER_OUT");
  run_cmd->add_option("--format", format, "record format: jsonl or csv")
      ->check(CLI::IsMember({"jsonl", "csv"}))
      ->envname("LOEWNER_FORMAT");

  std::string replay_input;
  int replay_line = 0;
  CLI::App* replay_cmd = app.add_subcommand("replay", "re-run recorded trials");
  replay_cmd->add_option("--in", replay_input, "jsonl records to replay")->required();
  replay_cmd->add_option("--line", replay_line, "replay only this 1-based line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  config.t_uniform = uniform;
  config.t_grid_points = grid_points;
  config.format = format == "csv" ? loewner::OutputFormat::Csv
                                  : loewner::OutputFormat::Jsonl;

  try {
    if (run_cmd->parsed()) return run_command(config);
    return replay_command(replay_input, replay_line);
  } catch (const loewner::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
