#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewner/registry.hpp"

namespace loewner {

enum class OutputFormat { Jsonl, Csv };

struct RunConfig {
  std::vector<std::string> inequality_ids;  // empty = all registered
  std::vector<int> dims = {2, 3, 4};
  int trials = 100;  // per inequality
  std::uint64_t seed = 1;
  bool t_uniform = false;
  int t_grid_points = 0;  // 0 = default kink-aware grid
  int N = 4;
  double cond_cap = 100.0;
  double tol = kDefaultTol;
  std::vector<std::string> map_kinds;  // empty = full zoo
  std::string output_path;             // empty = no per-trial records written
  OutputFormat format = OutputFormat::Jsonl;
};

struct TrialRecord {
  TrialParams params;
  int trial_index = 0;
  double slack = 0.0;
  double scale = 0.0;
  bool passed = false;
};

struct IdSummary {
  std::string inequality_id;
  int trials = 0;
  int failures = 0;
  double min_slack = 0.0;
  std::uint64_t min_slack_seed = 0;
  double median_slack = 0.0;
  double wall_time_seconds = 0.0;
};

struct RunSummary {
  std::vector<IdSummary> per_id;
  int total_failures = 0;
};

// {i/20 : i = 1..19}; hits the r0 kinks 1/4, 1/2, 3/4 exactly.
std::vector<double> default_t_grid();
std::vector<double> t_grid(int points);

RunSummary run(const RunConfig& config);
RunSummary run(const RunConfig& config, std::vector<TrialRecord>* records_out);

std::string to_jsonl_line(const TrialRecord& rec);
TrialRecord parse_jsonl_line(const std::string& line);
std::string csv_header();
std::string to_csv_line(const TrialRecord& rec);

struct ReplayResult {
  SlackReport report;
  double recorded_slack = 0.0;
  bool matches = false;
};

// Re-runs a recorded trial; matches iff the slack reproduces within 1e-14
// relative to the record's magnitude/scale.
ReplayResult replay(const TrialRecord& rec);

}  // namespace loewner
