#include "loewner/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

namespace loewner {

namespace {

using nlohmann::json;

std::vector<double> domain_filtered_grid(const std::vector<double>& grid,
                                         const TDomain& dom) {
  std::vector<double> out;
  for (const double t : grid) {
    if (dom.contains(t)) out.push_back(t);
  }
  return out;
}

double draw_t(const TDomain& dom, Rng& rng) {
  const double u = rng.uniform01_open();
  return dom.lo + (dom.hi - dom.lo) * u;
}

void validate_config(const RunConfig& config) {
  if (config.trials < 1) throw DomainError("run: trials must be >= 1");
  if (config.dims.empty()) throw DomainError("run: dims must be nonempty");
  for (const int d : config.dims) {
    if (d < 1 || d > static_cast<int>(kMaxDim)) {
      throw DomainError("run: dims must lie in [1, 64]");
    }
  }
  if (!(config.tol > 0.0)) throw DomainError("run: tol must be positive");
  if (!(config.cond_cap >= 1.0 && config.cond_cap <= 1e5)) {
    throw DomainError("run: cond_cap must lie in [1, 1e5]");
  }
  if (config.N < 1 || config.N > 16) throw DomainError("run: N must lie in [1, 16]");
  if (config.t_grid_points < 0) throw DomainError("run: grid size must be >= 0");
  for (const std::string& id : config.inequality_ids) {
    if (!is_inequality_id(id)) throw DomainError("run: unknown inequality id: " + id);
  }
  for (const std::string& kind : config.map_kinds) {
    const auto& kinds = map_kind_names();
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) {
      throw DomainError("run: unknown map kind: " + kind);
    }
  }
}

}  // namespace

std::vector<double> default_t_grid() {
  std::vector<double> grid;
  grid.reserve(19);
  for (int i = 1; i <= 19; ++i) {
    grid.push_back(static_cast<double>(i) / 20.0);
  }
  return grid;
}

std::vector<double> t_grid(int points) {
  if (points <= 0) return default_t_grid();
  std::vector<double> grid;
  for (int i = 1; i <= points; ++i) {
    grid.push_back(static_cast<double>(i) / (points + 1.0));
  }
  // always include the kinks of r0
  for (const double kink : {0.25, 0.5, 0.75}) grid.push_back(kink);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

RunSummary run(const RunConfig& config) { return run(config, nullptr); }

RunSummary run(const RunConfig& config, std::vector<TrialRecord>* records_out) {
  validate_config(config);
  const std::vector<std::string> ids =
      config.inequality_ids.empty() ? inequality_ids() : config.inequality_ids;
  const std::vector<double> grid = t_grid(config.t_grid_points);

  std::ofstream out_file;
  if (!config.output_path.empty()) {
    out_file.open(config.output_path, std::ios::binary | std::ios::trunc);
    if (!out_file) throw Error("run: cannot open output path " + config.output_path);
    if (config.format == OutputFormat::Csv) out_file << csv_header();
  }

  RunSummary summary;
  for (std::size_t id_index = 0; id_index < ids.size(); ++id_index) {
    const std::string& id = ids[id_index];
    const TDomain dom = t_domain(id);
    const std::vector<double> id_grid = domain_filtered_grid(grid, dom);
    if (!config.t_uniform && id_grid.empty()) {
      throw DomainError("run: the t grid has no points in the domain of " + id);
    }

    std::vector<std::string> kinds = allowed_map_kinds(id);
    if (!kinds.empty() && !config.map_kinds.empty()) {
      std::vector<std::string> filtered;
      for (const std::string& k : kinds) {
        if (std::find(config.map_kinds.begin(), config.map_kinds.end(), k) !=
            config.map_kinds.end()) {
          filtered.push_back(k);
        }
      }
      if (filtered.empty()) {
        throw DomainError("run: no admissible map kinds left for " + id);
      }
      kinds = std::move(filtered);
    }

    IdSummary id_summary;
    id_summary.inequality_id = id;
    std::vector<double> slacks;
    slacks.reserve(static_cast<std::size_t>(config.trials));
    const auto start = std::chrono::steady_clock::now();

    for (int trial = 0; trial < config.trials; ++trial) {
      TrialParams params;
      params.inequality_id = id;
      params.seed = mix_seed(mix_seed(config.seed, id_index), trial);
      params.dim = config.dims[trial % config.dims.size()];
      params.N = config.N;
      params.cond_cap = config.cond_cap;
      params.tol = config.tol;
      params.terms = 1 + trial % 4;
      if (!kinds.empty()) params.map_kind = kinds[trial % kinds.size()];
      if (config.t_uniform) {
        Rng t_rng(mix_seed(params.seed, 0x7));
        params.t = draw_t(dom, t_rng);
      } else {
        params.t = id_grid[trial % id_grid.size()];
      }

      const SlackReport rep = run_trial(params);
      TrialRecord rec;
      rec.params = params;
      rec.trial_index = trial;
      rec.slack = rep.slack;
      rec.scale = rep.scale;
      rec.passed = rep.passed;

      if (!rep.passed) ++id_summary.failures;
      slacks.push_back(rep.slack);
      if (id_summary.trials == 0 || rep.slack < id_summary.min_slack) {
        id_summary.min_slack = rep.slack;
        id_summary.min_slack_seed = params.seed;
      }
      ++id_summary.trials;

      if (out_file.is_open()) {
        out_file << (config.format == OutputFormat::Jsonl ? to_jsonl_line(rec)
                                                          : to_csv_line(rec));
      }
      if (records_out) records_out->push_back(std::move(rec));
    }

    std::sort(slacks.begin(), slacks.end());
    id_summary.median_slack = slacks.empty() ? 0.0 : slacks[slacks.size() / 2];
    id_summary.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    summary.total_failures += id_summary.failures;
    summary.per_id.push_back(std::move(id_summary));
  }

  if (out_file.is_open()) {
    out_file.flush();
    if (!out_file) throw Error("run: failed writing " + config.output_path);
  }
  return summary;
}

std::string to_jsonl_line(const TrialRecord& rec) {
  json j;
  j["N"] = rec.params.N;
  j["cond_cap"] = rec.params.cond_cap;
  j["dim"] = rec.params.dim;
  j["inequality_id"] = rec.params.inequality_id;
  j["map_kind"] = rec.params.map_kind;
  j["passed"] = rec.passed;
  j["scale"] = rec.scale;
  j["seed"] = rec.params.seed;
  j["slack"] = rec.slack;
  j["t"] = rec.params.t;
  j["terms"] = rec.params.terms;
  j["tol"] = rec.params.tol;
  j["trial"] = rec.trial_index;
  return j.dump() + "\n";
}

TrialRecord parse_jsonl_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
  try {
    TrialRecord rec;
    rec.params.N = j.at("N").get<int>();
    rec.params.cond_cap = j.at("cond_cap").get<double>();
    rec.params.dim = j.at("dim").get<int>();
    rec.params.inequality_id = j.at("inequality_id").get<std::string>();
    rec.params.map_kind = j.at("map_kind").get<std::string>();
    rec.passed = j.at("passed").get<bool>();
    rec.scale = j.at("scale").get<double>();
    rec.params.seed = j.at("seed").get<std::uint64_t>();
    rec.slack = j.at("slack").get<double>();
    rec.params.t = j.at("t").get<double>();
    rec.params.terms = j.at("terms").get<int>();
    rec.params.tol = j.at("tol").get<double>();
    rec.trial_index = j.at("trial").get<int>();
    return rec;
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed record: ") + e.what());
  }
}

std::string csv_header() {
  return "inequality_id,seed,trial,dim,t,N,cond_cap,map_kind,terms,tol,slack,scale,"
         "passed\n";
}

std::string to_csv_line(const TrialRecord& rec) {
  char buffer[512];
  std::snprintf(buffer, sizeof(buffer),
                "%s,%llu,%d,%d,%.17g,%d,%.17g,%s,%d,%.17g,%.17g,%.17g,%d\n",
                rec.params.inequality_id.c_str(),
                static_cast<unsigned long long>(rec.params.seed), rec.trial_index,
                rec.params.dim, rec.params.t, rec.params.N, rec.params.cond_cap,
                rec.params.map_kind.c_str(), rec.params.terms, rec.params.tol,
                rec.slack, rec.scale, rec.passed ? 1 : 0);
  return buffer;
}

ReplayResult replay(const TrialRecord& rec) {
  ReplayResult out;
  out.report = run_trial(rec.params);
  out.recorded_slack = rec.slack;
  const double tolerance =
      1e-14 * std::max({std::abs(rec.slack), rec.scale, 1.0});
  out.matches = std::abs(out.report.slack - rec.slack) <= tolerance;
  return out;
}

}  // namespace loewner
