#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "loewner/matrix.hpp"

namespace loewner {

// The registered certifiable inequalities.
const std::vector<std::string>& inequality_ids();
bool is_inequality_id(const std::string& id);

struct TDomain {
  double lo;
  double hi;
  bool lo_open;
  bool hi_open;
  bool contains(double t) const;
};

TDomain t_domain(const std::string& id);

const std::vector<std::string>& map_kind_names();
// Map kinds admissible for an inequality (the inner-product chains need
// unital maps; non-map inequalities return an empty list).
std::vector<std::string> allowed_map_kinds(const std::string& id);

// Everything needed to regenerate one trial standalone.
struct TrialParams {
  std::string inequality_id;
  std::uint64_t seed = 0;  // per-trial seed; fully determines the instance
  int dim = 2;
  double t = 0.5;
  int N = 4;
  double cond_cap = 100.0;
  std::string map_kind;  // empty when the inequality takes no map
  int terms = 1;         // list length for the sum-form inequalities
  double tol = kDefaultTol;
};

// Generates the instance from params.seed and certifies; the report's slack
// is the worst slack over the asserted inequalities of the trial.
SlackReport run_trial(const TrialParams& params);

}  // namespace loewner
