#include "loewner/registry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "loewner/applications.hpp"
#include "loewner/holder_mccarthy.hpp"
#include "loewner/positive_map.hpp"
#include "loewner/refinements.hpp"

namespace loewner {

namespace {

constexpr std::uint64_t kTrialSalt = 0x10e37e5;

SlackReport worst_of(std::initializer_list<SlackReport> reports) {
  SlackReport out;
  bool first = true;
  bool all_passed = true;
  for (const SlackReport& rep : reports) {
    all_passed = all_passed && rep.passed;
    if (first || rep.slack < out.slack) {
      out = rep;
      first = false;
    }
  }
  out.passed = all_passed;
  return out;
}

void stamp(SlackReport& rep, const TrialParams& p) {
  rep.inequality_id = p.inequality_id;
  rep.seed = p.seed;
  rep.t = p.t;
}

bool image_is_healthy(const PositiveMap& map, const HpdMatrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(map.apply(m.raw())),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) return false;
  const double lmax = solver.eigenvalues().maxCoeff();
  return lmax > 0.0 && solver.eigenvalues().minCoeff() > 1e-10 * lmax;
}

std::vector<Eigen::Index> random_partition(Eigen::Index n, Rng& rng) {
  std::vector<Eigen::Index> sizes;
  Eigen::Index remaining = n;
  while (remaining > 0) {
    const Eigen::Index cut =
        1 + rng.uniform_int(std::min<Eigen::Index>(remaining, 3));
    sizes.push_back(cut);
    remaining -= cut;
  }
  return sizes;
}

// Builds a zoo member; matrix_dim receives the dimension the trial's
// matrices must have (block_diag_sum acts on stacked blocks).
PositiveMap make_map(const std::string& kind, Eigen::Index dim, Rng& rng,
                     bool unital_only, Eigen::Index* matrix_dim) {
  *matrix_dim = dim;
  if (kind == "identity") return PositiveMap::identity(dim);
  if (kind == "congruence") {
    Matrix x = random_unitary(dim, rng);
    if (!unital_only) {
      Eigen::VectorXd stretch(dim);
      for (Eigen::Index i = 0; i < dim; ++i) {
        stretch[i] = std::exp(rng.uniform(-0.7, 0.7));
      }
      x = x * stretch.cast<std::complex<double>>().asDiagonal() *
          random_unitary(dim, rng);
    }
    return PositiveMap::congruence(x);
  }
  if (kind == "pinching") return PositiveMap::pinching(random_partition(dim, rng));
  if (kind == "block_diag_sum") {
    const Eigen::Index block_dim = (dim + 1) / 2;
    *matrix_dim = 2 * block_dim;
    return PositiveMap::block_diag_sum(2, block_dim);
  }
  if (kind == "trace_functional") {
    const Matrix rho = random_hpd(dim, 10.0, rng).raw();
    return PositiveMap::trace_functional(rho / rho.trace().real());
  }
  if (kind == "convex_combination") {
    std::vector<PositiveMap> parts;
    parts.push_back(PositiveMap::identity(dim));
    parts.push_back(PositiveMap::pinching(random_partition(dim, rng)));
    if (unital_only) {
      parts.push_back(PositiveMap::congruence(random_unitary(dim, rng)));
    } else {
      Eigen::Index ignored = 0;
      parts.push_back(make_map("congruence", dim, rng, false, &ignored));
    }
    std::vector<double> weights(parts.size());
    double rest = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      weights[i] = rng.uniform(0.1, 0.5);
      rest += weights[i];
    }
    weights.back() = 1.0 - rest;
    return PositiveMap::convex_combination(std::move(weights), std::move(parts));
  }
  throw DomainError("unknown map kind: " + kind);
}

struct MapInstance {
  PositiveMap map;
  HpdMatrix a;
  HpdMatrix b;
};

// Instances whose images are numerically near-singular are resampled, not
// passed through; the reverse bounds assume positive invertible images.
MapInstance make_map_instance(const TrialParams& p, Rng& rng, bool unital_only) {
  for (std::uint64_t attempt = 0; attempt < 32; ++attempt) {
    Rng sub = rng.fork(attempt);
    Eigen::Index matrix_dim = 0;
    PositiveMap map = make_map(p.map_kind, p.dim, sub, unital_only, &matrix_dim);
    HpdMatrix a = random_hpd(matrix_dim, p.cond_cap, sub);
    HpdMatrix b = random_hpd(matrix_dim, p.cond_cap, sub);
    if (image_is_healthy(map, a) && image_is_healthy(map, b)) {
      return {std::move(map), std::move(a), std::move(b)};
    }
  }
  throw IllConditionedError("could not sample a well-conditioned map instance");
}

std::vector<HpdMatrix> make_list(Eigen::Index dim, int terms, double cond_cap,
                                 Rng& rng) {
  std::vector<HpdMatrix> list;
  list.reserve(static_cast<std::size_t>(terms));
  for (int i = 0; i < terms; ++i) {
    list.push_back(random_hpd(dim, cond_cap, rng));
  }
  return list;
}

// Positive semidefinite with exactly one zero eigenvalue.
Matrix make_rank_deficient_psd(Eigen::Index n, double cond_cap, Rng& rng) {
  const double half_log = 0.5 * std::log(cond_cap);
  Eigen::VectorXd lam(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lam[i] = std::exp(rng.uniform(-half_log, half_log));
  }
  Eigen::Index lowest = 0;
  lam.minCoeff(&lowest);
  lam[lowest] = 0.0;
  const Matrix u = random_unitary(n, rng);
  return hermitize(u * lam.cast<std::complex<double>>().asDiagonal() * u.adjoint());
}

void validate_params(const TrialParams& p) {
  if (!is_inequality_id(p.inequality_id)) {
    throw DomainError("unknown inequality id: " + p.inequality_id);
  }
  if (p.dim < 1 || p.dim > static_cast<int>(kMaxDim)) {
    throw DomainError("trial dim must lie in [1, 64]");
  }
  if (p.N < 1 || p.N > kMaxSeriesTerms) {
    throw DomainError("trial N must lie in [1, 16]");
  }
  // above 1e5 the congruenced spectra (cond ~ cap^2) leave the range where
  // the default certification tolerance is attainable
  if (!(p.cond_cap >= 1.0 && p.cond_cap <= 1e5)) {
    throw DomainError("cond_cap must lie in [1, 1e5]");
  }
  if (!(p.tol > 0.0)) throw DomainError("tol must be positive");
  if (!t_domain(p.inequality_id).contains(p.t)) {
    throw DomainError("t outside the domain of " + p.inequality_id);
  }
  if (!allowed_map_kinds(p.inequality_id).empty()) {
    const auto kinds = allowed_map_kinds(p.inequality_id);
    if (std::find(kinds.begin(), kinds.end(), p.map_kind) == kinds.end()) {
      throw DomainError("map kind '" + p.map_kind + "' not admissible for " +
                        p.inequality_id);
    }
  }
  if (p.terms < 1) throw DomainError("terms must be >= 1");
}

}  // namespace

const std::vector<std::string>& inequality_ids() {
  static const std::vector<std::string> ids = {
      "kitt",       "zhao_lower",    "zhao_upper",  "sab_lower",
      "sab_upper",  "ando",          "ando_rev",    "ando_rev_n2",
      "hm_classic", "hm_two_map",    "hm_mixed",    "hm_self",
      "hm_simple",  "holder_rev",    "concavity_rev",
      "tsallis_super", "tsallis_rev", "eps_limit"};
  return ids;
}

bool is_inequality_id(const std::string& id) {
  const auto& ids = inequality_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool TDomain::contains(double t) const {
  if (lo_open ? !(t > lo) : !(t >= lo)) return false;
  if (hi_open ? !(t < hi) : !(t <= hi)) return false;
  return true;
}

TDomain t_domain(const std::string& id) {
  if (id == "zhao_lower" || id == "zhao_upper" || id == "ando_rev_n2" ||
      id == "hm_two_map" || id == "hm_mixed" || id == "hm_self" ||
      id == "holder_rev" || id == "concavity_rev" || id == "tsallis_rev") {
    return {0.0, 1.0, true, true};
  }
  if (id == "hm_simple") return {0.0, 0.5, true, false};
  if (id == "tsallis_super") return {0.0, 1.0, true, false};
  return {0.0, 1.0, false, false};
}

const std::vector<std::string>& map_kind_names() {
  static const std::vector<std::string> kinds = {
      "identity",         "congruence",       "pinching",
      "block_diag_sum",   "trace_functional", "convex_combination"};
  return kinds;
}

std::vector<std::string> allowed_map_kinds(const std::string& id) {
  if (id == "ando" || id == "ando_rev" || id == "ando_rev_n2") {
    return map_kind_names();
  }
  if (id == "hm_two_map" || id == "hm_mixed" || id == "hm_self") {
    // these chains require unital maps
    return {"identity", "congruence", "pinching", "trace_functional",
            "convex_combination"};
  }
  return {};
}

SlackReport run_trial(const TrialParams& p) {
  validate_params(p);
  Rng rng(mix_seed(p.seed, kTrialSalt));
  SlackReport rep;

  if (p.inequality_id == "kitt") {
    const HpdMatrix a = random_hpd(p.dim, p.cond_cap, rng);
    const HpdMatrix b = random_hpd(p.dim, p.cond_cap, rng);
    const MeanChain chain = kittaneh_chain(a, b, p.t, p.tol);
    rep = worst_of({chain.lower_report, chain.upper_report});
  } else if (p.inequality_id == "zhao_lower") {
    const HpdMatrix a = random_hpd(p.dim, p.cond_cap, rng);
    const HpdMatrix b = random_hpd(p.dim, p.cond_cap, rng);
    rep = zhao_lower_n2(a, b, p.t, p.tol).report;
  } else if (p.inequality_id == "zhao_upper") {
    const HpdMatrix a = random_hpd(p.dim, p.cond_cap, rng);
    const HpdMatrix b = random_hpd(p.dim, p.cond_cap, rng);
    rep = zhao_upper_n2(a, b, p.t, p.tol).report;
  } else if (p.inequality_id == "sab_lower") {
    const HpdMatrix a = random_hpd(p.dim, p.cond_cap, rng);
    const HpdMatrix b = random_hpd(p.dim, p.cond_cap, rng);
    rep = sababheh_lower(a, b, p.t, p.N, p.tol).report;
  } else if (p.inequality_id == "sab_upper") {
    const HpdMatrix a = random_hpd(p.dim, p.cond_cap, rng);
    const HpdMatrix b = random_hpd(p.dim, p.cond_cap, rng);
    rep = sababheh_upper(a, b, p.t, p.N, p.tol).report;
  } else if (p.inequality_id == "ando") {
    const MapInstance inst = make_map_instance(p, rng, false);
    rep = ando_check(inst.map, inst.a, inst.b, p.t, p.tol);
  } else if (p.inequality_id == "ando_rev") {
    const MapInstance inst = make_map_instance(p, rng, false);
    rep = ando_reverse_bound(inst.map, inst.a, inst.b, p.t, p.N, p.tol).report;
  } else if (p.inequality_id == "ando_rev_n2") {
    const MapInstance inst = make_map_instance(p, rng, false);
    const TwoSidedReverseBound bound =
        ando_reverse_bound_n2(inst.map, inst.a, inst.b, p.t, p.tol);
    rep = worst_of({bound.tight_report, bound.loose_report});
  } else if (p.inequality_id == "hm_classic") {
    const HpdMatrix t_op = random_hpd(p.dim, p.cond_cap, rng);
    const UnitVector x = random_unit_vector(p.dim, rng);
    rep = hm_classic(t_op, x, p.t, p.tol);
  } else if (p.inequality_id == "hm_two_map" || p.inequality_id == "hm_mixed") {
    const MapInstance inst = make_map_instance(p, rng, true);
    Eigen::Index ignored = 0;
    Rng psi_rng = rng.fork(101);
    const PositiveMap psi = make_map(p.map_kind, p.dim, psi_rng, true, &ignored);
    const UnitVector x = random_unit_vector(inst.map.output_dim(), rng);
    const ScalarChain chain =
        p.inequality_id == "hm_two_map"
            ? hm_two_map_chain(inst.map, psi, inst.a, inst.b, x, p.t, p.tol)
            : hm_mixed_chain(inst.map, psi, inst.a, inst.b, x, p.t, p.tol);
    rep = worst_of({chain.lower_report, chain.upper_report});
  } else if (p.inequality_id == "hm_self") {
    const MapInstance inst = make_map_instance(p, rng, true);
    const UnitVector x = random_unit_vector(inst.map.output_dim(), rng);
    const ScalarChain chain = hm_self_reverse(inst.map, inst.a, x, p.t, p.tol);
    rep = worst_of({chain.lower_report, chain.upper_report});
  } else if (p.inequality_id == "hm_simple") {
    const HpdMatrix t_op = random_hpd(p.dim, p.cond_cap, rng);
    const UnitVector x = random_unit_vector(p.dim, rng);
    const SimpleReverse rev = hm_reverse_simple(t_op, x, p.t, p.tol);
    rep = rev.loose_asserted ? worst_of({rev.tight_report, rev.loose_report})
                             : rev.tight_report;
  } else if (p.inequality_id == "holder_rev") {
    const std::vector<HpdMatrix> as = make_list(p.dim, p.terms, p.cond_cap, rng);
    const std::vector<HpdMatrix> bs = make_list(p.dim, p.terms, p.cond_cap, rng);
    const OperatorReverse rev = holder_reverse(as, bs, p.t, p.tol);
    rep = worst_of({rev.report, rev.base_report});
  } else if (p.inequality_id == "concavity_rev") {
    const std::vector<HpdMatrix> ts = make_list(p.dim, p.terms, p.cond_cap, rng);
    std::vector<double> raw(ts.size());
    double total = 0.0;
    for (double& w : raw) {
      w = rng.uniform(0.2, 1.0);
      total += w;
    }
    // normalize, with the exact complement in the last slot
    std::vector<double> weights(ts.size());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      weights[i] = raw[i] / total;
      acc += weights[i];
    }
    weights.back() = 1.0 - acc;
    const OperatorReverse rev = concavity_reverse(weights, ts, p.t, p.tol);
    rep = worst_of({rev.report, rev.base_report});
  } else if (p.inequality_id == "tsallis_super") {
    const std::vector<HpdMatrix> as = make_list(p.dim, p.terms, p.cond_cap, rng);
    const std::vector<HpdMatrix> bs = make_list(p.dim, p.terms, p.cond_cap, rng);
    rep = tsallis_superadditivity(as, bs, p.t, p.tol);
  } else if (p.inequality_id == "tsallis_rev") {
    const std::vector<HpdMatrix> as = make_list(p.dim, p.terms, p.cond_cap, rng);
    const std::vector<HpdMatrix> bs = make_list(p.dim, p.terms, p.cond_cap, rng);
    rep = tsallis_reverse(as, bs, p.t, p.tol).report;
  } else if (p.inequality_id == "eps_limit") {
    // The trial certifies the singular-limit contract. Spectra spread over
    // many decades stretch the eps-crossover region past the schedule that
    // the functional-calculus guard permits, so these instances stay at
    // moderate conditioning; the other inequalities cover conditioning
    // stress.
    const double eff_cap = std::min(p.cond_cap, 100.0);
    const HpdMatrix a = random_hpd(p.dim, eff_cap, rng);
    const Matrix b = make_rank_deficient_psd(p.dim, eff_cap, rng);
    const RegularizedMean reg = epsilon_regularized_mean(a, b, p.t, {}, p.tol);
    rep.dim = p.dim;
    rep.slack = reg.monotonicity_slacks.empty()
                    ? 0.0
                    : *std::min_element(reg.monotonicity_slacks.begin(),
                                        reg.monotonicity_slacks.end());
    rep.scale = spectral_norm(reg.limit_estimate) + spectral_norm(a.raw());
    rep.passed = reg.monotone && reg.converged;
    rep.lhs_id = "regularized_iterates";
    rep.rhs_id = "loewner_monotone";
  } else {
    throw DomainError("unknown inequality id: " + p.inequality_id);
  }

  stamp(rep, p);
  if (rep.dim == 0) rep.dim = p.dim;
  return rep;
}

}  // namespace loewner
