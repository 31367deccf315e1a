#include "loewner/holder_mccarthy.hpp"

#include <cmath>
#include <functional>

#include "loewner/scalar_young.hpp"

namespace loewner {

namespace {

void require_interior_weight(double t, const char* who) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in (0, 1)");
  }
}

void require_unital(const PositiveMap& phi, const char* who) {
  if (!phi.unital()) {
    throw DomainError(std::string(who) + ": map must be unital");
  }
}

void require_compatible(const PositiveMap& phi, const HpdMatrix& a, const UnitVector& x,
                        const char* who) {
  if (phi.input_dim() != a.dim() || phi.output_dim() != x.dim()) {
    throw DimensionError(std::string(who) + ": dimension mismatch");
  }
}

struct WeightChainValues {
  double lower;
  double middle;
  double upper;
  // positive term subtracted inside `middle`; certifications compare the
  // uncancelled sides so the tolerance sees the problem scale even when the
  // whole chain collapses to zero (dimension-1 inputs, eigenvector x)
  double anchor;
};

// Two-sided bounds on (1-t) k + t s - k^{1-t} s^t assembled from monomial
// atoms ka(p) ~ k^p and sb(q) ~ s^q. All inner-product chains are instances
// of this with different atom evaluators.
WeightChainValues two_sided_young(const std::function<double(double)>& ka,
                                  const std::function<double(double)>& sb, double t) {
  const WeightConstants w = weight_constants(t);
  const double square = ka(1.0) + sb(1.0) - 2.0 * ka(0.5) * sb(0.5);
  const double bracket_k = ka(0.5) * sb(0.5) + ka(1.0) - 2.0 * ka(0.75) * sb(0.25);
  const double bracket_s = ka(0.5) * sb(0.5) + sb(1.0) - 2.0 * ka(0.25) * sb(0.75);
  WeightChainValues out;
  out.anchor = ka(1.0 - t) * sb(t);
  out.middle = (1.0 - t) * ka(1.0) + t * sb(1.0) - out.anchor;
  if (t <= 0.5) {
    out.lower = w.r * square + w.r0 * bracket_k;
    out.upper = w.R * square - w.r0 * bracket_s;
  } else {
    out.lower = w.r * square + w.r0 * bracket_s;
    out.upper = w.R * square - w.r0 * bracket_k;
  }
  return out;
}

ScalarChain finish_chain(const WeightChainValues& v, const char* id, double t,
                         double tol) {
  ScalarChain chain;
  chain.lower = v.lower;
  chain.middle = v.middle;
  chain.upper = v.upper;
  chain.lower_report = scalar_geq(v.middle + v.anchor, v.lower + v.anchor, tol);
  chain.lower_report.inequality_id = id;
  chain.lower_report.lhs_id = "lower_bound";
  chain.lower_report.rhs_id = "middle";
  chain.lower_report.t = t;
  chain.upper_report = scalar_geq(v.upper + v.anchor, v.middle + v.anchor, tol);
  chain.upper_report.inequality_id = id;
  chain.upper_report.lhs_id = "middle";
  chain.upper_report.rhs_id = "upper_bound";
  chain.upper_report.t = t;
  return chain;
}

}  // namespace

SlackReport hm_classic(const HpdMatrix& t_op, const UnitVector& x, double t, double tol) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("hm_classic: t must lie in [0, 1]");
  }
  if (t_op.dim() != x.dim()) throw DimensionError("hm_classic: dimension mismatch");
  PowerFamily fam(t_op);
  const double p = quad_form(t_op.raw(), x);
  const double qt = quad_form(fam.power(t), x);
  SlackReport rep = scalar_geq(std::pow(p, t), qt, tol);
  rep.inequality_id = "hm_classic";
  rep.lhs_id = "mean_of_power";
  rep.rhs_id = "power_of_mean";
  rep.t = t;
  rep.dim = static_cast<int>(t_op.dim());
  return rep;
}

ScalarChain hm_two_map_chain(const PositiveMap& phi, const PositiveMap& psi,
                             const HpdMatrix& a, const HpdMatrix& b, const UnitVector& x,
                             double t, double tol) {
  require_interior_weight(t, "hm_two_map_chain");
  require_unital(phi, "hm_two_map_chain");
  require_unital(psi, "hm_two_map_chain");
  require_compatible(phi, a, x, "hm_two_map_chain");
  require_compatible(psi, b, x, "hm_two_map_chain");
  PowerFamily fam_a(a);
  PowerFamily fam_b(b);
  const auto ka = [&](double p) {
    return p == 0.0 ? 1.0 : quad_form(hermitize(phi.apply(fam_a.power(p))), x);
  };
  const auto sb = [&](double q) {
    return q == 0.0 ? 1.0 : quad_form(hermitize(psi.apply(fam_b.power(q))), x);
  };
  ScalarChain chain = finish_chain(two_sided_young(ka, sb, t), "hm_two_map", t, tol);
  chain.lower_report.dim = static_cast<int>(a.dim());
  chain.upper_report.dim = static_cast<int>(a.dim());
  return chain;
}

ScalarChain hm_mixed_chain(const PositiveMap& phi, const PositiveMap& psi,
                           const HpdMatrix& a, const HpdMatrix& b, const UnitVector& x,
                           double t, double tol) {
  require_interior_weight(t, "hm_mixed_chain");
  require_unital(phi, "hm_mixed_chain");
  require_unital(psi, "hm_mixed_chain");
  require_compatible(phi, a, x, "hm_mixed_chain");
  require_compatible(psi, b, x, "hm_mixed_chain");
  PowerFamily fam_a(a);
  const double psi_b = quad_form(hermitize(psi.apply(b.raw())), x);
  const auto ka = [&](double p) {
    return p == 0.0 ? 1.0 : quad_form(hermitize(phi.apply(fam_a.power(p))), x);
  };
  const auto sb = [&](double q) { return std::pow(psi_b, q); };
  ScalarChain chain = finish_chain(two_sided_young(ka, sb, t), "hm_mixed", t, tol);
  chain.lower_report.dim = static_cast<int>(a.dim());
  chain.upper_report.dim = static_cast<int>(a.dim());
  return chain;
}

ScalarChain hm_self_reverse(const PositiveMap& phi, const HpdMatrix& a,
                            const UnitVector& x, double t, double tol) {
  require_interior_weight(t, "hm_self_reverse");
  require_unital(phi, "hm_self_reverse");
  require_compatible(phi, a, x, "hm_self_reverse");
  const WeightConstants w = weight_constants(t);
  PowerFamily fam(a);
  const auto q = [&](double p) {
    return quad_form(hermitize(phi.apply(fam.power(p))), x);
  };
  const double p_val = quad_form(hermitize(phi.apply(a.raw())), x);
  const double root_p = std::sqrt(p_val);
  const double pre = std::pow(p_val, t - 0.5);
  const double diff = root_p - q(0.5);
  const double bracket_s = q(0.5) + root_p - 2.0 * q(0.25) * std::pow(p_val, 0.25);
  const double bracket_k = q(0.5) + root_p - 2.0 * q(0.75) * std::pow(p_val, -0.25);
  WeightChainValues v;
  v.anchor = q(t);
  v.middle = std::pow(p_val, t) - v.anchor;
  if (t <= 0.5) {
    v.lower = pre * (2.0 * w.r * diff + w.r0 * bracket_s);
    v.upper = pre * (2.0 * w.R * diff - w.r0 * bracket_k);
  } else {
    v.lower = pre * (2.0 * w.r * diff + w.r0 * bracket_k);
    v.upper = pre * (2.0 * w.R * diff - w.r0 * bracket_s);
  }
  ScalarChain chain = finish_chain(v, "hm_self", t, tol);
  chain.lower_report.dim = static_cast<int>(a.dim());
  chain.upper_report.dim = static_cast<int>(a.dim());
  return chain;
}

SimpleReverse hm_reverse_simple(const HpdMatrix& t_op, const UnitVector& x, double t,
                                double tol) {
  if (!(t > 0.0 && t <= 0.5)) {
    throw DomainError("hm_reverse_simple: t must lie in (0, 1/2]");
  }
  if (t_op.dim() != x.dim()) {
    throw DimensionError("hm_reverse_simple: dimension mismatch");
  }
  const WeightConstants w = weight_constants(t);
  PowerFamily fam(t_op);
  const auto q = [&](double p) { return quad_form(fam.power(p), x); };
  const double p_val = quad_form(t_op.raw(), x);
  const double root_p = std::sqrt(p_val);
  const double bracket_k = q(0.5) + root_p - 2.0 * q(0.75) * std::pow(p_val, -0.25);
  const double core = 2.0 * w.R * (root_p - q(0.5)) - w.r0 * bracket_k;

  SimpleReverse out;
  const double anchor = q(t);
  out.middle = std::pow(p_val, t) - anchor;
  out.bound_tight = std::pow(p_val, t - 0.5) * core;
  out.bound_loose = core;
  out.loose_asserted = p_val >= 1.0;
  out.tight_report =
      scalar_geq(out.bound_tight + anchor, out.middle + anchor, tol);
  out.tight_report.inequality_id = "hm_simple";
  out.tight_report.lhs_id = "middle";
  out.tight_report.rhs_id = "weighted_bound";
  out.tight_report.t = t;
  out.tight_report.dim = static_cast<int>(t_op.dim());
  out.loose_report =
      scalar_geq(out.bound_loose + anchor, out.bound_tight + anchor, tol);
  out.loose_report.inequality_id = "hm_simple";
  out.loose_report.lhs_id = "weighted_bound";
  out.loose_report.rhs_id = "unweighted_bound";
  out.loose_report.t = t;
  out.loose_report.dim = static_cast<int>(t_op.dim());
  return out;
}

}  // namespace loewner
