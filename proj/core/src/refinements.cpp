#include "loewner/refinements.hpp"

#include <cmath>

namespace loewner {

namespace {

void require_weight(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in [0, 1]");
  }
}

void require_interior_weight(double t, const char* who) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in (0, 1)");
  }
}

void require_terms(int n, const char* who) {
  if (n < 1 || n > kMaxSeriesTerms) {
    throw DomainError(std::string(who) + ": N must lie in [1, 16]");
  }
}

Matrix nabla(const HpdMatrix& a, const HpdMatrix& b, double t) {
  return (1.0 - t) * a.raw() + t * b.raw();
}

// sum_j s_j(t) (A#_{a_j}B + A#_{a_j+2^{1-j}}B - 2 A#_{a_j+2^{-j}}B),
// the dyadic second-difference series of the lower refinement.
Matrix series_lower_term(const WeightedGeometricFamily& fam, double t, int N) {
  Matrix term = Matrix::Zero(fam.dim(), fam.dim());
  for (int j = 1; j <= N; ++j) {
    const double s = s_coefficient(t, j);
    if (s == 0.0) continue;
    const double alpha = std::ldexp(static_cast<double>(floor_pow2(t, j - 1)), 1 - j);
    const double step = std::ldexp(1.0, -j);
    term += s * (fam.sharp(alpha) + fam.sharp(alpha + 2.0 * step) -
                 2.0 * fam.sharp(alpha + step));
  }
  return hermitize(term);
}

// The correction series subtracted from the upper bound; the weights sit at
// half the lower series' spacing because the underlying square roots pass
// through sqrt(ab).
Matrix series_upper_correction(const WeightedGeometricFamily& fam, double t, int N) {
  Matrix corr = Matrix::Zero(fam.dim(), fam.dim());
  if (t <= 0.5) {
    for (int j = 1; j <= N; ++j) {
      const double s = s_coefficient(2.0 * t, j);
      if (s == 0.0) continue;
      const double beta = std::ldexp(static_cast<double>(floor_pow2(2.0 * t, j - 1)), -j);
      const double step = std::ldexp(1.0, -j - 1);
      corr += s * (fam.sharp(1.0 - beta) + fam.sharp(1.0 - beta - 2.0 * step) -
                   2.0 * fam.sharp(1.0 - beta - step));
    }
  } else {
    for (int j = 1; j <= N; ++j) {
      const double s = s_coefficient(2.0 - 2.0 * t, j);
      if (s == 0.0) continue;
      const double delta =
          std::ldexp(static_cast<double>(floor_pow2(2.0 - 2.0 * t, j - 1)), -j);
      const double step = std::ldexp(1.0, -j - 1);
      corr += s * (fam.sharp(delta) + fam.sharp(delta + 2.0 * step) -
                   2.0 * fam.sharp(delta + step));
    }
  }
  return hermitize(corr);
}

}  // namespace

MeanChain kittaneh_chain(const HpdMatrix& a, const HpdMatrix& b, double t, double tol) {
  require_weight(t, "kittaneh_chain");
  const WeightConstants w = weight_constants(t);
  WeightedGeometricFamily fam(a, b);
  const Matrix base = fam.sharp(t);
  const Matrix spread = a.raw() + b.raw() - 2.0 * fam.sharp(0.5);
  MeanChain chain;
  chain.lower = hermitize(base + w.r * spread);
  chain.middle = nabla(a, b, t);
  chain.upper = hermitize(base + w.R * spread);
  chain.lower_report = loewner_geq(chain.middle, chain.lower, tol);
  chain.lower_report.inequality_id = "kitt";
  chain.lower_report.lhs_id = "geometric_mean+r_spread";
  chain.lower_report.rhs_id = "arithmetic_mean";
  chain.lower_report.t = t;
  chain.upper_report = loewner_geq(chain.upper, chain.middle, tol);
  chain.upper_report.inequality_id = "kitt";
  chain.upper_report.lhs_id = "arithmetic_mean";
  chain.upper_report.rhs_id = "geometric_mean+R_spread";
  chain.upper_report.t = t;
  return chain;
}

double raw_product_hermiticity_defect(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_weight(t, "raw_product_hermiticity_defect");
  const Matrix m = frac_power(a, 1.0 - t).raw() * frac_power(b, t).raw();
  const double norm = m.norm();
  if (!(norm > 0.0)) return 0.0;
  return (m - m.adjoint()).norm() / norm;
}

RefinementBound sababheh_lower(const HpdMatrix& a, const HpdMatrix& b, double t, int N,
                               double tol) {
  require_weight(t, "sababheh_lower");
  require_terms(N, "sababheh_lower");
  WeightedGeometricFamily fam(a, b);
  RefinementBound out;
  out.term = series_lower_term(fam, t, N);
  out.report = loewner_geq(nabla(a, b, t), out.term + fam.sharp(t), tol);
  out.report.inequality_id = "sab_lower";
  out.report.lhs_id = "series_refinement+geometric_mean";
  out.report.rhs_id = "arithmetic_mean";
  out.report.t = t;
  return out;
}

RefinementBound zhao_lower_n2(const HpdMatrix& a, const HpdMatrix& b, double t,
                              double tol) {
  require_interior_weight(t, "zhao_lower_n2");
  const WeightConstants w = weight_constants(t);
  WeightedGeometricFamily fam(a, b);
  const Matrix sharp_half = fam.sharp(0.5);
  const Matrix am_gm = 0.5 * (a.raw() + b.raw()) - sharp_half;
  Matrix term;
  if (t <= 0.5) {
    term = w.r0 * (sharp_half - 2.0 * fam.sharp(0.25) + a.raw()) + 2.0 * t * am_gm;
  } else {
    term = w.r0 * (sharp_half - 2.0 * fam.sharp(0.75) + b.raw()) + 2.0 * (1.0 - t) * am_gm;
  }
  RefinementBound out;
  out.term = hermitize(term);
  out.report = loewner_geq(nabla(a, b, t), out.term + fam.sharp(t), tol);
  out.report.inequality_id = "zhao_lower";
  out.report.lhs_id = "quarter_refinement+geometric_mean";
  out.report.rhs_id = "arithmetic_mean";
  out.report.t = t;
  return out;
}

RefinementBound sababheh_upper(const HpdMatrix& a, const HpdMatrix& b, double t, int N,
                               double tol) {
  require_weight(t, "sababheh_upper");
  require_terms(N, "sababheh_upper");
  WeightedGeometricFamily fam(a, b);
  const double head_coeff = (t <= 0.5) ? 2.0 * (1.0 - t) : 2.0 * t;
  const Matrix head = fam.sharp(t) +
                      head_coeff * (0.5 * (a.raw() + b.raw()) - fam.sharp(0.5));
  RefinementBound out;
  out.term = hermitize(head - series_upper_correction(fam, t, N));
  out.report = loewner_geq(out.term, nabla(a, b, t), tol);
  out.report.inequality_id = "sab_upper";
  out.report.lhs_id = "arithmetic_mean";
  out.report.rhs_id = "series_upper_bound";
  out.report.t = t;
  return out;
}

RefinementBound zhao_upper_n2(const HpdMatrix& a, const HpdMatrix& b, double t,
                              double tol) {
  require_interior_weight(t, "zhao_upper_n2");
  const WeightConstants w = weight_constants(t);
  WeightedGeometricFamily fam(a, b);
  const Matrix sharp_half = fam.sharp(0.5);
  const Matrix am_gm = 0.5 * (a.raw() + b.raw()) - sharp_half;
  Matrix bound;
  if (t <= 0.5) {
    bound = fam.sharp(t) + 2.0 * (1.0 - t) * am_gm -
            w.r0 * (sharp_half - 2.0 * fam.sharp(0.75) + b.raw());
  } else {
    bound = fam.sharp(t) + 2.0 * t * am_gm -
            w.r0 * (sharp_half - 2.0 * fam.sharp(0.25) + a.raw());
  }
  RefinementBound out;
  out.term = hermitize(bound);
  out.report = loewner_geq(out.term, nabla(a, b, t), tol);
  out.report.inequality_id = "zhao_upper";
  out.report.lhs_id = "arithmetic_mean";
  out.report.rhs_id = "quarter_upper_bound";
  out.report.t = t;
  return out;
}

}  // namespace loewner
