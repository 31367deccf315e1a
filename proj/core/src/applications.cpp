#include "loewner/applications.hpp"

#include <cmath>
#include <optional>

#include "loewner/scalar_young.hpp"

namespace loewner {

namespace {

void require_interior_weight(double t, const char* who) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in (0, 1)");
  }
}

void require_pair_lists(std::span<const HpdMatrix> as, std::span<const HpdMatrix> bs,
                        const char* who) {
  if (as.empty() || as.size() != bs.size()) {
    throw DimensionError(std::string(who) + ": lists must be nonempty and equal length");
  }
  const Eigen::Index n = as.front().dim();
  for (const HpdMatrix& m : as) {
    if (m.dim() != n) throw DimensionError(std::string(who) + ": mixed dimensions");
  }
  for (const HpdMatrix& m : bs) {
    if (m.dim() != n) throw DimensionError(std::string(who) + ": mixed dimensions");
  }
}

struct SumTerms {
  HpdMatrix sum_a;
  HpdMatrix sum_b;
  Matrix sharp_half;     // sum_i A_i # B_i
  Matrix sharp_t;        // sum_i A_i #_t B_i
  Matrix sharp_quarter;  // sum_i A_i #_{1/4} B_i
  Matrix sharp_three_quarter;
};

SumTerms accumulate_sums(std::span<const HpdMatrix> as, std::span<const HpdMatrix> bs,
                         double t) {
  const Eigen::Index n = as.front().dim();
  Matrix sum_a = Matrix::Zero(n, n);
  Matrix sum_b = Matrix::Zero(n, n);
  Matrix half = Matrix::Zero(n, n);
  Matrix at_t = Matrix::Zero(n, n);
  Matrix quarter = Matrix::Zero(n, n);
  Matrix three_quarter = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < as.size(); ++i) {
    WeightedGeometricFamily fam(as[i], bs[i]);
    sum_a += as[i].raw();
    sum_b += bs[i].raw();
    half += fam.sharp(0.5);
    at_t += fam.sharp(t);
    quarter += fam.sharp(0.25);
    three_quarter += fam.sharp(0.75);
  }
  return {HpdMatrix::from(hermitize(sum_a)), HpdMatrix::from(hermitize(sum_b)),
          hermitize(half), hermitize(at_t), hermitize(quarter),
          hermitize(three_quarter)};
}

// The bracketed reverse bound shared by the sum-form reverses.
Matrix sum_reverse_bound(const SumTerms& s, const WeightedGeometricFamily& aggregate,
                         double t) {
  const WeightConstants w = weight_constants(t);
  const Matrix head =
      w.R * (s.sum_a.raw() + s.sum_b.raw() - 2.0 * s.sharp_half);
  if (t <= 0.5) {
    return hermitize(head -
                     w.r0 * (s.sharp_half + s.sum_b.raw() - 2.0 * s.sharp_three_quarter) -
                     w.r0 * (aggregate.sharp(0.5) + s.sum_a.raw() -
                             2.0 * aggregate.sharp(0.25)));
  }
  return hermitize(head -
                   w.r0 * (aggregate.sharp(0.5) + s.sum_b.raw() -
                           2.0 * aggregate.sharp(0.75)) -
                   w.r0 * (s.sharp_half + s.sum_a.raw() - 2.0 * s.sharp_quarter));
}

}  // namespace

OperatorReverse holder_reverse(std::span<const HpdMatrix> as,
                               std::span<const HpdMatrix> bs, double t, double tol) {
  require_interior_weight(t, "holder_reverse");
  require_pair_lists(as, bs, "holder_reverse");
  const SumTerms sums = accumulate_sums(as, bs, t);
  WeightedGeometricFamily aggregate(sums.sum_a, sums.sum_b);
  OperatorReverse out;
  out.lhs = hermitize(aggregate.sharp(t) - sums.sharp_t);
  out.rhs = sum_reverse_bound(sums, aggregate, t);
  out.report = loewner_geq(out.rhs, out.lhs, tol);
  out.report.inequality_id = "holder_rev";
  out.report.lhs_id = "holder_gap";
  out.report.rhs_id = "quarter_reverse_bound";
  out.report.t = t;
  out.base_report = loewner_geq(out.lhs, Matrix::Zero(out.lhs.rows(), out.lhs.cols()), tol);
  out.base_report.inequality_id = "holder_rev";
  out.base_report.lhs_id = "zero";
  out.base_report.rhs_id = "holder_gap";
  out.base_report.t = t;
  return out;
}

OperatorReverse concavity_reverse(std::span<const double> weights,
                                  std::span<const HpdMatrix> ts, double t, double tol) {
  require_interior_weight(t, "concavity_reverse");
  if (ts.empty() || weights.size() != ts.size()) {
    throw DimensionError("concavity_reverse: need matching nonempty weights and matrices");
  }
  double total = 0.0;
  for (const double w : weights) {
    if (!(w > 0.0)) throw DomainError("concavity_reverse: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("concavity_reverse: weights must sum to 1");
  }
  const Eigen::Index n = ts.front().dim();
  for (const HpdMatrix& m : ts) {
    if (m.dim() != n) throw DimensionError("concavity_reverse: mixed dimensions");
  }

  const WeightConstants w = weight_constants(t);
  const Matrix eye = Matrix::Identity(n, n);
  Matrix mix = Matrix::Zero(n, n);
  Matrix pow_t = Matrix::Zero(n, n);
  Matrix pow_half = Matrix::Zero(n, n);
  Matrix pow_quarter = Matrix::Zero(n, n);
  Matrix pow_three_quarter = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    PowerFamily fam(ts[i]);
    mix += weights[i] * ts[i].raw();
    pow_t += weights[i] * fam.power(t);
    pow_half += weights[i] * fam.power(0.5);
    pow_quarter += weights[i] * fam.power(0.25);
    pow_three_quarter += weights[i] * fam.power(0.75);
  }
  PowerFamily mix_fam(HpdMatrix::from(hermitize(mix)));

  OperatorReverse out;
  out.lhs = hermitize(mix_fam.power(t) - pow_t);
  const Matrix head = w.R * (eye + mix - 2.0 * pow_half);
  if (t <= 0.5) {
    out.rhs = hermitize(head - w.r0 * (pow_half + mix - 2.0 * pow_three_quarter) -
                        w.r0 * (mix_fam.power(0.5) + eye - 2.0 * mix_fam.power(0.25)));
  } else {
    out.rhs = hermitize(head -
                        w.r0 * (mix_fam.power(0.5) + mix - 2.0 * mix_fam.power(0.75)) -
                        w.r0 * (pow_half + eye - 2.0 * pow_quarter));
  }
  out.report = loewner_geq(out.rhs, out.lhs, tol);
  out.report.inequality_id = "concavity_rev";
  out.report.lhs_id = "concavity_gap";
  out.report.rhs_id = "quarter_reverse_bound";
  out.report.t = t;
  out.base_report = loewner_geq(out.lhs, Matrix::Zero(n, n), tol);
  out.base_report.inequality_id = "concavity_rev";
  out.base_report.lhs_id = "zero";
  out.base_report.rhs_id = "concavity_gap";
  out.base_report.t = t;
  return out;
}

Matrix tsallis_entropy(const HpdMatrix& a, const HpdMatrix& b, double t) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("tsallis_entropy: t must lie in (0, 1]");
  }
  WeightedGeometricFamily fam(a, b);
  return hermitize((fam.sharp(t) - a.raw()) / t);
}

SlackReport tsallis_superadditivity(std::span<const HpdMatrix> as,
                                    std::span<const HpdMatrix> bs, double t,
                                    double tol) {
  if (!(t > 0.0 && t <= 1.0)) {
    throw DomainError("tsallis_superadditivity: t must lie in (0, 1]");
  }
  require_pair_lists(as, bs, "tsallis_superadditivity");
  const Eigen::Index n = as.front().dim();
  Matrix sum_entropy = Matrix::Zero(n, n);
  Matrix sum_a = Matrix::Zero(n, n);
  Matrix sum_b = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < as.size(); ++i) {
    sum_entropy += tsallis_entropy(as[i], bs[i], t);
    sum_a += as[i].raw();
    sum_b += bs[i].raw();
  }
  const Matrix aggregate = tsallis_entropy(HpdMatrix::from(hermitize(sum_a)),
                                           HpdMatrix::from(hermitize(sum_b)), t);
  SlackReport rep = loewner_geq(aggregate, hermitize(sum_entropy), tol);
  rep.inequality_id = "tsallis_super";
  rep.lhs_id = "sum_of_entropies";
  rep.rhs_id = "entropy_of_sums";
  rep.t = t;
  return rep;
}

TsallisReverse tsallis_reverse(std::span<const HpdMatrix> as,
                               std::span<const HpdMatrix> bs, double t, double tol) {
  require_interior_weight(t, "tsallis_reverse");
  require_pair_lists(as, bs, "tsallis_reverse");
  const Eigen::Index n = as.front().dim();
  Matrix sum_entropy = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < as.size(); ++i) {
    sum_entropy += tsallis_entropy(as[i], bs[i], t);
  }
  const SumTerms sums = accumulate_sums(as, bs, t);
  WeightedGeometricFamily aggregate(sums.sum_a, sums.sum_b);
  TsallisReverse out;
  out.gap = hermitize((aggregate.sharp(t) - sums.sum_a.raw()) / t - sum_entropy);
  out.rhs = hermitize(sum_reverse_bound(sums, aggregate, t) / t);
  out.report = loewner_geq(out.rhs, out.gap, tol);
  out.report.inequality_id = "tsallis_rev";
  out.report.lhs_id = "entropy_gap";
  out.report.rhs_id = "scaled_reverse_bound";
  out.report.t = t;
  return out;
}

std::vector<double> default_epsilon_schedule(const Matrix& b_psd) {
  const double norm = spectral_norm(b_psd);
  const double scale = norm > 0.0 ? norm : 1.0;
  std::vector<double> eps;
  eps.reserve(10);
  for (int k = 1; k <= 10; ++k) {
    eps.push_back(scale * std::pow(10.0, -k));
  }
  return eps;
}

RegularizedMean epsilon_regularized_mean(const HpdMatrix& a, const Matrix& b_psd,
                                         double t, std::vector<double> eps_schedule,
                                         double tol) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("epsilon_regularized_mean: t must lie in [0, 1]");
  }
  if (b_psd.rows() != b_psd.cols() || b_psd.rows() != a.dim()) {
    throw DimensionError("epsilon_regularized_mean: dimension mismatch");
  }
  const double magnitude = std::max(b_psd.cwiseAbs().maxCoeff(), 1e-300);
  if ((b_psd - b_psd.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * magnitude) {
    throw DomainError("epsilon_regularized_mean: B must be Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(b_psd));
  if (solver.info() != Eigen::Success) throw Error("eigendecomposition failed");
  if (solver.eigenvalues().minCoeff() < -1e-10 * std::max(magnitude, 1.0)) {
    throw DomainError("epsilon_regularized_mean: B must be positive semidefinite");
  }
  // clamp roundoff-negative eigenvalues so B + eps I stays definite
  Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
  const Matrix b_clean =
      hermitize(solver.eigenvectors() *
                clipped.cast<std::complex<double>>().asDiagonal() *
                solver.eigenvectors().adjoint());

  if (eps_schedule.empty()) eps_schedule = default_epsilon_schedule(b_clean);
  for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
    if (!(eps_schedule[i] > 0.0)) {
      throw DomainError("epsilon_regularized_mean: schedule must be positive");
    }
    if (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1])) {
      throw DomainError("epsilon_regularized_mean: schedule must decrease");
    }
  }

  const Eigen::Index n = a.dim();
  RegularizedMean out;
  out.epsilons = eps_schedule;
  out.monotone = true;
  out.converged = true;
  std::optional<Matrix> previous;
  double norm_scale = 0.0;
  for (const double eps : eps_schedule) {
    const HpdMatrix shifted =
        HpdMatrix::from(b_clean + eps * Matrix::Identity(n, n));
    Matrix current = geometric_mean(a, shifted, t).raw();
    if (previous) {
      const SlackReport step = loewner_geq(*previous, current, tol);
      out.monotonicity_slacks.push_back(step.slack);
      out.monotone = out.monotone && step.passed;
      out.step_norms.push_back(spectral_norm(*previous - current));
      norm_scale = std::max(norm_scale, spectral_norm(*previous));
    }
    previous = std::move(current);
  }
  // Crossover between the eps-linear and eps^t decay regimes can make the
  // step norms wiggle while eps straddles eigenvalues of B; the clean decay
  // sets in once eps is below the smallest positive eigenvalue. Convergence
  // is certified on the tail: the final steps must be non-increasing and the
  // sequence must not end on its peak. (The iterates themselves are monotone
  // and bounded, which is what forces the limit to exist.)
  const double slop = 1e-12 * std::max(norm_scale, 1.0);
  const std::size_t count = out.step_norms.size();
  double peak = 0.0;
  for (const double d : out.step_norms) peak = std::max(peak, d);
  const std::size_t tail = std::min<std::size_t>(3, count);
  for (std::size_t i = count - tail + 1; i < count; ++i) {
    if (out.step_norms[i] > out.step_norms[i - 1] + slop) out.converged = false;
  }
  if (count >= 2 && out.step_norms.back() > peak - slop &&
      out.step_norms.back() > out.step_norms.front()) {
    out.converged = false;
  }
  out.limit_estimate = *previous;
  return out;
}

}  // namespace loewner
