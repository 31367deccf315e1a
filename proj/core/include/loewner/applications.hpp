#pragma once

#include <span>
#include <vector>

#include "loewner/matrix.hpp"
#include "loewner/means.hpp"

namespace loewner {

struct OperatorReverse {
  Matrix lhs;
  Matrix rhs;
  SlackReport report;       // rhs >= lhs
  SlackReport base_report;  // lhs >= 0, the inequality being reversed
};

// Difference reverse of the sum-form Hoelder inequality:
//   (sum A_i) #_t (sum B_i) - sum (A_i #_t B_i) <= rhs,  0 < t < 1.
OperatorReverse holder_reverse(std::span<const HpdMatrix> as,
                               std::span<const HpdMatrix> bs, double t,
                               double tol = kDefaultTol);

// Reverse of operator concavity of x^t:
//   0 <= (sum w_i T_i)^t - sum w_i T_i^t <= rhs,  weights positive, sum 1.
OperatorReverse concavity_reverse(std::span<const double> weights,
                                  std::span<const HpdMatrix> ts, double t,
                                  double tol = kDefaultTol);

// T_t(A|B) = (A #_t B - A) / t, 0 < t <= 1.
Matrix tsallis_entropy(const HpdMatrix& a, const HpdMatrix& b, double t);

// Certifies sum_i T_t(A_i|B_i) <= T_t(sum A_i | sum B_i).
SlackReport tsallis_superadditivity(std::span<const HpdMatrix> as,
                                    std::span<const HpdMatrix> bs, double t,
                                    double tol = kDefaultTol);

struct TsallisReverse {
  Matrix gap;  // T_t(sum|sum) - sum T_t
  Matrix rhs;
  SlackReport report;  // rhs >= gap
};

TsallisReverse tsallis_reverse(std::span<const HpdMatrix> as,
                               std::span<const HpdMatrix> bs, double t,
                               double tol = kDefaultTol);

struct RegularizedMean {
  Matrix limit_estimate;
  std::vector<double> epsilons;
  std::vector<double> monotonicity_slacks;  // lambda_min(M(eps_k) - M(eps_{k+1}))
  std::vector<double> step_norms;           // ||M(eps_k) - M(eps_{k+1})||
  bool monotone = false;
  bool converged = false;
};

// A #_t B for positive semidefinite (possibly singular) B as the limit of
// A #_t (B + eps I) along a decreasing eps schedule. The iterates are
// non-increasing in the Loewner order as eps decreases.
RegularizedMean epsilon_regularized_mean(const HpdMatrix& a, const Matrix& b_psd,
                                         double t, std::vector<double> eps_schedule = {},
                                         double tol = kDefaultTol);

// 10^{-k} ||B||, k = 1..10 (scale falls back to 1 when ||B|| = 0).
std::vector<double> default_epsilon_schedule(const Matrix& b_psd);

}  // namespace loewner
