#pragma once

#include "loewner/matrix.hpp"

namespace loewner {

// f(A) for power functions via one Hermitian eigendecomposition.
class PowerFamily {
 public:
  explicit PowerFamily(const HpdMatrix& a);
  Matrix power(double s) const;
  Eigen::Index dim() const { return vectors_.rows(); }

 private:
  Eigen::VectorXd values_;
  Matrix vectors_;
};

HpdMatrix frac_power(const HpdMatrix& a, double s);

// (1-t) A + t B, t in [0,1]
HpdMatrix arithmetic_mean(const HpdMatrix& a, const HpdMatrix& b, double t);
// ((1-t) A^{-1} + t B^{-1})^{-1}, t in [0,1]
HpdMatrix harmonic_mean(const HpdMatrix& a, const HpdMatrix& b, double t);
// A^{1/2} (A^{-1/2} B A^{-1/2})^s A^{1/2}; s may lie outside [0,1]
HpdMatrix geometric_mean(const HpdMatrix& a, const HpdMatrix& b, double s);

// Precomputed factorization of a pair (A, B) for evaluating A #_s B at many
// weights s; the refinement series need a dozen weights per pair.
class WeightedGeometricFamily {
 public:
  WeightedGeometricFamily(const HpdMatrix& a, const HpdMatrix& b);
  Matrix sharp(double s) const;
  Eigen::Index dim() const { return a_half_.rows(); }

 private:
  Matrix a_half_;
  Eigen::VectorXd w_values_;
  Matrix w_vectors_;
};

}  // namespace loewner
