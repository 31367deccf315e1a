#include "loewner/means.hpp"

#include <cmath>

namespace loewner {

namespace {

struct EigenSystem {
  Eigen::VectorXd values;
  Matrix vectors;
};

EigenSystem decompose(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h));
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian eigendecomposition failed");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

void require_well_conditioned(const Eigen::VectorXd& values, const char* who) {
  const double lmax = values.maxCoeff();
  const double lmin = values.minCoeff();
  if (!(lmax > 0.0) || lmin <= kIllConditionedRatio * lmax) {
    throw IllConditionedError(std::string(who) +
                              ": spectrum too close to singular for functional calculus");
  }
}

Matrix recompose(const EigenSystem& sys, const Eigen::VectorXd& values) {
  return hermitize(sys.vectors * values.cast<std::complex<double>>().asDiagonal() *
                   sys.vectors.adjoint());
}

void require_weight(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in [0, 1]");
  }
}

}  // namespace

PowerFamily::PowerFamily(const HpdMatrix& a) {
  EigenSystem sys = decompose(a.raw());
  require_well_conditioned(sys.values, "frac_power");
  values_ = std::move(sys.values);
  vectors_ = std::move(sys.vectors);
}

Matrix PowerFamily::power(double s) const {
  Eigen::VectorXd powered(values_.size());
  for (Eigen::Index i = 0; i < values_.size(); ++i) {
    powered[i] = std::pow(values_[i], s);
  }
  return hermitize(vectors_ * powered.cast<std::complex<double>>().asDiagonal() *
                   vectors_.adjoint());
}

HpdMatrix frac_power(const HpdMatrix& a, double s) {
  return HpdMatrix::from(PowerFamily(a).power(s));
}

HpdMatrix arithmetic_mean(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_weight(t, "arithmetic_mean");
  return HpdMatrix::from((1.0 - t) * a.raw() + t * b.raw());
}

HpdMatrix harmonic_mean(const HpdMatrix& a, const HpdMatrix& b, double t) {
  require_weight(t, "harmonic_mean");
  const Matrix inv_mix =
      (1.0 - t) * frac_power(a, -1.0).raw() + t * frac_power(b, -1.0).raw();
  return frac_power(HpdMatrix::from(inv_mix), -1.0);
}

WeightedGeometricFamily::WeightedGeometricFamily(const HpdMatrix& a, const HpdMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("geometric_mean: operands must have equal dimension");
  }
  EigenSystem sys_a = decompose(a.raw());
  require_well_conditioned(sys_a.values, "geometric_mean");
  Eigen::VectorXd root(sys_a.values.size());
  Eigen::VectorXd inv_root(sys_a.values.size());
  for (Eigen::Index i = 0; i < sys_a.values.size(); ++i) {
    root[i] = std::sqrt(sys_a.values[i]);
    inv_root[i] = 1.0 / root[i];
  }
  a_half_ = recompose(sys_a, root);
  const Matrix a_minus_half = recompose(sys_a, inv_root);
  EigenSystem sys_w = decompose(a_minus_half * b.raw() * a_minus_half);
  require_well_conditioned(sys_w.values, "geometric_mean");
  w_values_ = std::move(sys_w.values);
  w_vectors_ = std::move(sys_w.vectors);
}

Matrix WeightedGeometricFamily::sharp(double s) const {
  Eigen::VectorXd powered(w_values_.size());
  for (Eigen::Index i = 0; i < w_values_.size(); ++i) {
    powered[i] = std::pow(w_values_[i], s);
  }
  const Matrix mid = w_vectors_ * powered.cast<std::complex<double>>().asDiagonal() *
                     w_vectors_.adjoint();
  return hermitize(a_half_ * mid * a_half_);
}

HpdMatrix geometric_mean(const HpdMatrix& a, const HpdMatrix& b, double s) {
  return HpdMatrix::from(WeightedGeometricFamily(a, b).sharp(s));
}

}  // namespace loewner
