#include "loewner/matrix.hpp"

#include <cmath>
#include <utility>

namespace loewner {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitize(h), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error("hermitian eigenvalue computation failed");
  }
  return solver.eigenvalues();
}

}  // namespace

Matrix hermitize(const Matrix& m) { return 0.5 * (m + m.adjoint()); }

double spectral_norm(const Matrix& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  return hermitian_eigenvalues(hermitian).cwiseAbs().maxCoeff();
}

double min_eigenvalue(const Matrix& hermitian) {
  if (hermitian.rows() == 0) return 0.0;
  return hermitian_eigenvalues(hermitian).minCoeff();
}

HpdMatrix HpdMatrix::from(Matrix m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("HpdMatrix: matrix must be square");
  }
  if (m.rows() < 1 || m.rows() > kMaxDim) {
    throw DimensionError("HpdMatrix: dimension must lie in [1, 64]");
  }
  const double magnitude = m.cwiseAbs().maxCoeff();
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > 1e-12 * std::max(magnitude, 1e-300)) {
    throw DomainError("HpdMatrix: matrix is not Hermitian");
  }
  Matrix h = hermitize(m);
  if (min_eigenvalue(h) <= 0.0) {
    throw DomainError("HpdMatrix: matrix is not positive definite");
  }
  return HpdMatrix(std::move(h));
}

HpdMatrix HpdMatrix::identity(Eigen::Index n) {
  return HpdMatrix::from(Matrix::Identity(n, n));
}

SlackReport loewner_geq(const Matrix& x, const Matrix& y, double tol) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows()) {
    throw DimensionError("loewner_geq: operands must be square and of equal dimension");
  }
  SlackReport rep;
  rep.dim = static_cast<int>(x.rows());
  rep.slack = min_eigenvalue(x - y);
  rep.scale = spectral_norm(x) + spectral_norm(y);
  rep.passed = rep.slack >= -tol * rep.scale;
  return rep;
}

SlackReport scalar_geq(double big, double small, double tol) {
  SlackReport rep;
  rep.dim = 1;
  rep.slack = big - small;
  rep.scale = std::abs(big) + std::abs(small);
  rep.passed = rep.slack >= -tol * rep.scale;
  return rep;
}

Matrix random_unitary(Eigen::Index n, Rng& rng, bool real_entries) {
  Matrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      g(i, j) = real_entries ? std::complex<double>(rng.normal(), 0.0)
                             : rng.complex_normal();
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  // fix the column phases so the factorization is unique
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

HpdMatrix random_hpd(Eigen::Index n, double cond_cap, Rng& rng, bool real_entries) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionError("random_hpd: dimension must lie in [1, 64]");
  }
  if (!(cond_cap >= 1.0)) {
    throw DomainError("random_hpd: cond_cap must be >= 1");
  }
  const double half_log = 0.5 * std::log(cond_cap);
  Eigen::VectorXd lam(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    lam[i] = std::exp(rng.uniform(-half_log, half_log));
  }
  const Matrix u = random_unitary(n, rng, real_entries);
  Matrix m = u * lam.cast<std::complex<double>>().asDiagonal() * u.adjoint();
  return HpdMatrix::from(hermitize(m));
}

HpdMatrix random_hpd(Eigen::Index n, double cond_cap, std::uint64_t seed,
                     bool real_entries) {
  Rng rng(seed);
  return random_hpd(n, cond_cap, rng, real_entries);
}

UnitVector UnitVector::from(Vector v) {
  if (v.size() < 1) throw DimensionError("UnitVector: empty vector");
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw DomainError("UnitVector: vector is not unit norm");
  }
  return UnitVector(std::move(v));
}

UnitVector UnitVector::normalized(Vector v) {
  const double norm = v.norm();
  if (!(norm > 0.0)) throw DomainError("UnitVector: cannot normalize the zero vector");
  return UnitVector(v / norm);
}

UnitVector random_unit_vector(Eigen::Index n, Rng& rng, bool real_entries) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = real_entries ? std::complex<double>(rng.normal(), 0.0) : rng.complex_normal();
  }
  return UnitVector::normalized(std::move(v));
}

double quad_form(const Matrix& m, const UnitVector& x) {
  if (m.rows() != x.dim()) {
    throw DimensionError("quad_form: dimension mismatch");
  }
  return (x.raw().adjoint() * m * x.raw())(0, 0).real();
}

}  // namespace loewner
