#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>

#include "loewner/errors.hpp"
#include "loewner/rng.hpp"

namespace loewner {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr Eigen::Index kMaxDim = 64;
inline constexpr double kDefaultTol = 1e-9;
// Relative eigenvalue floor below which functional calculus is refused.
inline constexpr double kIllConditionedRatio = 1e-13;

Matrix hermitize(const Matrix& m);
double spectral_norm(const Matrix& hermitian);
double min_eigenvalue(const Matrix& hermitian);

// Hermitian positive-definite matrix, the finite-dimensional stand-in for a
// positive invertible operator. Construction validates both properties.
class HpdMatrix {
 public:
  static HpdMatrix from(Matrix m);
  static HpdMatrix identity(Eigen::Index n);

  const Matrix& raw() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  explicit HpdMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

// Result of one Loewner-order certification.
struct SlackReport {
  std::string inequality_id;
  std::string lhs_id;
  std::string rhs_id;
  double slack = 0.0;  // lambda_min(RHS - LHS)
  double scale = 0.0;  // ||RHS|| + ||LHS||
  bool passed = false;
  std::uint64_t seed = 0;
  double t = 0.0;
  int dim = 0;
};

// Certifies x >= y in the Loewner order: slack = lambda_min(x - y),
// passed iff slack >= -tol * (||x|| + ||y||).
SlackReport loewner_geq(const Matrix& x, const Matrix& y, double tol = kDefaultTol);

// Scalar counterpart used by the inner-product chains.
SlackReport scalar_geq(double big, double small, double tol = kDefaultTol);

// Seeded positive-definite instance: eigenvalues log-uniform in
// [1/sqrt(cond_cap), sqrt(cond_cap)] conjugated by a random unitary.
HpdMatrix random_hpd(Eigen::Index n, double cond_cap, std::uint64_t seed,
                     bool real_entries = false);
HpdMatrix random_hpd(Eigen::Index n, double cond_cap, Rng& rng, bool real_entries = false);

Matrix random_unitary(Eigen::Index n, Rng& rng, bool real_entries = false);

class UnitVector {
 public:
  // Requires ||v|| = 1 within 1e-12.
  static UnitVector from(Vector v);
  // Scales a nonzero vector to unit norm.
  static UnitVector normalized(Vector v);

  const Vector& raw() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }

 private:
  explicit UnitVector(Vector v) : v_(std::move(v)) {}
  Vector v_;
};

UnitVector random_unit_vector(Eigen::Index n, Rng& rng, bool real_entries = false);

// Re <Mx, x>; exact for Hermitian M.
double quad_form(const Matrix& m, const UnitVector& x);

}  // namespace loewner
