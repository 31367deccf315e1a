#include "loewner/positive_map.hpp"

#include <cmath>
#include <numeric>
#include <utility>

#include "loewner/scalar_young.hpp"

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
  if (n < 1 || n > 16) throw DomainError(std::string(who) + ": N must lie in [1, 16]");
}

// Image of a positive definite matrix under the map, rejected when the
// spectrum is too close to singular to run the functional calculus on it.
HpdMatrix image_as_hpd(const PositiveMap& phi, const HpdMatrix& m, const char* who) {
  const Matrix img = hermitize(phi.apply(m.raw()));
  Eigen::SelfAdjointEigenSolver<Matrix> solver(img, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigenvalue computation failed");
  const double lmax = solver.eigenvalues().maxCoeff();
  const double lmin = solver.eigenvalues().minCoeff();
  if (!(lmax > 0.0) || lmin <= kIllConditionedRatio * lmax) {
    throw IllConditionedError(std::string(who) + ": map image is numerically singular");
  }
  return HpdMatrix::from(img);
}

}  // namespace

void PositiveMap::finalize() {
  const Matrix image_of_identity = apply(Matrix::Identity(input_dim_, input_dim_));
  const Matrix defect =
      image_of_identity - Matrix::Identity(output_dim_, output_dim_);
  unital_ = defect.cwiseAbs().maxCoeff() <= 1e-12;
}

PositiveMap PositiveMap::identity(Eigen::Index n) {
  if (n < 1) throw DimensionError("PositiveMap::identity: dimension must be >= 1");
  PositiveMap map;
  map.kind_ = Kind::Identity;
  map.input_dim_ = n;
  map.output_dim_ = n;
  map.finalize();
  return map;
}

PositiveMap PositiveMap::congruence(Matrix x) {
  if (x.rows() != x.cols() || x.rows() < 1) {
    throw DimensionError("PositiveMap::congruence: X must be square");
  }
  Eigen::JacobiSVD<Matrix> svd(x);
  const double smax = svd.singularValues().maxCoeff();
  const double smin = svd.singularValues().minCoeff();
  if (!(smax > 0.0) || smin <= 1e-13 * smax) {
    throw DomainError("PositiveMap::congruence: X must be invertible");
  }
  PositiveMap map;
  map.kind_ = Kind::Congruence;
  map.input_dim_ = x.rows();
  map.output_dim_ = x.rows();
  map.payload_ = std::move(x);
  map.finalize();
  return map;
}

PositiveMap PositiveMap::pinching(std::vector<Eigen::Index> block_sizes) {
  if (block_sizes.empty()) {
    throw DimensionError("PositiveMap::pinching: partition must be nonempty");
  }
  Eigen::Index total = 0;
  for (const Eigen::Index s : block_sizes) {
    if (s < 1) throw DimensionError("PositiveMap::pinching: block sizes must be >= 1");
    total += s;
  }
  PositiveMap map;
  map.kind_ = Kind::Pinching;
  map.input_dim_ = total;
  map.output_dim_ = total;
  map.block_sizes_ = std::move(block_sizes);
  map.finalize();
  return map;
}

PositiveMap PositiveMap::block_diag_sum(Eigen::Index blocks, Eigen::Index block_dim) {
  if (blocks < 1 || block_dim < 1) {
    throw DimensionError("PositiveMap::block_diag_sum: blocks and block_dim must be >= 1");
  }
  PositiveMap map;
  map.kind_ = Kind::BlockDiagSum;
  map.input_dim_ = blocks * block_dim;
  map.output_dim_ = block_dim;
  map.blocks_ = blocks;
  map.block_dim_ = block_dim;
  map.finalize();
  return map;
}

PositiveMap PositiveMap::trace_functional(Matrix rho) {
  if (rho.rows() != rho.cols() || rho.rows() < 1) {
    throw DimensionError("PositiveMap::trace_functional: rho must be square");
  }
  const double magnitude = std::max(rho.cwiseAbs().maxCoeff(), 1e-300);
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * magnitude) {
    throw DomainError("PositiveMap::trace_functional: rho must be Hermitian");
  }
  if (min_eigenvalue(rho) < -1e-12 * magnitude) {
    throw DomainError("PositiveMap::trace_functional: rho must be positive semidefinite");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-12) {
    throw DomainError("PositiveMap::trace_functional: rho must have unit trace");
  }
  PositiveMap map;
  map.kind_ = Kind::TraceFunctional;
  map.input_dim_ = rho.rows();
  map.output_dim_ = 1;
  map.payload_ = std::move(rho);
  map.finalize();
  return map;
}

PositiveMap PositiveMap::convex_combination(std::vector<double> weights,
                                            std::vector<PositiveMap> maps) {
  if (maps.empty() || weights.size() != maps.size()) {
    throw DimensionError(
        "PositiveMap::convex_combination: need matching nonempty weights and maps");
  }
  double total = 0.0;
  for (const double w : weights) {
    if (!(w >= 0.0)) {
      throw DomainError("PositiveMap::convex_combination: weights must be nonnegative");
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("PositiveMap::convex_combination: weights must sum to 1");
  }
  for (const PositiveMap& m : maps) {
    if (m.input_dim() != maps.front().input_dim() ||
        m.output_dim() != maps.front().output_dim()) {
      throw DimensionError("PositiveMap::convex_combination: maps must share dimensions");
    }
  }
  PositiveMap map;
  map.kind_ = Kind::ConvexCombination;
  map.input_dim_ = maps.front().input_dim();
  map.output_dim_ = maps.front().output_dim();
  map.weights_ = std::move(weights);
  map.components_ = std::make_shared<const std::vector<PositiveMap>>(std::move(maps));
  map.finalize();
  return map;
}

Matrix PositiveMap::apply(const Matrix& m) const {
  if (m.rows() != input_dim_ || m.cols() != input_dim_) {
    throw DimensionError("PositiveMap::apply: dimension mismatch");
  }
  switch (kind_) {
    case Kind::Identity:
      return m;
    case Kind::Congruence:
      return payload_.adjoint() * m * payload_;
    case Kind::Pinching: {
      Matrix out = Matrix::Zero(input_dim_, input_dim_);
      Eigen::Index offset = 0;
      for (const Eigen::Index s : block_sizes_) {
        out.block(offset, offset, s, s) = m.block(offset, offset, s, s);
        offset += s;
      }
      return out;
    }
    case Kind::BlockDiagSum: {
      Matrix out = Matrix::Zero(block_dim_, block_dim_);
      for (Eigen::Index i = 0; i < blocks_; ++i) {
        out += m.block(i * block_dim_, i * block_dim_, block_dim_, block_dim_);
      }
      return out;
    }
    case Kind::TraceFunctional: {
      Matrix out(1, 1);
      out(0, 0) = (m * payload_).trace();
      return out;
    }
    case Kind::ConvexCombination: {
      Matrix out = Matrix::Zero(output_dim_, output_dim_);
      for (std::size_t i = 0; i < weights_.size(); ++i) {
        out += weights_[i] * (*components_)[i].apply(m);
      }
      return out;
    }
  }
  throw Error("PositiveMap::apply: unreachable");
}

std::string PositiveMap::kind_name() const {
  switch (kind_) {
    case Kind::Identity: return "identity";
    case Kind::Congruence: return "congruence";
    case Kind::Pinching: return "pinching";
    case Kind::BlockDiagSum: return "block_diag_sum";
    case Kind::TraceFunctional: return "trace_functional";
    case Kind::ConvexCombination: return "convex_combination";
  }
  return "unknown";
}

Matrix apply_map(const PositiveMap& phi, const Matrix& m) { return phi.apply(m); }

SlackReport ando_check(const PositiveMap& phi, const HpdMatrix& a, const HpdMatrix& b,
                       double t, double tol) {
  require_weight(t, "ando_check");
  const HpdMatrix pa = image_as_hpd(phi, a, "ando_check");
  const HpdMatrix pb = image_as_hpd(phi, b, "ando_check");
  WeightedGeometricFamily inner(a, b);
  WeightedGeometricFamily outer(pa, pb);
  SlackReport rep =
      loewner_geq(outer.sharp(t), hermitize(phi.apply(inner.sharp(t))), tol);
  rep.inequality_id = "ando";
  rep.lhs_id = "map_of_geometric_mean";
  rep.rhs_id = "geometric_mean_of_images";
  rep.t = t;
  return rep;
}

ReverseBound ando_reverse_bound(const PositiveMap& phi, const HpdMatrix& a,
                                const HpdMatrix& b, double t, int N, double tol) {
  require_weight(t, "ando_reverse_bound");
  require_terms(N, "ando_reverse_bound");
  const WeightConstants w = weight_constants(t);
  const HpdMatrix pa = image_as_hpd(phi, a, "ando_reverse_bound");
  const HpdMatrix pb = image_as_hpd(phi, b, "ando_reverse_bound");
  WeightedGeometricFamily inner(a, b);
  WeightedGeometricFamily outer(pa, pb);

  const Matrix outer_half = outer.sharp(0.5);
  const Matrix inner_half = hermitize(phi.apply(inner.sharp(0.5)));
  Matrix rhs = 2.0 * w.R *
               (outer_half - inner_half +
                0.5 * (pa.raw() + pb.raw() - 2.0 * outer_half));

  // correction in the mapped means, at half spacing
  if (t <= 0.5) {
    for (int j = 1; j <= N; ++j) {
      const double s = s_coefficient(2.0 * t, j);
      if (s == 0.0) continue;
      const double beta = std::ldexp(static_cast<double>(floor_pow2(2.0 * t, j - 1)), -j);
      const double step = std::ldexp(1.0, -j - 1);
      rhs -= s * hermitize(phi.apply(inner.sharp(1.0 - beta) +
                                     inner.sharp(1.0 - beta - 2.0 * step) -
                                     2.0 * inner.sharp(1.0 - beta - step)));
    }
  } else {
    for (int j = 1; j <= N; ++j) {
      const double s = s_coefficient(2.0 - 2.0 * t, j);
      if (s == 0.0) continue;
      const double delta =
          std::ldexp(static_cast<double>(floor_pow2(2.0 - 2.0 * t, j - 1)), -j);
      const double step = std::ldexp(1.0, -j - 1);
      rhs -= s * hermitize(phi.apply(inner.sharp(delta) +
                                     inner.sharp(delta + 2.0 * step) -
                                     2.0 * inner.sharp(delta + step)));
    }
  }

  // correction in the means of images, at full spacing
  for (int j = 1; j <= N; ++j) {
    const double s = s_coefficient(t, j);
    if (s == 0.0) continue;
    const double alpha = std::ldexp(static_cast<double>(floor_pow2(t, j - 1)), 1 - j);
    const double step = std::ldexp(1.0, -j);
    rhs -= s * (outer.sharp(alpha) + outer.sharp(alpha + 2.0 * step) -
                2.0 * outer.sharp(alpha + step));
  }

  ReverseBound out;
  out.rhs = hermitize(rhs);
  // certified in uncancelled form: at tight weights the gap and the bound
  // both vanish, which would starve a difference-based scale
  const Matrix inner_t = hermitize(phi.apply(inner.sharp(t)));
  out.report = loewner_geq(out.rhs + inner_t, outer.sharp(t), tol);
  out.report.inequality_id = "ando_rev";
  out.report.lhs_id = "ando_gap";
  out.report.rhs_id = "series_reverse_bound";
  out.report.t = t;
  return out;
}

TwoSidedReverseBound ando_reverse_bound_n2(const PositiveMap& phi, const HpdMatrix& a,
                                           const HpdMatrix& b, double t, double tol) {
  require_interior_weight(t, "ando_reverse_bound_n2");
  const WeightConstants w = weight_constants(t);
  const HpdMatrix pa = image_as_hpd(phi, a, "ando_reverse_bound_n2");
  const HpdMatrix pb = image_as_hpd(phi, b, "ando_reverse_bound_n2");
  WeightedGeometricFamily inner(a, b);
  WeightedGeometricFamily outer(pa, pb);

  const Matrix outer_half = outer.sharp(0.5);
  const Matrix inner_half = hermitize(phi.apply(inner.sharp(0.5)));
  const Matrix head = 2.0 * w.R *
                      (outer_half - inner_half +
                       0.5 * (pa.raw() + pb.raw() - 2.0 * outer_half));

  Matrix tight;
  if (t <= 0.5) {
    tight = head -
            w.r0 * (inner_half + pb.raw() -
                    2.0 * hermitize(phi.apply(inner.sharp(0.75)))) -
            w.r0 * (outer_half + pa.raw() - 2.0 * outer.sharp(0.25));
  } else {
    tight = head -
            w.r0 * (outer_half + pb.raw() - 2.0 * outer.sharp(0.75)) -
            w.r0 * (inner_half + pa.raw() -
                    2.0 * hermitize(phi.apply(inner.sharp(0.25))));
  }

  TwoSidedReverseBound out;
  out.rhs_tight = hermitize(tight);
  out.rhs_loose = hermitize(head);
  const Matrix inner_t = hermitize(phi.apply(inner.sharp(t)));
  out.tight_report = loewner_geq(out.rhs_tight + inner_t, outer.sharp(t), tol);
  out.tight_report.inequality_id = "ando_rev_n2";
  out.tight_report.lhs_id = "ando_gap";
  out.tight_report.rhs_id = "quarter_reverse_bound";
  out.tight_report.t = t;
  out.loose_report = loewner_geq(out.rhs_loose, out.rhs_tight, tol);
  out.loose_report.inequality_id = "ando_rev_n2";
  out.loose_report.lhs_id = "quarter_reverse_bound";
  out.loose_report.rhs_id = "head_reverse_bound";
  out.loose_report.t = t;
  return out;
}

}  // namespace loewner
