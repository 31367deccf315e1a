#include <doctest.h>

#include <cmath>
#include <vector>

#include "loewner/applications.hpp"
#include "loewner/positive_map.hpp"

using namespace loewner;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::vector<HpdMatrix> random_list(Eigen::Index dim, int n, Rng& rng,
                                   double cond = 100.0) {
  std::vector<HpdMatrix> out;
  for (int i = 0; i < n; ++i) out.push_back(random_hpd(dim, cond, rng));
  return out;
}

HpdMatrix diag(std::initializer_list<double> entries) {
  const Eigen::Index n = static_cast<Eigen::Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (const double e : entries) m(i, i) = e, ++i;
  return HpdMatrix::from(m);
}

}  // namespace

TEST_CASE("holder reverse trivial cases") {
  Rng rng(80);
  const std::vector<HpdMatrix> one_a = random_list(3, 1, rng);
  const std::vector<HpdMatrix> one_b = random_list(3, 1, rng);
  const OperatorReverse single = holder_reverse(one_a, one_b, 0.4);
  CHECK(max_abs(single.lhs) <= 1e-10 * max_abs(single.rhs));
  CHECK(single.report.passed);
  CHECK(single.base_report.passed);

  const std::vector<HpdMatrix> as = random_list(3, 3, rng);
  const OperatorReverse equal = holder_reverse(as, as, 0.4);
  double input_scale = 0.0;
  for (const HpdMatrix& m : as) input_scale += spectral_norm(m.raw());
  CHECK(max_abs(equal.lhs) <= 1e-10 * input_scale);

  CHECK_THROWS_AS(holder_reverse(one_a, as, 0.4), DimensionError);
  CHECK_THROWS_AS(holder_reverse(std::vector<HpdMatrix>{}, {}, 0.4), DimensionError);
  CHECK_THROWS_AS(holder_reverse(one_a, one_b, 0.0), DomainError);
}

TEST_CASE("holder reverse certifies and matches the block-map assembly") {
  Rng rng(81);
  for (int i = 0; i < 300; ++i) {
    const int terms = 1 + static_cast<int>(rng.uniform_int(4));
    const Eigen::Index dim = 2 + rng.uniform_int(2);
    const std::vector<HpdMatrix> as = random_list(dim, terms, rng);
    const std::vector<HpdMatrix> bs = random_list(dim, terms, rng);
    const double t = rng.uniform(1e-3, 1.0 - 1e-3);

    const OperatorReverse rev = holder_reverse(as, bs, t);
    CHECK(rev.report.passed);
    CHECK(rev.base_report.passed);

    // independent assembly path: the trace-out map on stacked blocks
    Matrix block_a = Matrix::Zero(terms * dim, terms * dim);
    Matrix block_b = Matrix::Zero(terms * dim, terms * dim);
    for (int k = 0; k < terms; ++k) {
      block_a.block(k * dim, k * dim, dim, dim) = as[k].raw();
      block_b.block(k * dim, k * dim, dim, dim) = bs[k].raw();
    }
    const PositiveMap trace_out = PositiveMap::block_diag_sum(terms, dim);
    const TwoSidedReverseBound mapped =
        ando_reverse_bound_n2(trace_out, HpdMatrix::from(block_a),
                              HpdMatrix::from(block_b), t);
    const double scale = spectral_norm(rev.rhs) + spectral_norm(mapped.rhs_tight);
    CHECK(max_abs(rev.rhs - mapped.rhs_tight) <= 1e-10 * std::max(1.0, scale));
  }
}

TEST_CASE("concavity reverse stated examples") {
  const std::vector<HpdMatrix> ts = {diag({1.0, 4.0}), diag({4.0, 1.0})};
  const std::vector<double> w = {0.5, 0.5};
  const OperatorReverse rev = concavity_reverse(w, ts, 1.0 / 3.0);
  const double want = std::pow(2.5, 1.0 / 3.0) - 0.5 * (1.0 + std::pow(4.0, 1.0 / 3.0));
  CHECK(rev.lhs(0, 0).real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(rev.lhs(1, 1).real() == doctest::Approx(want).epsilon(1e-12));
  CHECK(rev.report.passed);
  CHECK(rev.base_report.passed);

  Rng rng(82);
  const std::vector<HpdMatrix> single = random_list(3, 1, rng);
  const OperatorReverse one = concavity_reverse(std::vector<double>{1.0}, single, 0.4);
  CHECK(max_abs(one.lhs) <= 1e-10 * std::max(1.0, max_abs(single[0].raw())));

  const std::vector<HpdMatrix> same = {single[0], single[0], single[0]};
  const OperatorReverse all_equal =
      concavity_reverse(std::vector<double>{0.2, 0.3, 0.5}, same, 0.4);
  CHECK(max_abs(all_equal.lhs) <= 1e-9 * max_abs(single[0].raw()));

  CHECK_THROWS_AS(concavity_reverse(std::vector<double>{0.5, 0.6}, ts, 0.4), DomainError);
  CHECK_THROWS_AS(concavity_reverse(std::vector<double>{-0.5, 1.5}, ts, 0.4), DomainError);
  CHECK_THROWS_AS(concavity_reverse(std::vector<double>{1.0}, ts, 0.4), DimensionError);
}

TEST_CASE("concavity reverse equals the sum-form reverse on its instance") {
  // the weighted instance A_i = w_i I, B_i = w_i T_i of the sum-form reverse
  Rng rng(83);
  for (int i = 0; i < 200; ++i) {
    const int terms = 1 + static_cast<int>(rng.uniform_int(3));
    const Eigen::Index dim = 2 + rng.uniform_int(2);
    const std::vector<HpdMatrix> ts = random_list(dim, terms, rng);
    std::vector<double> w(terms);
    double acc = 0.0;
    for (int k = 0; k + 1 < terms; ++k) {
      w[k] = rng.uniform(0.1, 0.9) / terms;
      acc += w[k];
    }
    w[terms - 1] = 1.0 - acc;
    const double t = rng.uniform(1e-3, 1.0 - 1e-3);

    std::vector<HpdMatrix> as, bs;
    for (int k = 0; k < terms; ++k) {
      as.push_back(HpdMatrix::from(w[k] * Matrix::Identity(dim, dim)));
      bs.push_back(HpdMatrix::from(w[k] * ts[k].raw()));
    }
    const OperatorReverse via_sums = holder_reverse(as, bs, t);
    const OperatorReverse direct = concavity_reverse(w, ts, t);
    const double scale = std::max(1.0, spectral_norm(direct.rhs));
    CHECK(max_abs(via_sums.lhs - direct.lhs) <= 1e-10 * scale);
    CHECK(max_abs(via_sums.rhs - direct.rhs) <= 1e-10 * scale);
  }
}

TEST_CASE("concavity reverse certifies on random instances") {
  Rng rng(84);
  for (int i = 0; i < 300; ++i) {
    const int terms = 1 + static_cast<int>(rng.uniform_int(4));
    const std::vector<HpdMatrix> ts = random_list(3, terms, rng, 1e3);
    std::vector<double> w(terms);
    double acc = 0.0;
    for (int k = 0; k + 1 < terms; ++k) {
      w[k] = rng.uniform(0.05, 0.8) / terms;
      acc += w[k];
    }
    w[terms - 1] = 1.0 - acc;
    const OperatorReverse rev =
        concavity_reverse(w, ts, rng.uniform(1e-3, 1.0 - 1e-3));
    CHECK(rev.report.passed);
    CHECK(rev.base_report.passed);
  }
}

TEST_CASE("tsallis entropy stated examples") {
  const HpdMatrix a = diag({1.0, 4.0});
  const HpdMatrix b = diag({4.0, 1.0});
  const Matrix ent = tsallis_entropy(a, b, 0.5);
  CHECK(ent(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(ent(1, 1).real() == doctest::Approx(-4.0).epsilon(1e-12));

  Rng rng(85);
  const HpdMatrix c = random_hpd(3, 100.0, rng);
  CHECK(max_abs(tsallis_entropy(c, c, 0.4)) <= 1e-10 * max_abs(c.raw()));

  const HpdMatrix d = random_hpd(3, 100.0, rng);
  const Matrix at_one = tsallis_entropy(c, d, 1.0);
  CHECK(max_abs(at_one - (d.raw() - c.raw())) <= 1e-10 * max_abs(at_one));

  CHECK_THROWS_AS(tsallis_entropy(c, d, 0.0), DomainError);
}

TEST_CASE("tsallis superadditivity") {
  Rng rng(86);
  const std::vector<HpdMatrix> one_a = random_list(3, 1, rng);
  const std::vector<HpdMatrix> one_b = random_list(3, 1, rng);
  CHECK(std::abs(tsallis_superadditivity(one_a, one_b, 0.3).slack) <=
        1e-9 * std::max(1.0, max_abs(one_a[0].raw())));

  const std::vector<HpdMatrix> as = random_list(3, 3, rng);
  const SlackReport equal = tsallis_superadditivity(as, as, 0.6);
  double input_scale = 0.0;
  for (const HpdMatrix& m : as) input_scale += spectral_norm(m.raw());
  CHECK(std::abs(equal.slack) <= 1e-10 * input_scale);

  for (int i = 0; i < 300; ++i) {
    const int terms = 1 + static_cast<int>(rng.uniform_int(4));
    const std::vector<HpdMatrix> xs = random_list(3, terms, rng, 1e3);
    const std::vector<HpdMatrix> ys = random_list(3, terms, rng, 1e3);
    CHECK(tsallis_superadditivity(xs, ys, rng.uniform01_open()).passed);
  }
}

TEST_CASE("tsallis reverse trivial cases") {
  Rng rng(90);
  const std::vector<HpdMatrix> one_a = random_list(3, 1, rng);
  const std::vector<HpdMatrix> one_b = random_list(3, 1, rng);
  const TsallisReverse single = tsallis_reverse(one_a, one_b, 0.4);
  CHECK(max_abs(single.gap) <= 1e-9 * spectral_norm(one_a[0].raw()));
  CHECK(single.report.passed);

  const std::vector<HpdMatrix> as = random_list(3, 3, rng);
  const TsallisReverse equal = tsallis_reverse(as, as, 0.4);
  double input_scale = 0.0;
  for (const HpdMatrix& m : as) input_scale += spectral_norm(m.raw());
  CHECK(max_abs(equal.gap) <= 1e-9 * input_scale);
}

TEST_CASE("tsallis reverse certifies and scales the sum-form bound") {
  Rng rng(87);
  for (int i = 0; i < 300; ++i) {
    const int terms = 1 + static_cast<int>(rng.uniform_int(4));
    const std::vector<HpdMatrix> as = random_list(3, terms, rng, 1e3);
    const std::vector<HpdMatrix> bs = random_list(3, terms, rng, 1e3);
    const double t = rng.uniform(1e-3, 1.0 - 1e-3);
    const TsallisReverse rev = tsallis_reverse(as, bs, t);
    CHECK(rev.report.passed);

    const OperatorReverse holder = holder_reverse(as, bs, t);
    const double scale = std::max(1.0, spectral_norm(rev.rhs));
    CHECK(max_abs(rev.rhs - holder.rhs / t) <= 1e-10 * scale);
    CHECK(max_abs(rev.gap - holder.lhs / t) <= 1e-10 * scale);
  }
}

TEST_CASE("epsilon regularization stated examples") {
  Rng rng(88);
  // positive definite B: the limit is the plain weighted geometric mean
  const HpdMatrix a = random_hpd(3, 100.0, rng);
  const HpdMatrix b = random_hpd(3, 100.0, rng);
  const RegularizedMean reg = epsilon_regularized_mean(a, b.raw(), 0.3);
  CHECK(reg.monotone);
  CHECK(reg.converged);
  CHECK(max_abs(reg.limit_estimate - geometric_mean(a, b, 0.3).raw()) <= 1e-8);

  // B = 0 at t = 1: the iterates collapse to zero
  const RegularizedMean zero =
      epsilon_regularized_mean(a, Matrix::Zero(3, 3), 1.0);
  CHECK(max_abs(zero.limit_estimate) <= 1e-9);

  // rank-deficient diagonal: the kernel direction dies like sqrt(eps)
  Matrix rank1 = Matrix::Zero(2, 2);
  rank1(0, 0) = 1.0;
  const RegularizedMean limit =
      epsilon_regularized_mean(HpdMatrix::identity(2), rank1, 0.5);
  CHECK(limit.monotone);
  CHECK(limit.converged);
  CHECK(limit.limit_estimate(0, 0).real() == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(std::abs(limit.limit_estimate(1, 1).real()) <= 2e-5);

  Matrix not_psd = Matrix::Identity(3, 3);
  not_psd(0, 0) = -1.0;
  CHECK_THROWS_AS(epsilon_regularized_mean(a, not_psd, 0.5), DomainError);
  CHECK_THROWS_AS(epsilon_regularized_mean(a, b.raw(), 0.5, {1e-2, 1e-2}),
                  DomainError);
}

TEST_CASE("epsilon regularization is loewner-monotone on random instances") {
  Rng rng(89);
  for (int i = 0; i < 100; ++i) {
    const Eigen::Index n = 2 + rng.uniform_int(3);
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    // rank-deficient PSD via a projected random instance
    Eigen::SelfAdjointEigenSolver<Matrix> es(random_hpd(n, 100.0, rng).raw());
    Eigen::VectorXd lam = es.eigenvalues();
    lam[0] = 0.0;
    const Matrix b = hermitize(es.eigenvectors() *
                               lam.cast<std::complex<double>>().asDiagonal() *
                               es.eigenvectors().adjoint());
    const RegularizedMean reg =
        epsilon_regularized_mean(a, b, rng.uniform(0.1, 0.9));
    CHECK(reg.monotone);
    CHECK(reg.converged);
  }
}
