#include <doctest.h>

#include <cmath>

#include "loewner/means.hpp"

using namespace loewner;

namespace {

HpdMatrix diag2(double a, double b) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return HpdMatrix::from(m);
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("frac_power identity cases") {
  const HpdMatrix a = random_hpd(4, 100.0, 21u);
  CHECK(max_abs(frac_power(a, 1.0).raw() - a.raw()) <= 1e-12 * max_abs(a.raw()));
  CHECK(max_abs(frac_power(a, 0.0).raw() - Matrix::Identity(4, 4)) <= 1e-12);

  const HpdMatrix d = diag2(4.0, 9.0);
  const Matrix root = frac_power(d, 0.5).raw();
  CHECK(root(0, 0).real() == doctest::Approx(2.0));
  CHECK(root(1, 1).real() == doctest::Approx(3.0));
  CHECK(std::abs(root(0, 1)) <= 1e-14);
}

TEST_CASE("frac_power inverse and composition laws") {
  Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(5));
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    const double s = rng.uniform(-2.0, 2.0);
    const Matrix prod = frac_power(a, s).raw() * frac_power(a, -s).raw();
    CHECK(max_abs(prod - Matrix::Identity(n, n)) <= 1e-10);

    const double p = rng.uniform(-2.0, 2.0);
    const double q = rng.uniform(-2.0, 2.0);
    const Matrix composed = frac_power(frac_power(a, p), q).raw();
    const Matrix direct = frac_power(a, p * q).raw();
    const double scale = std::max(1.0, max_abs(direct));
    CHECK(max_abs(composed - direct) <= 1e-10 * scale);
  }
}

TEST_CASE("frac_power rejects near-singular input") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = 1e-14;
  const HpdMatrix a = HpdMatrix::from(m);
  CHECK_THROWS_AS(frac_power(a, 0.5), IllConditionedError);
}

TEST_CASE("arithmetic and harmonic means") {
  const HpdMatrix a = HpdMatrix::from(Matrix::Identity(2, 2));
  const HpdMatrix b = HpdMatrix::from(3.0 * Matrix::Identity(2, 2));
  const Matrix nabla = arithmetic_mean(a, b, 0.5).raw();
  CHECK(nabla(0, 0).real() == doctest::Approx(2.0));
  const Matrix harm = harmonic_mean(a, b, 0.5).raw();
  CHECK(harm(0, 0).real() == doctest::Approx(1.5));

  const HpdMatrix c = random_hpd(3, 50.0, 31u);
  CHECK(max_abs(arithmetic_mean(c, c, 0.3).raw() - c.raw()) <= 1e-12 * max_abs(c.raw()));
  CHECK(max_abs(harmonic_mean(c, c, 0.3).raw() - c.raw()) <= 1e-10 * max_abs(c.raw()));
  CHECK_THROWS_AS(arithmetic_mean(a, b, 1.5), DomainError);
  CHECK_THROWS_AS(harmonic_mean(a, b, -0.5), DomainError);
}

TEST_CASE("geometric mean endpoints and fixed point") {
  Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(4));
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    const HpdMatrix b = random_hpd(n, 100.0, rng);
    const double scale = max_abs(a.raw()) + max_abs(b.raw());
    CHECK(max_abs(geometric_mean(a, b, 0.0).raw() - a.raw()) <= 1e-10 * scale);
    CHECK(max_abs(geometric_mean(a, b, 1.0).raw() - b.raw()) <= 1e-10 * scale);
    const double s = rng.uniform(-1.0, 2.0);
    CHECK(max_abs(geometric_mean(a, a, s).raw() - a.raw()) <= 1e-10 * scale);
  }
}

TEST_CASE("geometric mean commutative reduction") {
  const HpdMatrix a = diag2(1.0, 4.0);
  const HpdMatrix b = diag2(9.0, 1.0);
  const Matrix g = geometric_mean(a, b, 0.5).raw();
  CHECK(g(0, 0).real() == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(g(1, 1).real() == doctest::Approx(2.0).epsilon(1e-12));

  Rng rng(24);
  for (int i = 0; i < 200; ++i) {
    const double av = std::exp(rng.uniform(-2.0, 2.0));
    const double bv = std::exp(rng.uniform(-2.0, 2.0));
    const double s = rng.uniform(-0.5, 1.5);
    const Matrix m = geometric_mean(diag2(av, av), diag2(bv, bv), s).raw();
    const double want = std::pow(av, 1.0 - s) * std::pow(bv, s);
    CHECK(m(0, 0).real() == doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("geometric mean symmetry at the midpoint") {
  Rng rng(25);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(5));
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    const HpdMatrix b = random_hpd(n, 100.0, rng);
    const Matrix ab = geometric_mean(a, b, 0.5).raw();
    const Matrix ba = geometric_mean(b, a, 0.5).raw();
    const double scale = max_abs(ab) + max_abs(ba);
    CHECK(max_abs(ab - ba) <= 1e-10 * scale);
  }
}

TEST_CASE("geometric mean congruence invariance") {
  Rng rng(26);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(4));
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    const HpdMatrix b = random_hpd(n, 100.0, rng);
    // well-conditioned invertible X
    Eigen::VectorXd stretch(n);
    for (int k = 0; k < n; ++k) stretch[k] = std::exp(rng.uniform(-0.5, 0.5));
    const Matrix x = random_unitary(n, rng) *
                     stretch.cast<std::complex<double>>().asDiagonal() *
                     random_unitary(n, rng);
    const double t = rng.uniform01();
    const Matrix lhs = x.adjoint() * geometric_mean(a, b, t).raw() * x;
    const Matrix rhs = geometric_mean(HpdMatrix::from(hermitize(x.adjoint() * a.raw() * x)),
                                      HpdMatrix::from(hermitize(x.adjoint() * b.raw() * x)), t)
                           .raw();
    const double scale = max_abs(lhs) + max_abs(rhs);
    CHECK(max_abs(lhs - rhs) <= 1e-9 * scale);
  }
}

TEST_CASE("harmonic <= geometric <= arithmetic") {
  Rng rng(27);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(5));
    const HpdMatrix a = random_hpd(n, 100.0, rng);
    const HpdMatrix b = random_hpd(n, 100.0, rng);
    const double t = rng.uniform01();
    const Matrix harm = harmonic_mean(a, b, t).raw();
    const Matrix geo = geometric_mean(a, b, t).raw();
    const Matrix arith = arithmetic_mean(a, b, t).raw();
    CHECK(loewner_geq(geo, harm).passed);
    CHECK(loewner_geq(arith, geo).passed);
  }
}

TEST_CASE("weighted family matches one-shot means") {
  Rng rng(28);
  const HpdMatrix a = random_hpd(5, 100.0, rng);
  const HpdMatrix b = random_hpd(5, 100.0, rng);
  WeightedGeometricFamily fam(a, b);
  for (const double s : {-0.5, 0.0, 0.25, 0.5, 0.9, 1.0, 1.3}) {
    const Matrix direct = geometric_mean(a, b, s).raw();
    CHECK(max_abs(fam.sharp(s) - direct) <= 1e-12 * std::max(1.0, max_abs(direct)));
  }
  const HpdMatrix c = random_hpd(4, 100.0, rng);
  CHECK_THROWS_AS(WeightedGeometricFamily(a, c), DimensionError);
}
