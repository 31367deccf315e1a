#include <doctest.h>

#include <cmath>

#include "loewner/holder_mccarthy.hpp"
#include "loewner/scalar_young.hpp"

using namespace loewner;

namespace {

HpdMatrix diag(std::initializer_list<double> entries) {
  const Eigen::Index n = static_cast<Eigen::Index>(entries.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (const double e : entries) m(i, i) = e, ++i;
  return HpdMatrix::from(m);
}

UnitVector basis_vector(Eigen::Index n, Eigen::Index k) {
  Vector v = Vector::Zero(n);
  v[k] = 1.0;
  return UnitVector::from(v);
}

UnitVector flat_vector(Eigen::Index n) {
  Vector v = Vector::Ones(n);
  return UnitVector::normalized(v);
}

PositiveMap unital_map(Eigen::Index n, Rng& rng) {
  switch (rng.uniform_int(3)) {
    case 0: return PositiveMap::identity(n);
    case 1: return PositiveMap::pinching({n / 2, n - n / 2});
    default: return PositiveMap::congruence(random_unitary(n, rng));
  }
}

}  // namespace

TEST_CASE("classic inequality stated examples") {
  const HpdMatrix scaled = HpdMatrix::from(3.0 * Matrix::Identity(3, 3));
  Rng rng(70);
  const UnitVector x = random_unit_vector(3, rng);
  CHECK(std::abs(hm_classic(scaled, x, 0.4).slack) <= 1e-12);

  const HpdMatrix t_op = random_hpd(4, 100.0, rng);
  const UnitVector y = random_unit_vector(4, rng);
  CHECK(std::abs(hm_classic(t_op, y, 0.0).slack) <= 1e-12);
  CHECK(std::abs(hm_classic(t_op, y, 1.0).slack) <= 1e-12);
  CHECK(hm_classic(t_op, y, 0.7).slack >= 0.0);
  CHECK_THROWS_AS(hm_classic(t_op, y, 1.2), DomainError);
}

TEST_CASE("classic inequality on a large random sample") {
  Rng rng(71);
  for (int i = 0; i < 20000; ++i) {
    const int n = 2 + static_cast<int>(rng.uniform_int(7));
    const HpdMatrix t_op = random_hpd(n, 1e4, rng);
    const UnitVector x = random_unit_vector(n, rng);
    CHECK(hm_classic(t_op, x, rng.uniform01()).slack >= -1e-11);
  }
}

TEST_CASE("two-map chain trivial and oracle cases") {
  Rng rng(72);
  const PositiveMap id4 = PositiveMap::identity(4);
  const HpdMatrix eye = HpdMatrix::identity(4);
  const UnitVector x = random_unit_vector(4, rng);
  const ScalarChain collapsed = hm_two_map_chain(id4, id4, eye, eye, x, 0.3);
  CHECK(std::abs(collapsed.middle) <= 1e-12);
  CHECK(std::abs(collapsed.lower) <= 1e-12);
  CHECK(std::abs(collapsed.upper) <= 1e-12);

  const ScalarChain mixed_collapsed = hm_mixed_chain(id4, id4, eye, eye, x, 0.3);
  CHECK(std::abs(mixed_collapsed.middle) <= 1e-12);
  CHECK(std::abs(mixed_collapsed.lower) <= 1e-12);
  CHECK(std::abs(mixed_collapsed.upper) <= 1e-12);

  // diagonal operators at a basis vector reduce to the scalar chain
  for (int i = 0; i < 200; ++i) {
    const double av = std::exp(rng.uniform(-2.0, 2.0));
    const double bv = std::exp(rng.uniform(-2.0, 2.0));
    const double t = rng.uniform(1e-3, 1.0 - 1e-3);
    const HpdMatrix a = diag({av, 3.0});
    const HpdMatrix b = diag({bv, 5.0});
    const PositiveMap id2 = PositiveMap::identity(2);
    const ScalarChain got =
        hm_two_map_chain(id2, id2, a, b, basis_vector(2, 0), t);
    const ScalarBounds want = scalar_zhao_bounds(t, av, bv);
    CHECK(got.lower == doctest::Approx(want.lower).epsilon(1e-11));
    CHECK(got.middle == doctest::Approx(want.middle).epsilon(1e-11));
    CHECK(got.upper == doctest::Approx(want.upper).epsilon(1e-11));
  }
}

TEST_CASE("two-map chain requires unital maps") {
  Rng rng(73);
  const HpdMatrix a = random_hpd(4, 100.0, rng);
  const HpdMatrix b = random_hpd(4, 100.0, rng);
  const UnitVector x = random_unit_vector(4, rng);
  const PositiveMap non_unital =
      PositiveMap::congruence(2.0 * Matrix::Identity(4, 4));
  const PositiveMap id4 = PositiveMap::identity(4);
  CHECK_THROWS_AS(hm_two_map_chain(non_unital, id4, a, b, x, 0.3), DomainError);
  CHECK_THROWS_AS(hm_two_map_chain(id4, non_unital, a, b, x, 0.3), DomainError);
  CHECK_THROWS_AS(hm_two_map_chain(id4, id4, a, b, x, 0.0), DomainError);
}

TEST_CASE("two-map and mixed chains certify on random instances") {
  Rng rng(74);
  for (int i = 0; i < 2000; ++i) {
    const Eigen::Index n = 4;
    const PositiveMap phi = unital_map(n, rng);
    const PositiveMap psi = unital_map(n, rng);
    const HpdMatrix a = random_hpd(n, 1e3, rng);
    const HpdMatrix b = random_hpd(n, 1e3, rng);
    const UnitVector x = random_unit_vector(n, rng);
    const double t = rng.uniform(1e-4, 1.0 - 1e-4);

    const ScalarChain two = hm_two_map_chain(phi, psi, a, b, x, t);
    CHECK(two.lower_report.passed);
    CHECK(two.upper_report.passed);

    const ScalarChain mixed = hm_mixed_chain(phi, psi, a, b, x, t);
    CHECK(mixed.lower_report.passed);
    CHECK(mixed.upper_report.passed);
  }
}

TEST_CASE("self-reverse scales out of the mixed chain") {
  // with Psi = Phi and B = A the mixed chain at 1-t is the self-reverse chain
  // times <Phi(A)x,x>^{1-t}
  Rng rng(75);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Index n = 4;
    const PositiveMap phi = unital_map(n, rng);
    const HpdMatrix a = random_hpd(n, 1e3, rng);
    const UnitVector x = random_unit_vector(n, rng);
    const double t = rng.uniform(1e-3, 1.0 - 1e-3);

    const ScalarChain self = hm_self_reverse(phi, a, x, t);
    const ScalarChain mixed = hm_mixed_chain(phi, phi, a, a, x, 1.0 - t);
    const double factor =
        std::pow(quad_form(hermitize(phi.apply(a.raw())), x), t - 1.0);
    const double scale = std::abs(mixed.upper) * factor + 1.0;
    CHECK(std::abs(self.middle - mixed.middle * factor) <= 1e-11 * scale);
    CHECK(std::abs(self.lower - mixed.lower * factor) <= 1e-11 * scale);
    CHECK(std::abs(self.upper - mixed.upper * factor) <= 1e-11 * scale);
  }
}

TEST_CASE("self-reverse stated examples and certification") {
  Rng rng(76);
  const PositiveMap id4 = PositiveMap::identity(4);
  const UnitVector x = random_unit_vector(4, rng);
  const ScalarChain at_identity =
      hm_self_reverse(id4, HpdMatrix::identity(4), x, 0.3);
  CHECK(std::abs(at_identity.middle) <= 1e-12);

  for (int i = 0; i < 2000; ++i) {
    const Eigen::Index n = 3;
    const PositiveMap phi = unital_map(n, rng);
    const HpdMatrix a = random_hpd(n, 1e4, rng);
    const UnitVector y = random_unit_vector(n, rng);
    const double t = rng.uniform(1e-4, 1.0 - 1e-4);
    const ScalarChain chain = hm_self_reverse(phi, a, y, t);
    CHECK(chain.lower_report.passed);
    CHECK(chain.upper_report.passed);
  }
}

TEST_CASE("simple reverse stated example") {
  const HpdMatrix t_op = diag({4.0, 1.0});
  const SimpleReverse rev = hm_reverse_simple(t_op, flat_vector(2), 0.25);
  CHECK(rev.middle == doctest::Approx(0.050326648496388).epsilon(1e-11));
  CHECK(rev.tight_report.passed);
  CHECK(rev.loose_asserted);  // <Tx,x> = 2.5 >= 1
  CHECK(rev.loose_report.passed);

  // eigenvector input gives the equality case
  const SimpleReverse eig = hm_reverse_simple(t_op, basis_vector(2, 0), 0.25);
  CHECK(std::abs(eig.middle) <= 1e-12);
  CHECK(eig.bound_tight >= -1e-12);

  const HpdMatrix scaled = HpdMatrix::from(5.0 * Matrix::Identity(3, 3));
  const SimpleReverse constant =
      hm_reverse_simple(scaled, basis_vector(3, 1), 0.4);
  CHECK(std::abs(constant.middle) <= 1e-12);
  CHECK(std::abs(constant.bound_tight) <= 1e-12);

  CHECK_THROWS_AS(hm_reverse_simple(t_op, flat_vector(2), 0.6), DomainError);
  CHECK_THROWS_AS(hm_reverse_simple(t_op, flat_vector(2), 0.0), DomainError);
}

TEST_CASE("simple reverse agrees with the identity-map self-reverse") {
  Rng rng(77);
  for (int i = 0; i < 300; ++i) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(5));
    const HpdMatrix t_op = random_hpd(n, 1e3, rng);
    const UnitVector x = random_unit_vector(n, rng);
    const double t = rng.uniform(1e-3, 0.5);
    const SimpleReverse rev = hm_reverse_simple(t_op, x, t);
    const ScalarChain self =
        hm_self_reverse(PositiveMap::identity(n), t_op, x, t);
    const double scale = std::abs(rev.bound_tight) + 1.0;
    CHECK(std::abs(rev.middle - self.middle) <= 1e-11 * scale);
    CHECK(std::abs(rev.bound_tight - self.upper) <= 1e-11 * scale);
  }
}

TEST_CASE("simple reverse certification and the loose-bound gate") {
  Rng rng(78);
  int loose_asserted_count = 0;
  int loose_skipped_count = 0;
  for (int i = 0; i < 4000; ++i) {
    const Eigen::Index n = 2 + static_cast<Eigen::Index>(rng.uniform_int(7));
    const HpdMatrix t_op = random_hpd(n, 1e4, rng);
    const UnitVector x = random_unit_vector(n, rng);
    const double t = rng.uniform01_open() * 0.5;
    const SimpleReverse rev = hm_reverse_simple(t_op, x, t);
    CHECK(rev.tight_report.passed);
    if (rev.loose_asserted) {
      CHECK(rev.loose_report.passed);
      ++loose_asserted_count;
    } else {
      // observed, not asserted: record that the gate actually fires
      ++loose_skipped_count;
    }
  }
  CHECK(loose_asserted_count > 0);
  CHECK(loose_skipped_count > 0);
}
