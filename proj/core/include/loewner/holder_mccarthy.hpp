#pragma once

#include "loewner/matrix.hpp"
#include "loewner/means.hpp"
#include "loewner/positive_map.hpp"

namespace loewner {

// slack = <Tx,x>^t - <T^t x,x> >= 0 for positive T, unit x, t in [0,1].
SlackReport hm_classic(const HpdMatrix& t_op, const UnitVector& x, double t,
                       double tol = kDefaultTol);

struct ScalarChain {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  SlackReport lower_report;  // middle >= lower
  SlackReport upper_report;  // upper >= middle
};

// Two-sided bounds on
//   (1-t)<Phi(A)x,x> + t<Psi(B)x,x> - <Psi(B^t)x,x><Phi(A^{1-t})x,x>
// for unital positive Phi, Psi and 0 < t < 1.
ScalarChain hm_two_map_chain(const PositiveMap& phi, const PositiveMap& psi,
                             const HpdMatrix& a, const HpdMatrix& b,
                             const UnitVector& x, double t, double tol = kDefaultTol);

// Variant with the power outside the inner product: the middle uses
// <Psi(B)x,x>^t in place of <Psi(B^t)x,x>.
ScalarChain hm_mixed_chain(const PositiveMap& phi, const PositiveMap& psi,
                           const HpdMatrix& a, const HpdMatrix& b,
                           const UnitVector& x, double t, double tol = kDefaultTol);

// Psi = Phi, B = A specialization: two-sided bounds on
// <Phi(A)x,x>^t - <Phi(A^t)x,x> with the <Phi(A)x,x>^{t-1/2} prefactor.
ScalarChain hm_self_reverse(const PositiveMap& phi, const HpdMatrix& a,
                            const UnitVector& x, double t, double tol = kDefaultTol);

struct SimpleReverse {
  double middle = 0.0;       // <Tx,x>^t - <T^t x,x>
  double bound_tight = 0.0;  // with the <Tx,x>^{t-1/2} prefactor
  double bound_loose = 0.0;  // prefactor dropped
  SlackReport tight_report;  // bound_tight >= middle
  SlackReport loose_report;  // bound_loose >= bound_tight
  // Dropping the prefactor needs <Tx,x> >= 1; the loose bound is only a
  // claim when that holds.
  bool loose_asserted = false;
};

// Reverse of the classic inner-product inequality for t in (0, 1/2].
SimpleReverse hm_reverse_simple(const HpdMatrix& t_op, const UnitVector& x, double t,
                                double tol = kDefaultTol);

}  // namespace loewner
