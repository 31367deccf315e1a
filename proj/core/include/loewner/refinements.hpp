#pragma once

#include "loewner/matrix.hpp"
#include "loewner/means.hpp"
#include "loewner/scalar_young.hpp"

namespace loewner {

// Series terms beyond this are below double-precision resolution.
inline constexpr int kMaxSeriesTerms = 16;

struct MeanChain {
  Matrix lower;
  Matrix middle;
  Matrix upper;
  SlackReport lower_report;  // middle >= lower
  SlackReport upper_report;  // upper >= middle
};

// Two-sided Young chain in mean form:
//   A#tB + r (A + B - 2 A#B)  <=  A∇tB  <=  A#tB + R (A + B - 2 A#B)
MeanChain kittaneh_chain(const HpdMatrix& a, const HpdMatrix& b, double t,
                         double tol = kDefaultTol);

// Hermiticity defect ||M - M*||_F / ||M||_F of the raw product A^{1-t} B^t,
// the non-Hermitian literal reading of the chain's endpoints.
double raw_product_hermiticity_defect(const HpdMatrix& a, const HpdMatrix& b, double t);

struct RefinementBound {
  // The additive refinement (lower forms) or the full upper bound matrix.
  Matrix term;
  SlackReport report;
};

// N-term series refinement:  term + A#tB <= A∇tB, t in [0,1].
RefinementBound sababheh_lower(const HpdMatrix& a, const HpdMatrix& b, double t,
                               int N, double tol = kDefaultTol);

// Two-term refinement with the r0 quarter-point correction, t in (0,1).
RefinementBound zhao_lower_n2(const HpdMatrix& a, const HpdMatrix& b, double t,
                              double tol = kDefaultTol);

// N-term series reverse:  A∇tB <= term, t in [0,1].
RefinementBound sababheh_upper(const HpdMatrix& a, const HpdMatrix& b, double t,
                               int N, double tol = kDefaultTol);

// Two-term reverse with the r0 quarter-point correction, t in (0,1).
RefinementBound zhao_upper_n2(const HpdMatrix& a, const HpdMatrix& b, double t,
                              double tol = kDefaultTol);

}  // namespace loewner
