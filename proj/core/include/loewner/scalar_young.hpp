#pragma once

#include <vector>

#include "loewner/errors.hpp"

namespace loewner {

// t together with the derived constants appearing in every reverse bound.
struct WeightConstants {
  double t;
  double r;   // min{t, 1-t}
  double R;   // max{t, 1-t}
  double r0;  // min{2r, 1-2r}
};

WeightConstants weight_constants(double t);

// floor(2^j u); ldexp keeps the scaling exact so dyadic u floors exactly.
long long floor_pow2(double u, int j);

// Triangular-wave coefficient s_j(u) of the dyadic refinement series;
// takes values in [0, 1/2] and vanishes at u = m 2^{1-j}.
double s_coefficient(double u, int j);

struct ScheduleRow {
  int j;
  long long rj;   // floor(2^j t)
  long long kj;   // floor(2^{j-1} t)
  double sj;      // s_j(t)
  double alphaj;  // kj(t) / 2^{j-1}
  double betaj;   // 2^{-j} kj(2t)
  double gammaj;  // 2^{1-j} kj(2-2t)
};

struct RefinementSchedule {
  double t;
  int N;
  std::vector<ScheduleRow> rows;
};

RefinementSchedule refinement_schedule(double t, int N);

// N-term series of squared dyadic-root differences sharpening the weighted
// AM-GM inequality; nonnegative for all t in [0,1], a,b > 0.
double scalar_sn(double t, double a, double b, int N);

struct ScalarBounds {
  double lower;
  double middle;
  double upper;
};

// middle = t a + (1-t) b - a^t b^{1-t}; series bounds on both sides:
// S_N(t;a,b) <= middle <= (1-t)(sqrt a - sqrt b)^2 - S_N(2t; sqrt(ab), a)
// for t <= 1/2, the mirrored form with S_N(2-2t; sqrt(ab), b) for t >= 1/2.
ScalarBounds scalar_sababheh_bounds(double t, double a, double b, int N);

// middle = (1-t) a + t b - a^{1-t} b^t; the two-term (quarter-point) bounds
// with weights r, R and second-order constant r0. Requires 0 < t < 1.
ScalarBounds scalar_zhao_bounds(double t, double a, double b);

}  // namespace loewner
