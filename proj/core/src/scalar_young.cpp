#include "loewner/scalar_young.hpp"

#include <cmath>

namespace loewner {

namespace {

void require_weight(double t, const char* who) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError(std::string(who) + ": t must lie in [0, 1]");
  }
}

void require_positive_pair(double a, double b, const char* who) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw DomainError(std::string(who) + ": a and b must be positive");
  }
}

void require_terms(int n, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": N must be >= 1");
}

}  // namespace

WeightConstants weight_constants(double t) {
  require_weight(t, "weight_constants");
  WeightConstants w;
  w.t = t;
  w.r = std::min(t, 1.0 - t);
  w.R = std::max(t, 1.0 - t);
  w.r0 = std::min(2.0 * w.r, 1.0 - 2.0 * w.r);
  return w;
}

long long floor_pow2(double u, int j) {
  return static_cast<long long>(std::floor(std::ldexp(u, j)));
}

double s_coefficient(double u, int j) {
  const long long r = floor_pow2(u, j);
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  return sign * std::ldexp(u, j - 1) - sign * static_cast<double>((r + 1) / 2);
}

RefinementSchedule refinement_schedule(double t, int N) {
  require_weight(t, "refinement_schedule");
  require_terms(N, "refinement_schedule");
  RefinementSchedule sched;
  sched.t = t;
  sched.N = N;
  sched.rows.reserve(static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j) {
    ScheduleRow row;
    row.j = j;
    row.rj = floor_pow2(t, j);
    row.kj = floor_pow2(t, j - 1);
    row.sj = s_coefficient(t, j);
    row.alphaj = std::ldexp(static_cast<double>(row.kj), 1 - j);
    row.betaj = std::ldexp(static_cast<double>(floor_pow2(2.0 * t, j - 1)), -j);
    row.gammaj = std::ldexp(static_cast<double>(floor_pow2(2.0 - 2.0 * t, j - 1)), 1 - j);
    sched.rows.push_back(row);
  }
  return sched;
}

double scalar_sn(double t, double a, double b, int N) {
  require_weight(t, "scalar_sn");
  require_positive_pair(a, b, "scalar_sn");
  require_terms(N, "scalar_sn");
  double total = 0.0;
  for (int j = 1; j <= N; ++j) {
    const double s = s_coefficient(t, j);
    if (s == 0.0) continue;
    const double k = static_cast<double>(floor_pow2(t, j - 1));
    const double half = std::ldexp(1.0, j - 1);  // 2^{j-1}
    const double inv = std::ldexp(1.0, -j);      // 2^{-j}
    const double u = std::pow(b, (half - k) * inv) * std::pow(a, k * inv);
    const double v = std::pow(a, (k + 1.0) * inv) * std::pow(b, (half - k - 1.0) * inv);
    total += s * (u - v) * (u - v);
  }
  return total;
}

ScalarBounds scalar_sababheh_bounds(double t, double a, double b, int N) {
  require_weight(t, "scalar_sababheh_bounds");
  require_positive_pair(a, b, "scalar_sababheh_bounds");
  require_terms(N, "scalar_sababheh_bounds");
  ScalarBounds out;
  out.middle = t * a + (1.0 - t) * b - std::pow(a, t) * std::pow(b, 1.0 - t);
  out.lower = scalar_sn(t, a, b, N);
  const double sq = (std::sqrt(a) - std::sqrt(b)) * (std::sqrt(a) - std::sqrt(b));
  if (t <= 0.5) {
    out.upper = (1.0 - t) * sq - scalar_sn(2.0 * t, std::sqrt(a * b), a, N);
  } else {
    out.upper = t * sq - scalar_sn(2.0 - 2.0 * t, std::sqrt(a * b), b, N);
  }
  return out;
}

ScalarBounds scalar_zhao_bounds(double t, double a, double b) {
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("scalar_zhao_bounds: t must lie in (0, 1)");
  }
  require_positive_pair(a, b, "scalar_zhao_bounds");
  const WeightConstants w = weight_constants(t);
  const double root_a = std::sqrt(a);
  const double root_b = std::sqrt(b);
  const double quarter = std::pow(a * b, 0.25);
  const double sq = (root_a - root_b) * (root_a - root_b);
  const double qa = (quarter - root_a) * (quarter - root_a);
  const double qb = (quarter - root_b) * (quarter - root_b);
  ScalarBounds out;
  out.middle = (1.0 - t) * a + t * b - std::pow(a, 1.0 - t) * std::pow(b, t);
  if (t <= 0.5) {
    out.lower = w.r0 * qa + w.r * sq;
    out.upper = w.R * sq - w.r0 * qb;
  } else {
    out.lower = w.r0 * qb + w.r * sq;
    out.upper = w.R * sq - w.r0 * qa;
  }
  return out;
}

}  // namespace loewner
