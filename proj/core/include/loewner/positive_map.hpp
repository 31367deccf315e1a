#pragma once

#include <memory>
#include <string>
#include <vector>

#include "loewner/matrix.hpp"
#include "loewner/means.hpp"

namespace loewner {

// A positive (not necessarily unital) linear map with an evaluator.
// The zoo spans unital and non-unital, rank-reducing and dimension-preserving
// cases: identity, congruence M -> X*MX, pinching to a block partition,
// the block-diagonal trace-out [C_ij] -> sum_i C_ii, the trace functional
// M -> tr(M rho), and convex combinations of same-shape maps.
class PositiveMap {
 public:
  enum class Kind {
    Identity,
    Congruence,
    Pinching,
    BlockDiagSum,
    TraceFunctional,
    ConvexCombination,
  };

  static PositiveMap identity(Eigen::Index n);
  static PositiveMap congruence(Matrix x);
  static PositiveMap pinching(std::vector<Eigen::Index> block_sizes);
  static PositiveMap block_diag_sum(Eigen::Index blocks, Eigen::Index block_dim);
  static PositiveMap trace_functional(Matrix rho);
  static PositiveMap convex_combination(std::vector<double> weights,
                                        std::vector<PositiveMap> maps);

  Matrix apply(const Matrix& m) const;

  Kind kind() const { return kind_; }
  std::string kind_name() const;
  bool unital() const { return unital_; }
  Eigen::Index input_dim() const { return input_dim_; }
  Eigen::Index output_dim() const { return output_dim_; }

 private:
  PositiveMap() = default;
  void finalize();  // derives the unital flag from phi(I)

  Kind kind_ = Kind::Identity;
  Eigen::Index input_dim_ = 0;
  Eigen::Index output_dim_ = 0;
  bool unital_ = false;
  Matrix payload_;                          // congruence X / trace rho
  std::vector<Eigen::Index> block_sizes_;   // pinching
  Eigen::Index blocks_ = 0;                 // block_diag_sum
  Eigen::Index block_dim_ = 0;
  std::vector<double> weights_;             // convex combination
  std::shared_ptr<const std::vector<PositiveMap>> components_;
};

Matrix apply_map(const PositiveMap& phi, const Matrix& m);

// Certifies phi(A #_t B) <= phi(A) #_t phi(B), t in [0,1].
SlackReport ando_check(const PositiveMap& phi, const HpdMatrix& a, const HpdMatrix& b,
                       double t, double tol = kDefaultTol);

struct ReverseBound {
  Matrix rhs;
  SlackReport report;  // rhs >= phi(A)#t phi(B) - phi(A #_t B)
};

// N-term reverse of Ando's inequality; phi need not be unital. t in [0,1].
ReverseBound ando_reverse_bound(const PositiveMap& phi, const HpdMatrix& a,
                                const HpdMatrix& b, double t, int N,
                                double tol = kDefaultTol);

struct TwoSidedReverseBound {
  Matrix rhs_tight;
  Matrix rhs_loose;
  SlackReport tight_report;  // rhs_tight >= lhs
  SlackReport loose_report;  // rhs_loose >= rhs_tight
};

// Two-term reverse with the r0 quarter-point corrections plus the loose
// head-only bound. t in (0,1).
TwoSidedReverseBound ando_reverse_bound_n2(const PositiveMap& phi, const HpdMatrix& a,
                                           const HpdMatrix& b, double t,
                                           double tol = kDefaultTol);

}  // namespace loewner
