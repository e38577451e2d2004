#pragma once

#include <vector>

#include "dspca/smooth_solver.hpp"
#include "dspca/types.hpp"

namespace dspca {

/// Sparsity budget for the constrained relaxation, 1 <= k <= n.
struct SparsityTarget {
  int k = 1;
};

/// Slack allowed on 1^T|X|1 <= k because the inner solves are
/// epsilon-approximate.
inline constexpr double kFeasibilitySlack = 1e-3;

/// Constrained solve outcome: the penalized solution at the accepted penalty
/// level together with the l1 mass it achieved.
struct ConstrainedSolution {
  RelaxationSolution inner;
  double rho_used = 0.0;
  double l1_mass = 0.0;
  int k_target = 0;
};

/// Thrown when the penalty search cannot produce a feasible iterate; carries
/// the bracket state for diagnosis.
class NoFeasibleRhoError : public Error {
 public:
  NoFeasibleRhoError(const std::string& what, int k, double rho_lo,
                     double rho_hi, double last_mass)
      : Error(what), k(k), rho_lo(rho_lo), rho_hi(rho_hi), last_mass(last_mass) {}
  int k;
  double rho_lo;
  double rho_hi;
  double last_mass;
};

/// Solve the budgeted relaxation max Tr(AX) s.t. Tr(X)=1, 1^T|X|1 <= k,
/// X PSD, by bisecting the penalty level of the penalized form (the penalty
/// is the constraint's multiplier). A must be PSD up to a small negative
/// eigenvalue, which is repaired by a diagonal shift. epsilon is the inner
/// solve accuracy in the units of A.
ConstrainedSolution solve_constrained(const SymMatrix& a, SparsityTarget k,
                                      double epsilon);

struct ExplainedVariance {
  double value = 0.0;    // x^T A x
  double percent = 0.0;  // 100 * value / Tr(A)
};

/// Variance captured by a unit loading. Throws ParamError if x is not unit
/// norm to 1e-8.
ExplainedVariance explained_variance(const SymMatrix& a,
                                     const LoadingVector& x);

/// Fraction of total variance in the span of the given loadings, computed by
/// orthonormalizing them in order (rank tolerance 1e-10; dependent directions
/// contribute nothing).
double cumulative_explained_variance(const SymMatrix& a,
                                     const std::vector<LoadingVector>& xs);

}  // namespace dspca
