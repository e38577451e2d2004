#pragma once

#include <vector>

#include "dspca/types.hpp"

namespace dspca {

/// Constants for the smoothed first-order solve. Fields left at zero are
/// derived at solve time from the problem size and accuracy target:
///   mu = epsilon / (2 D2),  L = 2 log(n) / epsilon,
///   D1 = n^2 / 2,  D2 = log(n),
///   max_iters = min(2 * iteration_bound, 100000).
/// Explicit mu / L / max_iters values refer to the rho-rescaled problem the
/// inner loop actually runs (penalty 1, unit box).
struct SolverParams {
  double epsilon = 1e-3;  // target duality gap, in the units of the input A
  double rho = 1.0;
  double mu = 0.0;
  double L = 0.0;
  double D1 = 0.0;
  double D2 = 0.0;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
  double T_norm = 1.0;
  long max_iters = 0;
  int gap_check_every = 100;

  /// Fill every derived field for an n-dimensional solve at the given
  /// accuracy. Throws ParamError for epsilon <= 0 or n < 1.
  static SolverParams auto_config(int n, double epsilon, double rho = 1.0);

  /// ceil((4 T_norm / epsilon) * sqrt(D1 D2 / (sigma1 sigma2))), at least 1.
  long iteration_bound() const;
};

/// One duality-gap evaluation along the solve.
struct GapTraceRow {
  long iteration = 0;
  double f_mu = 0.0;
  double gap = 0.0;
  double wall_ms = 0.0;
};

/// Result of a penalized relaxation solve.
struct RelaxationSolution {
  SymMatrix X;  // primal iterate on the spectahedron
  SymMatrix U;  // dual iterate, |U_ij| <= rho
  double rho = 0.0;
  double epsilon = 0.0;
  double primal_obj = 0.0;  // Tr(AX) - rho * 1^T|X|1
  double dual_obj = 0.0;    // lambda_max(A + U)
  double gap = 0.0;         // dual_obj - primal_obj at the certified iterate
  long iterations = 0;
  bool converged = false;
  double max_u_inf = 0.0;  // max over iterations of ||U_k||_inf, rescaled box
  std::vector<GapTraceRow> trace;
};

struct UStarResult {
  SymMatrix X;     // argmax over the spectahedron of <Z,X> - mu d2(X)
  double f_value;  // the attained smoothed value
};

/// Entropy-prox maximizer: X = V diag(h) V^T with softmax weights
/// h_i = exp((d_i - d_max)/mu) / sum_j exp((d_j - d_max)/mu), and
/// f = d_max + mu log sum_j exp((d_j - d_max)/mu) - mu log n.
UStarResult u_star(const SymMatrix& z, double mu);

struct SmoothedValueAndGrad {
  double f;
  SymMatrix grad;  // equals u_star(A+U, mu).X: symmetric, PSD, unit trace
};

/// Smoothed surrogate f_mu(U) = mu log Tr exp((A+U)/mu) - mu log n and its
/// gradient with respect to U.
SmoothedValueAndGrad f_mu_and_grad(const SymMatrix& a, const SymMatrix& u,
                                   double mu);

/// Entrywise clamp to [-bound, bound].
SymMatrix project_box(const SymMatrix& v, double bound);

/// Minimize lambda_max(A + U) over the box |U_ij| <= rho with the smoothed
/// accelerated scheme, equivalently maximize Tr(AX) - rho 1^T|X|1 over the
/// spectahedron. Internally rescales to A/rho with a unit box. Returns the
/// best-gap iterate; converged=false if the gap never reached epsilon within
/// the iteration cap.
RelaxationSolution solve_penalized(const SymMatrix& a, double rho,
                                   const SolverParams& params);

/// Residuals of the optimality system linking the penalized primal and the
/// box-constrained eigenvalue dual.
struct KktReport {
  double stationarity = 0.0;      // ||(A+U)X - lambda_max(A+U) X||_F
  double complementarity = 0.0;   // ||U o X + rho |X|||_F
  double trace_residual = 0.0;    // |Tr(X) - 1|
  double box_violation = 0.0;     // max(0, max|U_ij| - rho)
  double x_min_eigenvalue = 0.0;  // most negative eigenvalue of X
};

KktReport check_kkt(const SymMatrix& a, const RelaxationSolution& sol,
                    double rho);

}  // namespace dspca
