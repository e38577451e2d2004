#include "dspca/smooth_solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

namespace dspca {

namespace {

constexpr long kIterationCap = 100000;

// Softmax weights and smoothed value from an eigendecomposition held in
// ascending Eigen order. Shifting by d_max keeps every exponent <= 0.
struct SoftmaxEval {
  double f = 0.0;      // d_max + mu log sum exp((d_i-d_max)/mu) - mu log n
  double d_max = 0.0;  // lambda_max of the decomposed matrix
};

SoftmaxEval softmax_weights(const Eigen::VectorXd& d, double mu,
                            Eigen::VectorXd& h) {
  const Eigen::Index n = d.size();
  const double d_max = d[n - 1];
  h = ((d.array() - d_max) / mu).exp();
  const double s = h.sum();
  h /= s;
  SoftmaxEval out;
  out.d_max = d_max;
  out.f = d_max + mu * std::log(s) - mu * std::log(static_cast<double>(n));
  return out;
}

}  // namespace

SolverParams SolverParams::auto_config(int n, double epsilon, double rho) {
  if (n < 1) throw ParamError("auto_config requires n >= 1");
  if (epsilon <= 0.0) throw ParamError("auto_config requires epsilon > 0");
  if (rho <= 0.0) throw ParamError("auto_config requires rho > 0");
  SolverParams p;
  p.epsilon = epsilon;
  p.rho = rho;
  p.D1 = 0.5 * static_cast<double>(n) * static_cast<double>(n);
  p.D2 = std::log(static_cast<double>(n));
  if (n == 1) {
    // log(1) = 0 degenerates the smoothing constants; the solve itself is
    // closed-form and never enters the iteration loop.
    p.mu = epsilon;
    p.L = 1.0;
    p.max_iters = 1;
    return p;
  }
  p.mu = epsilon / (2.0 * p.D2);
  p.L = 2.0 * p.D2 / epsilon;
  p.max_iters = std::min(2 * p.iteration_bound(), kIterationCap);
  return p;
}

long SolverParams::iteration_bound() const {
  const double nb = std::ceil(4.0 * T_norm / epsilon *
                              std::sqrt(D1 * D2 / (sigma1 * sigma2)));
  if (!(nb >= 1.0)) return 1;
  if (nb >= static_cast<double>(std::numeric_limits<long>::max() / 4)) {
    return std::numeric_limits<long>::max() / 4;
  }
  return static_cast<long>(nb);
}

UStarResult u_star(const SymMatrix& z, double mu) {
  if (mu <= 0.0) throw ParamError("u_star requires mu > 0");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z.mat());
  if (es.info() != Eigen::Success) {
    throw ParamError("eigendecomposition failed in u_star");
  }
  Eigen::VectorXd h;
  const SoftmaxEval ev = softmax_weights(es.eigenvalues(), mu, h);
  // V diag(h) V^T as B B^T with B = V diag(sqrt(h)): exactly symmetric and
  // PSD by construction.
  const Eigen::MatrixXd b =
      es.eigenvectors() * h.cwiseSqrt().asDiagonal();
  UStarResult out;
  out.X = SymMatrix(b * b.transpose());
  out.f_value = ev.f;
  return out;
}

SmoothedValueAndGrad f_mu_and_grad(const SymMatrix& a, const SymMatrix& u,
                                   double mu) {
  if (a.n() != u.n()) {
    throw ParamError("f_mu_and_grad dimension mismatch: " +
                     std::to_string(a.n()) + " vs " + std::to_string(u.n()));
  }
  UStarResult us = u_star(SymMatrix(a.mat() + u.mat()), mu);
  return {us.f_value, std::move(us.X)};
}

SymMatrix project_box(const SymMatrix& v, double bound) {
  if (bound <= 0.0) throw ParamError("project_box requires bound > 0");
  return SymMatrix(v.mat().cwiseMax(-bound).cwiseMin(bound));
}

RelaxationSolution solve_penalized(const SymMatrix& a, double rho,
                                   const SolverParams& params) {
  if (rho <= 0.0) throw ParamError("solve_penalized requires rho > 0");
  if (params.epsilon <= 0.0) {
    throw ParamError("solve_penalized requires epsilon > 0");
  }
  if (params.gap_check_every < 1) {
    throw ParamError("gap_check_every must be >= 1");
  }
  const Eigen::Index n = a.n();
  const double epsilon = params.epsilon;

  RelaxationSolution sol;
  sol.rho = rho;
  sol.epsilon = epsilon;

  if (n == 1) {
    // Single-variable problem in closed form: X = [1], U = -rho.
    sol.X = SymMatrix(Eigen::MatrixXd::Ones(1, 1));
    sol.U = SymMatrix(Eigen::MatrixXd::Constant(1, 1, -rho));
    sol.primal_obj = a(0, 0) - rho;
    sol.dual_obj = a(0, 0) - rho;
    sol.gap = 0.0;
    sol.converged = true;
    sol.max_u_inf = 1.0;
    return sol;
  }

  // Rescaled problem: penalty 1, box |U_ij| <= 1, accuracy epsilon/rho.
  const Eigen::MatrixXd as = a.mat() / rho;
  SolverParams cfg = SolverParams::auto_config(static_cast<int>(n),
                                               epsilon / rho, 1.0);
  if (params.mu > 0.0) cfg.mu = params.mu;
  if (params.L > 0.0) cfg.L = params.L;
  if (params.max_iters > 0) cfg.max_iters = params.max_iters;
  cfg.gap_check_every = params.gap_check_every;
  const double mu = cfg.mu;
  const double grad_step = 1.0 / cfg.L;
  const double accum_step = cfg.sigma1 / cfg.L;

  Eigen::MatrixXd u_cur = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd grad_accum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd grad(n, n), basis(n, n), y_step(n, n), w_step(n, n);
  Eigen::VectorXd h;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;

  double best_gap = std::numeric_limits<double>::infinity();
  double best_dual_scaled = 0.0;
  double best_primal_scaled = 0.0;
  Eigen::MatrixXd best_x, best_u;

  const auto t0 = std::chrono::steady_clock::now();
  long k = 0;
  bool converged = false;
  for (; k < cfg.max_iters; ++k) {
    es.compute(as + u_cur);
    if (es.info() != Eigen::Success) {
      throw ParamError("eigendecomposition failed during solve");
    }
    const SoftmaxEval ev = softmax_weights(es.eigenvalues(), mu, h);
    basis.noalias() = es.eigenvectors() * h.cwiseSqrt().asDiagonal();
    grad.noalias() = basis * basis.transpose();

    if (k % cfg.gap_check_every == 0 || k + 1 == cfg.max_iters) {
      const double primal_scaled =
          (as.array() * grad.array()).sum() - grad.cwiseAbs().sum();
      const double gap = rho * ev.d_max - rho * primal_scaled;
      if (gap < best_gap) {
        best_gap = gap;
        best_dual_scaled = ev.d_max;
        best_primal_scaled = primal_scaled;
        best_x = grad;
        best_u = u_cur;
      }
      const double wall_ms =
          std::chrono::duration<double, std::milli>(
              std::chrono::steady_clock::now() - t0)
              .count();
      sol.trace.push_back({k, ev.f, gap, wall_ms});
      if (best_gap <= epsilon) {
        converged = true;
        ++k;
        break;
      }
    }

    // Gradient mapping onto the box.
    y_step = (u_cur - grad_step * grad).cwiseMax(-1.0).cwiseMin(1.0);
    // Estimate-sequence minimizer from the weighted gradient sum.
    grad_accum += (0.5 * static_cast<double>(k + 1)) * grad;
    w_step = (-accum_step * grad_accum).cwiseMax(-1.0).cwiseMin(1.0);
    const double kd = static_cast<double>(k);
    u_cur = (2.0 / (kd + 3.0)) * w_step + ((kd + 1.0) / (kd + 3.0)) * y_step;
    sol.max_u_inf = std::max(sol.max_u_inf, u_cur.cwiseAbs().maxCoeff());
  }

  sol.iterations = k;
  sol.converged = converged;
  sol.X = SymMatrix(best_x);
  sol.U = SymMatrix(rho * best_u);
  sol.dual_obj = rho * best_dual_scaled;
  sol.primal_obj = rho * best_primal_scaled;
  sol.gap = sol.dual_obj - sol.primal_obj;
  return sol;
}

KktReport check_kkt(const SymMatrix& a, const RelaxationSolution& sol,
                    double rho) {
  const Eigen::MatrixXd& x = sol.X.mat();
  const Eigen::MatrixXd& u = sol.U.mat();
  const Eigen::MatrixXd apu = a.mat() + u;
  const double lmax = lambda_max(SymMatrix(apu));

  KktReport r;
  r.stationarity = (apu * x - lmax * x).norm();
  r.complementarity = (u.cwiseProduct(x) + rho * x.cwiseAbs()).norm();
  r.trace_residual = std::abs(x.trace() - 1.0);
  r.box_violation = std::max(0.0, u.cwiseAbs().maxCoeff() - rho);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(x, Eigen::EigenvaluesOnly);
  r.x_min_eigenvalue = es.eigenvalues()[0];
  return r;
}

}  // namespace dspca
