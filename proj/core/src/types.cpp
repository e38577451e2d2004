#include "dspca/types.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace dspca {

SymMatrix::SymMatrix(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw ParamError("SymMatrix requires a non-empty square matrix, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  if (!m.allFinite()) {
    throw ParamError("SymMatrix rejects non-finite entries");
  }
  // (a+b)/2 evaluates identically for (i,j) and (j,i), so storage is
  // bitwise symmetric.
  m_ = 0.5 * (m + m.transpose());
}

SymMatrix SymMatrix::Zero(Eigen::Index n) {
  return SymMatrix(Eigen::MatrixXd::Zero(n, n));
}

SymMatrix SymMatrix::Identity(Eigen::Index n) {
  return SymMatrix(Eigen::MatrixXd::Identity(n, n));
}

namespace {

// Largest-magnitude entry positive; the first index within a relative
// tolerance of the max wins, so exact symmetry ties resolve the same way on
// every platform.
void fix_sign(Eigen::Ref<Eigen::VectorXd> v) {
  const double amax = v.cwiseAbs().maxCoeff();
  if (amax == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= amax * (1.0 - 1e-12)) {
      if (v[i] < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

EigDecomposition sym_eig(const SymMatrix& z) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z.mat());
  if (es.info() != Eigen::Success) {
    throw ParamError("eigendecomposition failed to converge");
  }
  const Eigen::Index n = z.n();
  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  // Eigen returns ascending order; flip to descending.
  for (Eigen::Index i = 0; i < n; ++i) {
    out.eigenvalues[i] = es.eigenvalues()[n - 1 - i];
    out.eigenvectors.col(i) = es.eigenvectors().col(n - 1 - i);
    fix_sign(out.eigenvectors.col(i));
  }
  return out;
}

double lambda_max(const SymMatrix& z) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(z.mat(),
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw ParamError("eigendecomposition failed to converge");
  }
  return es.eigenvalues()[z.n() - 1];
}

double l1_norm_all(const SymMatrix& x) {
  return x.mat().cwiseAbs().sum();
}

LoadingVector make_loading(const Eigen::VectorXd& x, double zero_threshold) {
  if (x.size() == 0) throw ParamError("empty loading vector");
  LoadingVector out;
  out.x = x;
  const double amax = out.x.cwiseAbs().maxCoeff();
  if (amax == 0.0) {
    out.cardinality = 0;
    return out;
  }
  const double cut = zero_threshold * amax;
  int card = 0;
  for (Eigen::Index i = 0; i < out.x.size(); ++i) {
    if (std::abs(out.x[i]) <= cut) {
      out.x[i] = 0.0;
    } else {
      ++card;
    }
  }
  fix_sign(out.x);
  out.x /= out.x.norm();
  out.cardinality = card;
  return out;
}

LoadingVector dominant_eigenvector(const SymMatrix& x, double zero_threshold) {
  const EigDecomposition eig = sym_eig(x);
  return make_loading(eig.eigenvectors.col(0), zero_threshold);
}

}  // namespace dspca
