#pragma once

#include <Eigen/Dense>

#include "dspca/errors.hpp"

namespace dspca {

/// Fraction of the largest loading magnitude below which an entry counts as a
/// numerical zero when measuring cardinality.
inline constexpr double kDefaultZeroThreshold = 1e-4;

/// Dense symmetric n x n matrix. Construction symmetrizes as (M + M^T)/2, so
/// entries(i,j) == entries(j,i) holds exactly for every instance.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Symmetrizes the input. Throws ParamError if m is not square, empty, or
  /// contains non-finite values.
  explicit SymMatrix(const Eigen::MatrixXd& m);

  static SymMatrix Zero(Eigen::Index n);
  static SymMatrix Identity(Eigen::Index n);

  Eigen::Index n() const { return m_.rows(); }
  const Eigen::MatrixXd& mat() const { return m_; }
  double operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

  double trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }
  double max_abs() const { return m_.cwiseAbs().maxCoeff(); }

 private:
  Eigen::MatrixXd m_;
};

/// Eigen decomposition with eigenvalues sorted in descending order and a
/// deterministic per-column sign convention (largest-magnitude entry made
/// positive, first index winning near-ties).
struct EigDecomposition {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns, aligned with values
};

/// Unit-norm loading vector with entries below the zero threshold clamped to
/// exact zero; cardinality counts the surviving nonzeros.
struct LoadingVector {
  Eigen::VectorXd x;
  int cardinality = 0;
};

/// Full symmetric eigendecomposition. Throws ParamError on non-finite input.
EigDecomposition sym_eig(const SymMatrix& z);

/// Largest eigenvalue of z.
double lambda_max(const SymMatrix& z);

/// Sum of absolute values of all entries, 1^T |X| 1.
double l1_norm_all(const SymMatrix& x);

/// Clamp entries with |x_i| <= zero_threshold * ||x||_inf to exact zero, fix
/// the sign so the largest-magnitude entry is positive, renormalize to unit
/// norm, and count the nonzeros.
LoadingVector make_loading(const Eigen::VectorXd& x,
                           double zero_threshold = kDefaultZeroThreshold);

/// Unit eigenvector of the largest eigenvalue of x, cleaned by make_loading.
LoadingVector dominant_eigenvector(const SymMatrix& x,
                                   double zero_threshold = kDefaultZeroThreshold);

}  // namespace dspca
