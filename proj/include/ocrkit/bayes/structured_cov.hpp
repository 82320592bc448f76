#pragma once

// Covariances of the form alpha * I + beta * J, J the all-ones matrix.
//
// The class is closed under inversion and addition, and a matrix-vector
// product costs O(n), so the fusion update runs at weight-vector dimension
// without forming n x n matrices.

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "ocrkit/error.hpp"

namespace ocrkit::bayes {

template <typename Scalar = double>
class StructuredCov {
 public:
  using VectorType = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using DenseType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  /// Throws unless the matrix is symmetric positive definite:
  /// alpha > 0 and alpha + n * beta > 0.
  StructuredCov(Eigen::Index dim, Scalar alpha, Scalar beta) : dim_(dim), alpha_(alpha), beta_(beta) {
    if (dim_ <= 0) throw InvalidArgument("structured covariance dimension must be positive");
    if (!std::isfinite(alpha_) || !std::isfinite(beta_))
      throw InvalidArgument("structured covariance coefficients must be finite");
    if (!(alpha_ > 0) || !(ones_eigenvalue() > 0))
      throw InvalidArgument("structured covariance is not positive definite (alpha=" + std::to_string(alpha_) +
                            ", alpha+n*beta=" + std::to_string(ones_eigenvalue()) + ")");
  }

  static StructuredCov identity(Eigen::Index dim) { return StructuredCov(dim, Scalar(1), Scalar(0)); }

  /// Unit diagonal r, constant off-diagonal c.
  static StructuredCov from_diagonal_offdiagonal(Eigen::Index dim, Scalar diagonal, Scalar off_diagonal) {
    return StructuredCov(dim, diagonal - off_diagonal, off_diagonal);
  }

  Eigen::Index dim() const { return dim_; }
  Scalar alpha() const { return alpha_; }
  Scalar beta() const { return beta_; }

  /// Eigenvalue on the orthogonal complement of the ones vector (multiplicity n-1).
  Scalar complement_eigenvalue() const { return alpha_; }
  /// Eigenvalue on the ones vector.
  Scalar ones_eigenvalue() const { return alpha_ + static_cast<Scalar>(dim_) * beta_; }

  DenseType dense() const {
    return alpha_ * DenseType::Identity(dim_, dim_) + beta_ * DenseType::Ones(dim_, dim_);
  }

 private:
  Eigen::Index dim_;
  Scalar alpha_;
  Scalar beta_;
};

/// alpha * v + beta * sum(v) * ones.
template <typename Scalar, typename Derived>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> matvec(const StructuredCov<Scalar>& m, const Eigen::MatrixBase<Derived>& v) {
  if (v.size() != m.dim())
    throw DimensionError("vector of length " + std::to_string(v.size()) + " against covariance of dim " +
                         std::to_string(m.dim()));
  const Scalar shift = m.beta() * v.sum();
  return (m.alpha() * v.array() + shift).matrix();
}

/// Sherman-Morrison: (alpha I + beta J)^-1 = (1/alpha) I - beta / (alpha (alpha + n beta)) J.
template <typename Scalar>
StructuredCov<Scalar> inverse(const StructuredCov<Scalar>& m) {
  const Scalar a = m.alpha();
  return StructuredCov<Scalar>(m.dim(), Scalar(1) / a, -m.beta() / (a * m.ones_eigenvalue()));
}

template <typename Scalar>
StructuredCov<Scalar> operator+(const StructuredCov<Scalar>& x, const StructuredCov<Scalar>& y) {
  if (x.dim() != y.dim())
    throw DimensionError("adding covariances of dims " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()));
  return StructuredCov<Scalar>(x.dim(), x.alpha() + y.alpha(), x.beta() + y.beta());
}

}  // namespace ocrkit::bayes
