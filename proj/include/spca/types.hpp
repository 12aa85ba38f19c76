#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spca {

/// Unit vector stored by its non-zero coordinates. The support is strictly
/// increasing and the largest-magnitude entry is positive.
class SparseUnitVector {
 public:
  SparseUnitVector() = default;

  /// Keeps the non-zero coordinates of `v`, rescales to unit norm and applies
  /// the sign convention. Throws DegenerateInputError for the zero vector.
  static SparseUnitVector from_dense(const Eigen::VectorXd& v);

  /// Equal weights 1/sqrt(|support|) on the given coordinates.
  static SparseUnitVector uniform_on(int dim, std::vector<int> support);

  int dim() const { return dim_; }
  const std::vector<int>& support() const { return support_; }
  const std::vector<double>& values() const { return values_; }
  int nnz() const { return static_cast<int>(support_.size()); }

  Eigen::VectorXd dense() const;

  bool operator==(const SparseUnitVector&) const = default;

 private:
  int dim_ = 0;
  std::vector<int> support_;
  std::vector<double> values_;
};

/// n x p sample matrix, one observation per row.
class DataMatrix {
 public:
  DataMatrix() = default;
  /// Throws InputDomainError on non-finite entries.
  explicit DataMatrix(Eigen::MatrixXd x);

  int rows() const { return static_cast<int>(x_.rows()); }
  int cols() const { return static_cast<int>(x_.cols()); }
  const Eigen::MatrixXd& matrix() const { return x_; }

  bool operator==(const DataMatrix& o) const { return x_ == o.x_; }

 private:
  Eigen::MatrixXd x_;
};

}  // namespace spca
