#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spca {

/// Dense real symmetric matrix. Construction rejects asymmetric or
/// non-finite input, so every instance is exactly symmetric.
class SymMatrix {
 public:
  SymMatrix() = default;

  /// Throws ParameterError if `m` is not square or not exactly symmetric,
  /// InputDomainError if any entry is non-finite.
  explicit SymMatrix(Eigen::MatrixXd m);

  /// Averages `m` with its transpose. For results that are symmetric up to
  /// round-off (products like P D P^T).
  static SymMatrix symmetrized(const Eigen::MatrixXd& m);

  static SymMatrix zero(int p);
  static SymMatrix identity(int p);
  static SymMatrix diagonal(const Eigen::VectorXd& d);
  /// I_p * base + scale * v v^T.
  static SymMatrix rank_one_update(int p, double base, double scale, const Eigen::VectorXd& v);

  int dim() const { return static_cast<int>(m_.rows()); }
  double operator()(int i, int j) const { return m_(i, j); }
  const Eigen::MatrixXd& matrix() const { return m_; }

  /// Principal submatrix on the given (sorted) index set.
  SymMatrix principal(const std::vector<int>& idx) const;

  SymMatrix operator+(const SymMatrix& o) const;
  SymMatrix operator-(const SymMatrix& o) const;
  SymMatrix operator*(double s) const;

  bool operator==(const SymMatrix& o) const { return m_ == o.m_; }

 private:
  struct Trusted {};
  SymMatrix(Eigen::MatrixXd m, Trusted) : m_(std::move(m)) {}

  Eigen::MatrixXd m_;
};

/// Eigenvalues sorted non-increasing; column j of `vectors` pairs with
/// `values[j]`. Each column has its largest-magnitude entry positive.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Point of the unit simplex.
struct WeightVector {
  Eigen::VectorXd weights;
};

Spectrum eig_sym(const SymMatrix& a);

/// Unit eigenvector of the largest eigenvalue. When that eigenvalue is
/// repeated (gap below 1e-10 * max(1, |lambda_1|)) the result is the
/// eigenspace projection of the first standard basis vector not orthogonal to
/// the eigenspace, i.e. the unit vector of the eigenspace that is extremal in
/// the first coordinate possible, then signed by the usual convention.
Eigen::VectorXd leading_eigenvector(const SymMatrix& a);

/// Euclidean projection onto {w : w >= 0, sum w = 1} (sort and threshold).
WeightVector project_simplex(const Eigen::VectorXd& d);

/// Projection onto trace-one non-negative definite matrices.
SymMatrix project_spectahedron(const SymMatrix& a);

/// sign(a_ij) * min(|a_ij|, bound) entrywise.
SymMatrix clip_entrywise(const SymMatrix& a, double bound);

/// Entrywise l_q norm for q in {1, 2, inf}.
double entrywise_norm(const SymMatrix& a, double q);

/// Flips `v` so its largest-magnitude entry is positive (ties: lowest index).
void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v);

namespace detail {

// Hot-path variants used by the saddle-point solver. They work on raw Eigen
// storage and skip validation.
//
// The projector only needs the eigenpairs that survive the simplex threshold,
// usually a handful, so it asks LAPACK's MRRR driver (dsyevr) for the top r
// pairs and widens r until the threshold is certified.
class SpectahedronProjector {
 public:
  explicit SpectahedronProjector(int p);
  // Projects `a` (only the lower triangle is read) into `out`.
  void project(const Eigen::MatrixXd& a, Eigen::MatrixXd& out);
  double max_eigenvalue(const Eigen::MatrixXd& a);
  // Number of non-zero eigenvalues in the last projection.
  int last_rank() const { return last_rank_; }

 private:
  // Top r eigenpairs of a into values_ (ascending) and vectors_.
  void top_pairs(const Eigen::MatrixXd& a, int r, bool want_vectors);

  int p_;
  int last_rank_ = 1;
  Eigen::MatrixXd scratch_;
  Eigen::MatrixXd vectors_;
  Eigen::VectorXd values_;
  std::vector<int> isuppz_;
  Eigen::MatrixXd scaled_;
};

void simplex_project(const Eigen::VectorXd& d, Eigen::VectorXd& out);
void clip_inplace(Eigen::MatrixXd& a, double bound);

}  // namespace detail

}  // namespace spca
