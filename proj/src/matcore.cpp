#include "spca/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "spca/errors.hpp"

#include <lapacke.h>

namespace spca {

namespace {

void require_finite(const Eigen::MatrixXd& m) {
  if (!m.allFinite()) throw InputDomainError("matrix has non-finite entries");
}

void copy_lower_to_upper(Eigen::MatrixXd& m) {
  const Eigen::Index p = m.rows();
  for (Eigen::Index j = 1; j < p; ++j)
    for (Eigen::Index i = 0; i < j; ++i) m(i, j) = m(j, i);
}

}  // namespace

SymMatrix::SymMatrix(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw ParameterError("symmetric matrix must be square with positive dimension");
  require_finite(m_);
  if (m_ != m_.transpose()) throw ParameterError("matrix is not symmetric");
}

SymMatrix SymMatrix::symmetrized(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw ParameterError("symmetric matrix must be square with positive dimension");
  require_finite(m);
  Eigen::MatrixXd s = 0.5 * (m + m.transpose());
  copy_lower_to_upper(s);
  return SymMatrix(std::move(s), Trusted{});
}

SymMatrix SymMatrix::zero(int p) { return SymMatrix(Eigen::MatrixXd::Zero(p, p)); }

SymMatrix SymMatrix::identity(int p) { return SymMatrix(Eigen::MatrixXd::Identity(p, p)); }

SymMatrix SymMatrix::diagonal(const Eigen::VectorXd& d) {
  return SymMatrix(Eigen::MatrixXd(d.asDiagonal()));
}

SymMatrix SymMatrix::rank_one_update(int p, double base, double scale,
                                     const Eigen::VectorXd& v) {
  if (v.size() != p) throw ParameterError("rank-one update: vector length differs from p");
  Eigen::MatrixXd m = base * Eigen::MatrixXd::Identity(p, p);
  m.selfadjointView<Eigen::Lower>().rankUpdate(v, scale);
  copy_lower_to_upper(m);
  return SymMatrix(std::move(m));
}

SymMatrix SymMatrix::principal(const std::vector<int>& idx) const {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd sub(k, k);
  for (Eigen::Index r = 0; r < k; ++r)
    for (Eigen::Index c = 0; c < k; ++c) sub(r, c) = m_(idx[r], idx[c]);
  return SymMatrix(std::move(sub), Trusted{});
}

SymMatrix SymMatrix::operator+(const SymMatrix& o) const {
  if (dim() != o.dim()) throw ParameterError("dimension mismatch");
  return SymMatrix(m_ + o.m_, Trusted{});
}

SymMatrix SymMatrix::operator-(const SymMatrix& o) const {
  if (dim() != o.dim()) throw ParameterError("dimension mismatch");
  return SymMatrix(m_ - o.m_, Trusted{});
}

SymMatrix SymMatrix::operator*(double s) const {
  if (!std::isfinite(s)) throw InputDomainError("non-finite scale factor");
  return SymMatrix(m_ * s, Trusted{});
}

void apply_sign_convention(Eigen::Ref<Eigen::VectorXd> v) {
  if (v.size() == 0) return;
  const double maxabs = v.cwiseAbs().maxCoeff();
  if (maxabs == 0.0) return;
  // Entries within round-off of the maximum count as tied.
  const double cutoff = maxabs * (1.0 - 1e-10);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= cutoff) {
      if (v[i] < 0) v = -v;
      return;
    }
  }
}

Spectrum eig_sym(const SymMatrix& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a.matrix(), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw NumericalFailure("eigendecomposition failed", 0);
  Spectrum s;
  // Eigen sorts ascending.
  s.values = solver.eigenvalues().reverse();
  s.vectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index j = 0; j < s.vectors.cols(); ++j) apply_sign_convention(s.vectors.col(j));
  return s;
}

Eigen::VectorXd leading_eigenvector(const SymMatrix& a) {
  const Spectrum s = eig_sym(a);
  const double top = s.values[0];
  const double tol = 1e-10 * std::max(1.0, std::abs(top));
  Eigen::Index mult = 1;
  while (mult < s.values.size() && top - s.values[mult] < tol) ++mult;
  if (mult == 1) return s.vectors.col(0);

  // The eigenspace basis is arbitrary; its projector is not. The unit vector
  // maximising the first coordinate with a non-trivial projection is Q Q^T e_j.
  const auto q = s.vectors.leftCols(mult);
  for (Eigen::Index j = 0; j < q.rows(); ++j) {
    const double mass = q.row(j).squaredNorm();
    if (mass > 1e-8) {
      Eigen::VectorXd v = q * q.row(j).transpose();
      v.normalize();
      apply_sign_convention(v);
      return v;
    }
  }
  return s.vectors.col(0);
}

WeightVector project_simplex(const Eigen::VectorXd& d) {
  if (d.size() == 0) throw ParameterError("cannot project an empty vector");
  if (!d.allFinite()) throw InputDomainError("non-finite input to simplex projection");
  WeightVector w;
  detail::simplex_project(d, w.weights);
  return w;
}

SymMatrix project_spectahedron(const SymMatrix& a) {
  detail::SpectahedronProjector proj(a.dim());
  Eigen::MatrixXd out(a.dim(), a.dim());
  proj.project(a.matrix(), out);
  return SymMatrix(std::move(out));
}

SymMatrix clip_entrywise(const SymMatrix& a, double bound) {
  if (!(bound > 0.0)) throw ParameterError("clip bound must be positive");
  Eigen::MatrixXd m = a.matrix();
  detail::clip_inplace(m, bound);
  return SymMatrix(std::move(m));
}

double entrywise_norm(const SymMatrix& a, double q) {
  const auto& m = a.matrix();
  if (q == 1.0) return m.cwiseAbs().sum();
  if (q == 2.0) return m.norm();
  if (std::isinf(q) && q > 0) return m.cwiseAbs().maxCoeff();
  throw ParameterError("entrywise norm supports q in {1, 2, inf}");
}

namespace detail {

SpectahedronProjector::SpectahedronProjector(int p)
    : p_(p), scratch_(p, p), vectors_(p, p), values_(p), isuppz_(2 * static_cast<std::size_t>(p)) {}

void SpectahedronProjector::top_pairs(const Eigen::MatrixXd& a, int r, bool want_vectors) {
  scratch_ = a;
  lapack_int found = 0;
  const lapack_int info = LAPACKE_dsyevr(
      LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', 'L', p_, scratch_.data(), p_, 0.0, 0.0,
      p_ - r + 1, p_, LAPACKE_dlamch('S'), &found, values_.data(), vectors_.data(), p_,
      isuppz_.data());
  if (info == 0 && found == r) return;

  // dsyevr occasionally reports an internal failure on tightly clustered
  // spectra; the full tridiagonal QR solver does not.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(
      a, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (full.info() != Eigen::Success) throw NumericalFailure("eigendecomposition failed", 0);
  values_.head(r) = full.eigenvalues().tail(r);
  if (want_vectors) vectors_.leftCols(r) = full.eigenvectors().rightCols(r);
}

void SpectahedronProjector::project(const Eigen::MatrixXd& a, Eigen::MatrixXd& out) {
  int r = std::min(p_, std::max(2, last_rank_ + 1));
  int active = 0;
  double tau = 0.0;
  for (;;) {
    top_pairs(a, r, true);
    // values_[r-1] is the largest. Find the first sorted position whose
    // threshold test fails; everything before it is active.
    double cumsum = 0.0;
    active = -1;
    for (int j = 0; j < r; ++j) {
      const double d = values_[r - 1 - j];
      const double t = (cumsum + d - 1.0) / (j + 1);
      if (d - t <= 0.0) {
        active = j;
        break;
      }
      cumsum += d;
      tau = t;
    }
    if (active < 0 && r < p_) {
      r = std::min(p_, 2 * r);
      continue;
    }
    if (active < 0) active = r;
    break;
  }
  last_rank_ = active;
  scaled_.resize(p_, active);
  for (int j = 0; j < active; ++j)
    scaled_.col(j) = std::sqrt(values_[r - 1 - j] - tau) * vectors_.col(r - 1 - j);
  out.setZero(p_, p_);
  out.selfadjointView<Eigen::Lower>().rankUpdate(scaled_);
  copy_lower_to_upper(out);
}

double SpectahedronProjector::max_eigenvalue(const Eigen::MatrixXd& a) {
  top_pairs(a, 1, false);
  return values_[0];
}

void simplex_project(const Eigen::VectorXd& d, Eigen::VectorXd& out) {
  const Eigen::Index p = d.size();
  std::vector<double> sorted(d.data(), d.data() + p);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0;
  double tau = 0.0;
  for (Eigen::Index m = 0; m < p; ++m) {
    cumsum += sorted[m];
    const double t = (cumsum - 1.0) / static_cast<double>(m + 1);
    if (sorted[m] - t > 0.0) tau = t;
  }
  out = (d.array() - tau).cwiseMax(0.0).matrix();
}

void clip_inplace(Eigen::MatrixXd& a, double bound) {
  a = a.cwiseMax(-bound).cwiseMin(bound);
}

}  // namespace detail

}  // namespace spca
