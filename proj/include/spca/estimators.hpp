#pragma once

#include <cstdint>
#include <optional>

#include "spca/matcore.hpp"
#include "spca/types.hpp"

namespace spca {

/// Tuning of the l1-penalised semidefinite relaxation
///   maximise f(M) = tr(S M) - lambda ||M||_1 over trace-one PSD matrices.
struct SdpConfig {
  double lambda = 0.0;
  double epsilon = 0.0;
  long max_iterations = 1;
  long gap_check_period = 1;

  void validate() const;
};

struct SdpResult {
  SymMatrix m_hat;
  Eigen::VectorXd v_hat;
  long iterations_run = 0;
  std::optional<double> final_gap;
  double objective = 0.0;
};

/// Worst-case iteration count ceil((lambda^2 p^2 + 1) / (sqrt(2) epsilon)) after
/// which the averaged mirror-prox iterate is an epsilon-maximiser.
long mirror_prox_iteration_bound(double lambda, int p, double epsilon);

/// f(M) = tr(S M) - lambda ||M||_1.
double penalized_objective(const SymMatrix& sigma, const SymMatrix& m, double lambda);

/// Mirror-prox (extragradient) solve of the saddle problem
///   max_{M in M1} min_{|U|_inf <= lambda} tr((S + U) M)
/// started from M = I/p, U = 0 with step 1/sqrt(2). Returns the running average
/// of the extrapolated iterates M'_t. Stops early once the primal-dual gap of
/// the averaged pair drops to epsilon (checked every gap_check_period steps)
/// and otherwise after min(max_iterations, N) steps. The gap is always
/// evaluated at the final step.
SdpResult mirror_prox_sdp(const SymMatrix& sigma, const SdpConfig& cfg);

/// lambda_1(U + S) - {tr(M S) - lambda ||M||_1}; non-negative for feasible
/// (M, U) by weak duality.
double primal_dual_gap(const SymMatrix& sigma, const SymMatrix& m_bar, const SymMatrix& u_bar,
                       double lambda);

/// Sample covariance, mirror-prox solve, then the leading eigenvector of the
/// solution (dense; not necessarily sparse).
SdpResult sdp_estimate(const DataMatrix& x, const SdpConfig& cfg);

/// lambda = 4 sqrt(log p / n), epsilon = log p / (4 n); iteration cap N and gap
/// checks every max(1, ceil(N / 1000)) steps.
SdpConfig default_tuning(int n, int p);

/// Keeps the k largest coordinates in absolute value (ties toward the
/// lexicographically smallest index set) and renormalises.
SparseUnitVector truncate_renormalize(const Eigen::VectorXd& v, int k);

struct SparsePc {
  SparseUnitVector vector;
  double value = 0.0;  // u^T A u at the returned vector
};

/// Exhaustive k-sparse leading eigenvector: top eigenpair of every k x k
/// principal submatrix, best value wins, value ties (relative 1e-12) go to the
/// lexicographically smallest subset.
SparsePc exhaustive_sparse_pc(const SymMatrix& a, int k);

/// C(p, k) as a double (saturates gracefully for large arguments).
double binomial(int p, int k);

}  // namespace spca
