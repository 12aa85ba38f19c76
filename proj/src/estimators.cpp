#include "spca/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>

#include "spca/analysis.hpp"
#include "spca/cliquesolver.hpp"
#include "spca/errors.hpp"

namespace spca {

SparseUnitVector SparseUnitVector::from_dense(const Eigen::VectorXd& v) {
  if (!v.allFinite()) throw InputDomainError("vector has non-finite entries");
  const double norm = v.norm();
  if (norm == 0.0) throw DegenerateInputError("cannot normalise the zero vector");
  Eigen::VectorXd u = v / norm;
  apply_sign_convention(u);
  SparseUnitVector out;
  out.dim_ = static_cast<int>(v.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (u[i] != 0.0) {
      out.support_.push_back(static_cast<int>(i));
      out.values_.push_back(u[i]);
    }
  }
  return out;
}

SparseUnitVector SparseUnitVector::uniform_on(int dim, std::vector<int> support) {
  std::sort(support.begin(), support.end());
  if (support.empty() || support.front() < 0 || support.back() >= dim ||
      std::adjacent_find(support.begin(), support.end()) != support.end())
    throw ParameterError("uniform_on: support must be distinct indices in [0, dim)");
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
  for (int j : support) v[j] = 1.0;
  return from_dense(v);
}

Eigen::VectorXd SparseUnitVector::dense() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_);
  for (std::size_t i = 0; i < support_.size(); ++i) v[support_[i]] = values_[i];
  return v;
}

void SdpConfig::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw ParameterError("lambda must be positive");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw ParameterError("epsilon must be positive");
  if (max_iterations < 1) throw ParameterError("max_iterations must be at least 1");
  if (gap_check_period < 1) throw ParameterError("gap_check_period must be at least 1");
}

long mirror_prox_iteration_bound(double lambda, int p, double epsilon) {
  const double pp = static_cast<double>(p);
  const double n = std::ceil((lambda * lambda * pp * pp + 1.0) / (std::sqrt(2.0) * epsilon));
  if (n >= static_cast<double>(std::numeric_limits<long>::max() / 2))
    return std::numeric_limits<long>::max() / 2;
  return static_cast<long>(n);
}

double penalized_objective(const SymMatrix& sigma, const SymMatrix& m, double lambda) {
  if (sigma.dim() != m.dim()) throw ParameterError("dimension mismatch");
  return sigma.matrix().cwiseProduct(m.matrix()).sum() - lambda * m.matrix().cwiseAbs().sum();
}

namespace {

double objective_raw(const Eigen::MatrixXd& sigma, const Eigen::MatrixXd& m, double lambda) {
  return sigma.cwiseProduct(m).sum() - lambda * m.cwiseAbs().sum();
}

}  // namespace

SdpResult mirror_prox_sdp(const SymMatrix& sigma, const SdpConfig& cfg) {
  cfg.validate();
  const int p = sigma.dim();
  const double step = 1.0 / std::sqrt(2.0);
  const double lambda = cfg.lambda;
  const long bound = mirror_prox_iteration_bound(lambda, p, cfg.epsilon);
  const long limit = std::min(bound, cfg.max_iterations);

  const Eigen::MatrixXd& s = sigma.matrix();
  const Eigen::MatrixXd s_step = step * s;
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(p, p) / p;
  Eigen::MatrixXd u = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd m_avg = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd u_avg = Eigen::MatrixXd::Zero(p, p);
  Eigen::MatrixXd m_prime(p, p), u_prime(p, p), m_next(p, p), work(p, p);
  detail::SpectahedronProjector proj(p);

  SdpResult result;
  long t = 0;
  try {
    for (t = 1; t <= limit; ++t) {
      u_prime = u - step * m;
      detail::clip_inplace(u_prime, lambda);
      work = m + s_step + step * u;
      proj.project(work, m_prime);

      u -= step * m_prime;
      detail::clip_inplace(u, lambda);
      work = m + s_step + step * u_prime;
      proj.project(work, m_next);
      m.swap(m_next);

      if (!m.allFinite() || !m_prime.allFinite())
        throw NumericalFailure("non-finite iterate in mirror-prox", t);

      const double w = 1.0 / static_cast<double>(t);
      m_avg += w * (m_prime - m_avg);
      u_avg += w * (u_prime - u_avg);

      if (t % cfg.gap_check_period == 0 || t == limit) {
        work = u_avg + s;
        const double gap = proj.max_eigenvalue(work) - objective_raw(s, m_avg, lambda);
        if (!std::isfinite(gap)) throw NumericalFailure("non-finite primal-dual gap", t);
        result.final_gap = gap;
        if (gap <= cfg.epsilon) break;
      }
    }
  } catch (const NumericalFailure& e) {
    if (e.iteration() == t) throw;
    throw NumericalFailure("eigendecomposition failed in mirror-prox", t);
  }
  result.iterations_run = std::min(t, limit);
  result.objective = objective_raw(s, m_avg, lambda);
  result.m_hat = SymMatrix(std::move(m_avg));
  result.v_hat = leading_eigenvector(result.m_hat);
  return result;
}

double primal_dual_gap(const SymMatrix& sigma, const SymMatrix& m_bar, const SymMatrix& u_bar,
                       double lambda) {
  const int p = sigma.dim();
  if (m_bar.dim() != p || u_bar.dim() != p) throw ParameterError("dimension mismatch");
  if (!(lambda >= 0.0)) throw ParameterError("lambda must be non-negative");
  constexpr double tol = 1e-8;
  if (std::abs(m_bar.matrix().trace() - 1.0) > tol)
    throw ParameterError("primal point does not have unit trace");
  if (eig_sym(m_bar).values[p - 1] < -tol)
    throw ParameterError("primal point is not non-negative definite");
  if (entrywise_norm(u_bar, std::numeric_limits<double>::infinity()) > lambda + tol)
    throw ParameterError("dual point violates the entrywise bound");
  const double dual = eig_sym(u_bar + sigma).values[0];
  return dual - objective_raw(sigma.matrix(), m_bar.matrix(), lambda);
}

SdpResult sdp_estimate(const DataMatrix& x, const SdpConfig& cfg) {
  if (x.rows() < 1) throw ParameterError("need at least one observation");
  if (x.cols() < 2) throw ParameterError("need at least two variables");
  return mirror_prox_sdp(empirical_covariance(x), cfg);
}

SdpConfig default_tuning(int n, int p) {
  if (n < 1 || p < 2) throw ParameterError("default tuning needs n >= 1 and p >= 2");
  const double logp = std::log(static_cast<double>(p));
  SdpConfig cfg;
  cfg.lambda = 4.0 * std::sqrt(logp / n);
  cfg.epsilon = logp / (4.0 * n);
  cfg.max_iterations = mirror_prox_iteration_bound(cfg.lambda, p, cfg.epsilon);
  cfg.gap_check_period = std::max(1L, (cfg.max_iterations + 999) / 1000);
  return cfg;
}

SparseUnitVector truncate_renormalize(const Eigen::VectorXd& v, int k) {
  if (std::abs(v.norm() - 1.0) > 1e-8) throw ParameterError("truncation expects a unit vector");
  const auto keep = top_k_support(v, k);
  Eigen::VectorXd kept = Eigen::VectorXd::Zero(v.size());
  for (int j : keep) kept[j] = v[j];
  if (kept.norm() == 0.0) throw DegenerateInputError("retained coordinates are all zero");
  return SparseUnitVector::from_dense(kept);
}

double binomial(int p, int k) {
  if (k < 0 || k > p) return 0.0;
  k = std::min(k, p - k);
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (p - k + i) / i;
  return std::round(c);
}

SparsePc exhaustive_sparse_pc(const SymMatrix& a, int k) {
  const int p = a.dim();
  if (k < 1 || k > p) throw ParameterError("sparsity k must lie in [1, p]");
  if (binomial(p, k) > 1e6)
    std::clog << "spca: exhaustive search over " << binomial(p, k) << " supports\n";

  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = i;

  double best = -std::numeric_limits<double>::infinity();
  std::vector<int> best_subset;
  for (;;) {
    const SymMatrix sub = a.principal(subset);
    const double value = eig_sym(sub).values[0];
    const double tol = 1e-12 * std::max(std::abs(best), std::abs(value));
    if (best_subset.empty() || value - best > tol) {
      best = value;
      best_subset = subset;
    }
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && subset[i] == p - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  const Eigen::VectorXd local = leading_eigenvector(a.principal(best_subset));
  Eigen::VectorXd full = Eigen::VectorXd::Zero(p);
  for (int i = 0; i < k; ++i) full[best_subset[i]] = local[i];
  SparsePc out{SparseUnitVector::from_dense(full), best};
  return out;
}

}  // namespace spca
