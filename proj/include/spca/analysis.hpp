#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "spca/matcore.hpp"
#include "spca/models.hpp"
#include "spca/types.hpp"

namespace spca {

/// Sine of the acute angle between unit vectors: sqrt(1 - (u^T v)^2).
/// Throws ParameterError if either argument is off the unit sphere by > 1e-8.
double loss(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// The same loss written as sin(acos|u^T v|).
double loss_angle_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// The same loss written as ||u u^T - v v^T||_2 / sqrt(2).
double loss_frobenius_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

/// n^{-1} X^T X.
SymMatrix empirical_covariance(const DataMatrix& x);

/// sup over l-sparse unit u of |u^T (A - B) u|, computed exactly as the largest
/// spectral norm of an l x l principal submatrix of A - B. Throws ResourceError
/// when C(p, l) exceeds `budget`.
double restricted_deviation(const SymMatrix& sample, const SymMatrix& population, int ell,
                            double budget = 2e6);

/// C max(sqrt(l log(p/delta) / n), l log(p/delta) / n).
double rcc_threshold(int p, int n, int ell, double c, double delta);

enum class RccKind { subgaussian, gaussian };

/// 16 sigma2 (1 + 9/log p) for subgaussian, 8 lambda_1 (1 + 9/log p) for
/// Gaussian distributions.
double rcc_constant(RccKind kind, double scale, int p);

using ModelSpec = std::variant<SpikedModelSpec, GraphVectorSpec>;

int model_dim(const ModelSpec& model);
SymMatrix population_covariance(const ModelSpec& model);
DataMatrix sample_model(const ModelSpec& model, int n, std::uint64_t seed);

struct RccAuditSpec {
  ModelSpec model;
  int n = 1;
  int ell = 1;
  double c = 1.0;
  double delta = 0.1;
  int trials = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

struct RccReport {
  int violations = 0;
  int trials = 0;
  double threshold_used = 0.0;
  double empirical_rate = 0.0;
  std::vector<double> deviations;  // per trial, in trial order
};

/// Monte Carlo check of the restricted covariance concentration event. Trial t
/// samples with derive_seed(seed, t).
RccReport rcc_audit(const RccAuditSpec& spec);

/// One report per delta, sharing the same sampled trials.
std::vector<RccReport> rcc_audit_grid(const RccAuditSpec& spec, const std::vector<double>& deltas);

/// Slack for comparing an empirical violation rate with delta: three binomial
/// standard errors.
double audit_tolerance(double delta, int trials);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// ||S - Sigma||_inf against 2 sup_{u in B0(2)} |u^T (S - Sigma) u|.
InequalityCheck check_polarisation(const DataMatrix& x, const SymMatrix& sigma);

/// L(v_hat, v)^2 against half the mass of v outside the top-|supp v| support of
/// v_hat.
InequalityCheck check_support_bound(const SparseUnitVector& v, const Eigen::VectorXd& v_hat);

}  // namespace spca
