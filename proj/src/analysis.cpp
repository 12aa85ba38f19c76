#include "spca/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spca/cliquesolver.hpp"
#include "spca/errors.hpp"
#include "spca/estimators.hpp"
#include "spca/parallel.hpp"
#include "spca/rng.hpp"

namespace spca {

namespace {

void require_unit(const Eigen::VectorXd& u) {
  if (std::abs(u.norm() - 1.0) > 1e-8) throw ParameterError("loss expects unit vectors");
}

void require_same_size(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  if (u.size() != v.size()) throw ParameterError("vectors differ in length");
}

template <class F>
void for_each_subset(int p, int k, F&& f) {
  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = i;
  for (;;) {
    f(subset);
    int i = k - 1;
    while (i >= 0 && subset[i] == p - k + i) --i;
    if (i < 0) return;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
}

}  // namespace

double loss(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  require_same_size(u, v);
  require_unit(u);
  require_unit(v);
  const double c = u.dot(v);
  return std::sqrt(std::max(0.0, 1.0 - c * c));
}

double loss_angle_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  require_same_size(u, v);
  require_unit(u);
  require_unit(v);
  return std::sin(std::acos(std::min(1.0, std::abs(u.dot(v)))));
}

double loss_frobenius_form(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
  require_same_size(u, v);
  require_unit(u);
  require_unit(v);
  return (u * u.transpose() - v * v.transpose()).norm() / std::sqrt(2.0);
}

SymMatrix empirical_covariance(const DataMatrix& x) {
  if (x.rows() < 1) throw ParameterError("empirical covariance needs at least one row");
  const int p = x.cols();
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  s.selfadjointView<Eigen::Lower>().rankUpdate(x.matrix().transpose(), 1.0 / x.rows());
  for (int j = 1; j < p; ++j)
    for (int i = 0; i < j; ++i) s(i, j) = s(j, i);
  return SymMatrix(std::move(s));
}

double restricted_deviation(const SymMatrix& sample, const SymMatrix& population, int ell,
                            double budget) {
  const int p = sample.dim();
  if (population.dim() != p) throw ParameterError("dimension mismatch");
  if (ell < 1 || ell > p) throw ParameterError("sparsity level must lie in [1, p]");
  if (binomial(p, ell) > budget)
    throw ResourceError("restricted deviation: C(p, l) supports exceed the enumeration budget; "
                        "use a smaller p or l");
  const SymMatrix d = sample - population;
  double sup = 0.0;
  for_each_subset(p, ell, [&](const std::vector<int>& s) {
    const Eigen::VectorXd ev = eig_sym(d.principal(s)).values;
    sup = std::max({sup, std::abs(ev[0]), std::abs(ev[ev.size() - 1])});
  });
  return sup;
}

double rcc_threshold(int p, int n, int ell, double c, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("delta must lie in (0, 1)");
  if (p < 1 || n < 1 || ell < 1 || !(c > 0.0)) throw ParameterError("rcc_threshold: bad arguments");
  const double r = ell * std::log(p / delta) / n;
  return c * std::max(std::sqrt(r), r);
}

double rcc_constant(RccKind kind, double scale, int p) {
  if (!(scale > 0.0)) throw ParameterError("rcc_constant: scale must be positive");
  if (p < 2) throw ParameterError("rcc_constant: p must be at least 2");
  const double factor = 1.0 + 9.0 / std::log(static_cast<double>(p));
  return (kind == RccKind::subgaussian ? 16.0 : 8.0) * scale * factor;
}

int model_dim(const ModelSpec& model) {
  return std::visit(
      [](const auto& m) -> int {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SpikedModelSpec>)
          return m.p;
        else
          return m.p();
      },
      model);
}

SymMatrix population_covariance(const ModelSpec& model) {
  return std::visit(
      [](const auto& m) -> SymMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SpikedModelSpec>)
          return m.covariance();
        else
          return gv_covariance(m);
      },
      model);
}

DataMatrix sample_model(const ModelSpec& model, int n, std::uint64_t seed) {
  return std::visit(
      [&](const auto& m) -> DataMatrix {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, SpikedModelSpec>)
          return sample_spiked(m, n, seed);
        else
          return sample_graph_vector(m, n, seed);
      },
      model);
}

void RccAuditSpec::validate() const {
  const int p = model_dim(model);
  if (n < 1) throw ParameterError("audit: n must be positive");
  if (ell < 1 || ell > p) throw ParameterError("audit: l must lie in [1, p]");
  if (!(c > 0.0)) throw ParameterError("audit: C must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw ParameterError("audit: delta must lie in (0, 1)");
  if (trials < 1) throw ParameterError("audit: trials must be positive");
}

std::vector<RccReport> rcc_audit_grid(const RccAuditSpec& spec, const std::vector<double>& deltas) {
  spec.validate();
  if (deltas.empty()) throw ParameterError("audit: empty delta grid");
  const int p = model_dim(spec.model);
  for (double d : deltas) rcc_threshold(p, spec.n, spec.ell, spec.c, d);

  const SymMatrix sigma = population_covariance(spec.model);
  std::vector<double> deviations(static_cast<std::size_t>(spec.trials));
  parallel_for(spec.trials, [&](int t) {
    const DataMatrix x = sample_model(spec.model, spec.n, derive_seed(spec.seed, t));
    deviations[t] = restricted_deviation(empirical_covariance(x), sigma, spec.ell);
  });

  std::vector<RccReport> reports;
  for (double d : deltas) {
    RccReport r;
    r.trials = spec.trials;
    r.threshold_used = rcc_threshold(p, spec.n, spec.ell, spec.c, d);
    r.violations = static_cast<int>(std::count_if(
        deviations.begin(), deviations.end(), [&](double v) { return v >= r.threshold_used; }));
    r.empirical_rate = static_cast<double>(r.violations) / r.trials;
    r.deviations = deviations;
    reports.push_back(std::move(r));
  }
  return reports;
}

RccReport rcc_audit(const RccAuditSpec& spec) { return rcc_audit_grid(spec, {spec.delta}).front(); }

double audit_tolerance(double delta, int trials) {
  return 3.0 * std::sqrt(delta * (1.0 - delta) / trials);
}

InequalityCheck check_polarisation(const DataMatrix& x, const SymMatrix& sigma) {
  if (x.cols() < 2) throw ParameterError("polarisation check needs p >= 2");
  const SymMatrix s = empirical_covariance(x);
  InequalityCheck c;
  c.lhs = entrywise_norm(s - sigma, std::numeric_limits<double>::infinity());
  c.rhs = 2.0 * restricted_deviation(s, sigma, 2);
  c.holds = c.lhs <= c.rhs * (1.0 + 1e-12) + 1e-14;
  return c;
}

InequalityCheck check_support_bound(const SparseUnitVector& v, const Eigen::VectorXd& v_hat) {
  if (v_hat.size() != v.dim()) throw ParameterError("vectors differ in length");
  const Eigen::VectorXd vd = v.dense();
  const std::vector<int> chosen = top_k_support(v_hat, v.nnz());
  InequalityCheck c;
  const double l = loss(v_hat, vd);
  c.lhs = l * l;
  double missed = 0.0;
  for (std::size_t i = 0; i < v.support().size(); ++i)
    if (!std::binary_search(chosen.begin(), chosen.end(), v.support()[i]))
      missed += v.values()[i] * v.values()[i];
  c.rhs = 0.5 * missed;
  c.holds = c.lhs >= c.rhs - 1e-12;
  return c;
}

}  // namespace spca
