#include "spca/cliquesolver.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numeric>

#include "spca/errors.hpp"

namespace spca {

void CliqueSolverConfig::validate() const {
  if (L < 2) throw ParameterError("clique solver: L must be at least 2");
  if (!(scaling > 0.0)) throw ParameterError("clique solver: scaling must be positive");
  if (!(threshold_fraction > 0.0 && threshold_fraction <= 1.0))
    throw ParameterError("clique solver: threshold_fraction must lie in (0, 1]");
  if (max_iterations < 1) throw ParameterError("clique solver: max_iterations must be positive");
  if (estimator) estimator->validate();
}

int default_subsampling(int m) {
  if (m < 2) throw ParameterError("default subsampling needs m >= 2");
  return static_cast<int>(std::ceil(std::log(static_cast<double>(m))));
}

int neighbor_count(const Graph& graph, int u, std::span<const int> w) {
  const int m = graph.vertex_count();
  if (u < 0 || u >= m) throw ParameterError("neighbor_count: vertex out of range");
  int count = 0;
  for (int x : w) {
    if (x < 0 || x >= m) throw ParameterError("neighbor_count: vertex out of range");
    if (x == u)
      ++count;
    else if (graph.adjacent(u, x))
      ++count;
  }
  return count;
}

std::vector<int> top_k_support(const Eigen::VectorXd& v, int k) {
  const int p = static_cast<int>(v.size());
  if (k < 1 || k > p) throw ParameterError("top_k_support: k must lie in [1, p]");
  std::vector<int> idx(static_cast<std::size_t>(p));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return std::abs(v[a]) > std::abs(v[b]); });
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

RecoveryReport solve_planted_clique(const Graph& graph, int kappa, const CliqueSolverConfig& cfg,
                                    std::uint64_t seed) {
  cfg.validate();
  const int m = graph.vertex_count();
  if (kappa < cfg.L) throw ParameterError("clique solver: kappa must be at least L");

  RecoveryReport report;
  report.n = static_cast<int>((9L * m) / (10L * cfg.L));
  report.p = report.n;
  report.k = kappa / cfg.L;
  if (report.n < 2) throw ParameterError("clique solver: graph too small for this L");
  if (report.n + report.p > m) throw ParameterError("clique solver: n + p exceeds m");

  const BipartiteSample sample = bottom_left_transform(graph, report.n, report.p, seed);
  const DataMatrix scaled(sample.x.matrix() / std::sqrt(cfg.scaling));

  SdpConfig tuning;
  if (cfg.estimator) {
    tuning = *cfg.estimator;
  } else {
    tuning = default_tuning(report.n, report.p);
    tuning.max_iterations = std::min(tuning.max_iterations, cfg.max_iterations);
  }
  const SdpResult est = sdp_estimate(scaled, tuning);
  report.iterations = est.iterations_run;
  report.final_gap = est.final_gap;

  // k can exceed p when the clique covers most of the graph; every column is
  // then selected.
  const std::vector<int> selected = top_k_support(est.v_hat, std::min(report.k, report.p));
  std::vector<int> columns;
  columns.reserve(selected.size());
  for (int j : selected) columns.push_back(sample.w[j]);

  // Integer threshold; the offset keeps products such as 0.7 * 10, which
  // evaluates to 7.000000000000001, at 7.
  const int threshold =
      static_cast<int>(std::ceil(cfg.threshold_fraction * report.k - 1e-9));
  for (int u = 0; u < m; ++u)
    if (neighbor_count(graph, u, columns) >= threshold) report.recovered.push_back(u);
  return report;
}

RecoveryReport solve_planted_clique(const PlantedInstance& inst, const CliqueSolverConfig& cfg,
                                    std::uint64_t seed) {
  RecoveryReport report =
      solve_planted_clique(inst.graph, static_cast<int>(inst.clique.size()), cfg, seed);
  std::vector<int> both;
  std::set_intersection(report.recovered.begin(), report.recovered.end(), inst.clique.begin(),
                        inst.clique.end(), std::back_inserter(both));
  const std::size_t uni = report.recovered.size() + inst.clique.size() - both.size();
  report.exact_match = report.recovered == inst.clique;
  report.jaccard = uni == 0 ? 1.0 : static_cast<double>(both.size()) / static_cast<double>(uni);
  return report;
}

}  // namespace spca
