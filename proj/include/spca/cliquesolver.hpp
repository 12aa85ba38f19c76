#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spca/estimators.hpp"
#include "spca/models.hpp"

namespace spca {

struct CliqueSolverConfig {
  int L = 2;                          // subsampling factor
  double scaling = 750.0;             // data are divided by sqrt(scaling)
  double threshold_fraction = 0.75;   // neighbour-count threshold as a fraction of k
  long max_iterations = 3000;         // estimator cap when `estimator` is unset
  std::optional<SdpConfig> estimator; // full override of the estimator tuning

  void validate() const;
};

/// ceil(log m), natural log.
int default_subsampling(int m);

struct RecoveryReport {
  std::vector<int> recovered;         // sorted
  std::optional<bool> exact_match;
  std::optional<double> jaccard;
  int n = 0;
  int p = 0;
  int k = 0;
  long iterations = 0;
  std::optional<double> final_gap;
};

/// 1{u in W} + #{w in W : u ~ w}.
int neighbor_count(const Graph& graph, int u, std::span<const int> w);

/// Indices of the k largest |v_j|, sorted; ties resolved toward the
/// lexicographically smallest index set.
std::vector<int> top_k_support(const Eigen::VectorXd& v, int k);

/// Four-step planted clique recovery: bipartite transform with
/// n = p = floor(9m / (10L)), k = floor(kappa / L); sparse PC estimate of
/// X / sqrt(scaling); top-k support; keep every vertex whose neighbour count
/// into the selected column vertices reaches ceil(threshold_fraction * k).
RecoveryReport solve_planted_clique(const Graph& graph, int kappa, const CliqueSolverConfig& cfg,
                                    std::uint64_t seed);

/// As above, additionally scoring the result against the planted clique.
RecoveryReport solve_planted_clique(const PlantedInstance& inst, const CliqueSolverConfig& cfg,
                                    std::uint64_t seed);

}  // namespace spca
