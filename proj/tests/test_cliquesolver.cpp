#include <algorithm>
#include <iterator>

#include <gtest/gtest.h>

#include "spca/cliquesolver.hpp"
#include "spca/errors.hpp"

using namespace spca;

namespace {

Graph complete_graph(int m) {
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.add_edge(a, b);
  return g;
}

Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

CliqueSolverConfig capped(int L, long cap) {
  CliqueSolverConfig cfg;
  cfg.L = L;
  cfg.max_iterations = cap;
  return cfg;
}

}  // namespace

TEST(NeighborCountTest, Examples) {
  const std::vector<int> self{2};
  EXPECT_EQ(neighbor_count(Graph(5), 2, self), 1);
  const Graph k5 = complete_graph(5);
  const std::vector<int> w{0, 1, 2};
  EXPECT_EQ(neighbor_count(k5, 4, w), 3);
  EXPECT_EQ(neighbor_count(k5, 1, w), 3);
}

TEST(NeighborCountTest, RangeChecks) {
  const std::vector<int> w{0, 7};
  EXPECT_THROW(neighbor_count(Graph(5), 1, w), ParameterError);
  EXPECT_THROW(neighbor_count(Graph(5), 5, std::vector<int>{0}), ParameterError);
}

TEST(NeighborCountTest, CliqueMembersReachFullCount) {
  const PlantedInstance inst = sample_planted_clique(120, 20, 3);
  const std::vector<int> w(inst.clique.begin(), inst.clique.begin() + 8);
  for (int u : inst.clique) EXPECT_EQ(neighbor_count(inst.graph, u, w), 8);
}

TEST(TopKSupportTest, Examples) {
  EXPECT_EQ(top_k_support(vec({0.1, -0.9, 0.5}), 2), (std::vector<int>{1, 2}));
  EXPECT_EQ(top_k_support(vec({0.3, -0.3, 0.3, 0.3}), 2), (std::vector<int>{0, 1}));
  EXPECT_EQ(top_k_support(vec({0.3, -0.2, 0.1}), 3), (std::vector<int>{0, 1, 2}));
}

TEST(TopKSupportTest, ExcludedNeverLarger) {
  const Eigen::VectorXd v = vec({0.2, -0.5, 0.5, 0.1, -0.2, 0.4});
  const auto s = top_k_support(v, 3);
  EXPECT_EQ(s, (std::vector<int>{1, 2, 5}));
  const auto t = top_k_support(v, 4);
  EXPECT_EQ(t, (std::vector<int>{0, 1, 2, 5}));
}

TEST(TopKSupportTest, RejectsBadK) {
  EXPECT_THROW(top_k_support(vec({1, 2}), 0), ParameterError);
  EXPECT_THROW(top_k_support(vec({1, 2}), 3), ParameterError);
}

TEST(CliqueSolverTest, ConfigValidation) {
  CliqueSolverConfig cfg;
  cfg.L = 1;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg = CliqueSolverConfig{};
  cfg.threshold_fraction = 0.0;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg.threshold_fraction = 1.5;
  EXPECT_THROW(cfg.validate(), ParameterError);
  cfg = CliqueSolverConfig{};
  cfg.scaling = -1;
  EXPECT_THROW(cfg.validate(), ParameterError);
}

TEST(CliqueSolverTest, DefaultSubsampling) {
  EXPECT_EQ(default_subsampling(1000), 7);
  EXPECT_EQ(default_subsampling(100), 5);
  EXPECT_EQ(default_subsampling(2), 1);
}

TEST(CliqueSolverTest, StepOneArithmetic) {
  const PlantedInstance inst = sample_planted_clique(1000, 140, 1);
  const RecoveryReport r = solve_planted_clique(inst, capped(7, 5), 1);
  EXPECT_EQ(r.n, 128);
  EXPECT_EQ(r.p, 128);
  EXPECT_EQ(r.k, 20);
  EXPECT_EQ(r.iterations, 5);
  EXPECT_TRUE(r.final_gap.has_value());
}

TEST(CliqueSolverTest, CompleteGraphRecoversEverything) {
  const int m = 60;
  const PlantedInstance inst = sample_planted_clique(m, m, 2);
  const RecoveryReport r = solve_planted_clique(inst, capped(2, 50), 2);
  EXPECT_EQ(static_cast<int>(r.recovered.size()), m);
  EXPECT_TRUE(*r.exact_match);
  EXPECT_DOUBLE_EQ(*r.jaccard, 1.0);
}

TEST(CliqueSolverTest, KappaBelowLRejected) {
  const PlantedInstance inst = sample_planted_clique(100, 3, 1);
  EXPECT_THROW(solve_planted_clique(inst, capped(4, 5), 1), ParameterError);
}

TEST(CliqueSolverTest, GraphTooSmall) {
  EXPECT_THROW(solve_planted_clique(complete_graph(3), 3, capped(2, 5), 1), ParameterError);
}

TEST(CliqueSolverTest, UnknownCliqueLeavesScoresAbsent) {
  const PlantedInstance inst = sample_planted_clique(100, 30, 4);
  const RecoveryReport r = solve_planted_clique(inst.graph, 30, capped(2, 20), 4);
  EXPECT_FALSE(r.exact_match.has_value());
  EXPECT_FALSE(r.jaccard.has_value());
}

TEST(CliqueSolverTest, ScoresMatchRecoveredSet) {
  const PlantedInstance inst = sample_planted_clique(200, 60, 5);
  const RecoveryReport r = solve_planted_clique(inst, capped(2, 300), 5);
  std::vector<int> both, either;
  std::set_intersection(r.recovered.begin(), r.recovered.end(), inst.clique.begin(),
                        inst.clique.end(), std::back_inserter(both));
  std::set_union(r.recovered.begin(), r.recovered.end(), inst.clique.begin(), inst.clique.end(),
                 std::back_inserter(either));
  EXPECT_DOUBLE_EQ(*r.jaccard, static_cast<double>(both.size()) / either.size());
  EXPECT_EQ(*r.exact_match, r.recovered == inst.clique);
  EXPECT_TRUE(std::is_sorted(r.recovered.begin(), r.recovered.end()));
}

TEST(CliqueSolverTest, LowerThresholdNeverShrinks) {
  const PlantedInstance inst = sample_planted_clique(150, 30, 6);
  RecoveryReport prev;
  bool first = true;
  for (double frac : {1.0, 0.9, 0.75, 0.6, 0.5}) {
    CliqueSolverConfig cfg = capped(2, 100);
    cfg.threshold_fraction = frac;
    const RecoveryReport r = solve_planted_clique(inst, cfg, 6);
    if (!first)
      EXPECT_TRUE(std::includes(r.recovered.begin(), r.recovered.end(), prev.recovered.begin(),
                                prev.recovered.end()));
    prev = r;
    first = false;
  }
}

TEST(CliqueSolverTest, Deterministic) {
  const PlantedInstance inst = sample_planted_clique(150, 30, 7);
  const RecoveryReport a = solve_planted_clique(inst, capped(3, 100), 7);
  const RecoveryReport b = solve_planted_clique(inst, capped(3, 100), 7);
  EXPECT_EQ(a.recovered, b.recovered);
  EXPECT_EQ(a.final_gap, b.final_gap);
}

TEST(CliqueSolverTest, EstimatorOverride) {
  const PlantedInstance inst = sample_planted_clique(150, 30, 8);
  CliqueSolverConfig cfg = capped(2, 1000);
  cfg.estimator = SdpConfig{0.5, 1e-3, 7, 7};
  const RecoveryReport r = solve_planted_clique(inst, cfg, 8);
  EXPECT_EQ(r.iterations, 7);
}
