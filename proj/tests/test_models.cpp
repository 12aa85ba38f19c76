#include <cmath>
#include <set>

#include <gtest/gtest.h>

#include "spca/analysis.hpp"
#include "spca/errors.hpp"
#include "spca/models.hpp"
#include "spca/rng.hpp"

using namespace spca;

namespace {

double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

GraphVectorSpec gv_spec(int p, int ng, double pi0) {
  GraphVectorSpec s;
  s.g.assign(static_cast<std::size_t>(p), 0);
  for (int j = 0; j < ng; ++j) s.g[j] = 1;
  s.pi0 = pi0;
  return s;
}

Graph complete_graph(int m) {
  Graph g(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST(RngTest, EngineMatchesStandardSequence) {
  // The standard fixes the 10000th output of a default-seeded mt19937_64.
  Rng rng(5489U);
  std::uint64_t x = 0;
  for (int i = 0; i < 10000; ++i) x = rng.bits();
  EXPECT_EQ(x, 9981545732273789042ULL);
}

TEST(RngTest, UniformRangeAndMoments) {
  Rng rng(1);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sq += u * u;
  }
  EXPECT_NEAR(sum / n, 0.5, 0.003);
  EXPECT_NEAR(sq / n - 0.25, 1.0 / 12, 0.002);
}

TEST(RngTest, GaussianMoments) {
  Rng rng(2);
  double sum = 0, sq = 0, four = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.gaussian();
    sum += z;
    sq += z * z;
    four += z * z * z * z;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.015);
  EXPECT_NEAR(four / n, 3.0, 0.1);
}

TEST(RngTest, BelowIsUniformAndBounded) {
  Rng rng(3);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.below(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 400);
  EXPECT_THROW(rng.below(0), ParameterError);
}

TEST(RngTest, SampleWithoutReplacementIsDistinct) {
  Rng rng(4);
  const auto s = rng.sample_without_replacement(50, 50);
  EXPECT_EQ(std::set<int>(s.begin(), s.end()).size(), 50U);
  EXPECT_THROW(rng.sample_without_replacement(3, 4), ParameterError);
}

TEST(RngTest, DerivedSeedsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t t = 0; t < 1000; ++t) seen.insert(derive_seed(42, t));
  EXPECT_EQ(seen.size(), 1000U);
  EXPECT_EQ(derive_seed(42, 7), derive_seed(42, 7));
  EXPECT_NE(derive_seed(42, 7), derive_seed(43, 7));
}

TEST(SpikedModelTest, Validation) {
  const auto v = SparseUnitVector::uniform_on(3, {0});
  EXPECT_THROW((SpikedModelSpec{3, 0.0, 1.0, v}.validate()), ParameterError);
  EXPECT_THROW((SpikedModelSpec{3, 1.0, -1.0, v}.validate()), ParameterError);
  EXPECT_THROW((SpikedModelSpec{4, 1.0, 1.0, v}.validate()), ParameterError);
}

TEST(SpikedModelTest, NullSpikeHasScaledIdentityCovariance) {
  const SpikedModelSpec spec{4, 2.0, 0.0, SparseUnitVector::uniform_on(4, {0})};
  const SymMatrix s = empirical_covariance(sample_spiked(spec, 50000, 1));
  EXPECT_LE(max_abs_diff(s.matrix(), 2.0 * Eigen::MatrixXd::Identity(4, 4)), 0.05 * 2.0);
  const SpikedModelSpec unit{4, 1.0, 0.0, SparseUnitVector::uniform_on(4, {0})};
  const SymMatrix s1 = empirical_covariance(sample_spiked(unit, 50000, 1));
  EXPECT_LE(max_abs_diff(s1.matrix(), Eigen::MatrixXd::Identity(4, 4)), 0.05);
}

TEST(SpikedModelTest, PopulationEigengapEqualsTheta) {
  const SpikedModelSpec spec{6, 1.5, 0.7, SparseUnitVector::uniform_on(6, {1, 4})};
  const Spectrum s = eig_sym(spec.covariance());
  EXPECT_NEAR(s.values[0] - s.values[1], 0.7, 1e-14);
  EXPECT_NEAR(s.values[1], 1.5, 1e-14);
}

TEST(SpikedModelTest, EmpiricalLeadingEigenvector) {
  const Eigen::VectorXd e1 = Eigen::VectorXd::Unit(6, 0);
  const SpikedModelSpec spec{6, 1.0, 1.0, SparseUnitVector::uniform_on(6, {0})};
  const SymMatrix s = empirical_covariance(sample_spiked(spec, 50000, 7));
  EXPECT_LT(loss(leading_eigenvector(s), e1), 0.05);
}

TEST(SpikedModelTest, BitReproducible) {
  const SpikedModelSpec spec{5, 1.0, 2.0, SparseUnitVector::uniform_on(5, {0, 2})};
  EXPECT_EQ(sample_spiked(spec, 30, 99), sample_spiked(spec, 30, 99));
  EXPECT_FALSE(sample_spiked(spec, 30, 99) == sample_spiked(spec, 30, 100));
}

TEST(GraphVectorTest, Validation) {
  EXPECT_THROW(gv_spec(4, 2, 0.0).validate(), ParameterError);
  EXPECT_THROW(gv_spec(4, 2, 0.6).validate(), ParameterError);
  GraphVectorSpec bad = gv_spec(4, 2, 0.2);
  bad.g[3] = 2;
  EXPECT_THROW(bad.validate(), ParameterError);
  EXPECT_THROW(sample_graph_vector(gv_spec(4, 2, 0.7), 10, 1), ParameterError);
}

TEST(GraphVectorTest, EntriesAreSigns) {
  const DataMatrix y = sample_graph_vector(gv_spec(8, 3, 0.5), 2000, 5);
  EXPECT_TRUE((y.matrix().array().abs() == 1.0).all());
}

TEST(GraphVectorTest, MeanNearZero) {
  const DataMatrix y = sample_graph_vector(gv_spec(8, 3, 0.2), 50000, 6);
  EXPECT_LE(y.matrix().colwise().mean().cwiseAbs().maxCoeff(), 0.05);
}

TEST(GraphVectorTest, CovarianceMatchesClosedForm) {
  const GraphVectorSpec spec = gv_spec(8, 3, 0.2);
  const SymMatrix s = empirical_covariance(sample_graph_vector(spec, 50000, 11));
  EXPECT_LE(max_abs_diff(s.matrix(), gv_covariance(spec).matrix()), 0.05);
}

TEST(GraphVectorTest, MixingProbability) {
  // The clique block is constant (= xi) when eps = 1, and constant by chance
  // with probability 1/4 when eps = 0, so P(constant) = pi0 + (1 - pi0) / 4.
  const double pi0 = 0.2;
  const int n = 50000;
  const DataMatrix y = sample_graph_vector(gv_spec(8, 3, pi0), n, 12);
  int constant = 0;
  for (int i = 0; i < n; ++i)
    if (y.matrix()(i, 0) == y.matrix()(i, 1) && y.matrix()(i, 1) == y.matrix()(i, 2)) ++constant;
  const double q = pi0 + (1 - pi0) / 4;
  const double pi_hat = (static_cast<double>(constant) / n - 0.25) / 0.75;
  const double se = std::sqrt(q * (1 - q) / n) / 0.75;
  EXPECT_LE(std::abs(pi_hat - pi0), 3 * se);
}

TEST(GraphVectorTest, CovarianceExamples) {
  EXPECT_EQ(gv_covariance(gv_spec(4, 0, 0.3)), SymMatrix::identity(4));

  const Spectrum all = eig_sym(gv_covariance(gv_spec(3, 3, 0.5)));
  EXPECT_NEAR(all.values[0], 2.0, 1e-14);
  EXPECT_NEAR(all.values[1], 0.5, 1e-14);
  EXPECT_NEAR(all.values[2], 0.5, 1e-14);

  const SymMatrix two = gv_covariance(gv_spec(4, 2, 0.3));
  const Spectrum s = eig_sym(two);
  EXPECT_NEAR(s.values[0], 1.3, 1e-14);
  const double r = 1 / std::sqrt(2.0);
  EXPECT_LE((leading_eigenvector(two) - Eigen::Vector4d(r, r, 0, 0)).norm(), 1e-14);
}

TEST(GraphVectorTest, EigengapFormula) {
  const GraphVectorSpec spec = gv_spec(9, 4, 0.35);
  const Spectrum s = eig_sym(gv_covariance(spec));
  EXPECT_NEAR(s.values[0], 1 + 0.35 * 3, 1e-13);
  EXPECT_NEAR(s.values[0] - s.values[1], 0.35 * 3, 1e-13);
}

TEST(GraphTest, EdgesAndErrors) {
  Graph g(70);
  g.add_edge(3, 66);
  EXPECT_TRUE(g.adjacent(3, 66));
  EXPECT_TRUE(g.adjacent(66, 3));
  EXPECT_FALSE(g.adjacent(3, 65));
  EXPECT_EQ(g.edge_count(), 1);
  EXPECT_THROW(g.add_edge(4, 4), ParameterError);
  EXPECT_THROW(g.add_edge(-1, 4), ParameterError);
  EXPECT_THROW(g.add_edge(0, 70), ParameterError);
}

TEST(PlantedCliqueTest, FullCliqueIsComplete) {
  const PlantedInstance inst = sample_planted_clique(40, 40, 1);
  EXPECT_EQ(inst.graph.edge_count(), 40 * 39 / 2);
}

TEST(PlantedCliqueTest, EdgeDensityNearHalf) {
  for (int kappa : {0, 1}) {
    const PlantedInstance inst = sample_planted_clique(200, kappa, 3);
    const double density = static_cast<double>(inst.graph.edge_count()) / (200 * 199 / 2);
    EXPECT_NEAR(density, 0.5, 0.02);
    EXPECT_EQ(static_cast<int>(inst.clique.size()), kappa);
  }
}

TEST(PlantedCliqueTest, CliquePairsAdjacent) {
  const PlantedInstance inst = sample_planted_clique(300, 25, 9);
  ASSERT_EQ(inst.clique.size(), 25U);
  EXPECT_TRUE(std::is_sorted(inst.clique.begin(), inst.clique.end()));
  for (int a : inst.clique)
    for (int b : inst.clique)
      if (a != b) EXPECT_TRUE(inst.graph.adjacent(a, b));
}

TEST(PlantedCliqueTest, ReproducibleAndValidated) {
  EXPECT_EQ(sample_planted_clique(80, 10, 5).graph, sample_planted_clique(80, 10, 5).graph);
  EXPECT_THROW(sample_planted_clique(10, 11, 1), ParameterError);
  EXPECT_THROW(sample_planted_clique(10, -1, 1), ParameterError);
}

TEST(BottomLeftTransformTest, CompleteGraph) {
  const BipartiteSample s = bottom_left_transform(complete_graph(20), 6, 8, 1);
  for (int i = 0; i < 6; ++i) {
    const double xi = s.x.matrix()(i, 0);
    EXPECT_TRUE((s.x.matrix().row(i).array() == xi).all());
  }
}

TEST(BottomLeftTransformTest, EmptyGraph) {
  const BipartiteSample s = bottom_left_transform(Graph(20), 6, 8, 2);
  for (int i = 0; i < 6; ++i) {
    const double first = s.x.matrix()(i, 0);
    EXPECT_TRUE((s.x.matrix().row(i).array() == first).all());
  }
}

TEST(BottomLeftTransformTest, SignsAndDistinctVertices) {
  const PlantedInstance inst = sample_planted_clique(100, 10, 4);
  const BipartiteSample s = bottom_left_transform(inst.graph, 40, 45, 8);
  EXPECT_TRUE((s.x.matrix().array().abs() == 1.0).all());
  std::set<int> all(s.u.begin(), s.u.end());
  all.insert(s.w.begin(), s.w.end());
  EXPECT_EQ(all.size(), 85U);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 45; ++j) {
      const double sign = s.x.matrix()(i, 0) * (inst.graph.adjacent(s.u[i], s.w[0]) ? 1 : -1);
      EXPECT_EQ(s.x.matrix()(i, j), sign * (inst.graph.adjacent(s.u[i], s.w[j]) ? 1 : -1));
    }
}

TEST(BottomLeftTransformTest, RejectsTooManyVertices) {
  EXPECT_THROW(bottom_left_transform(Graph(10), 6, 5, 1), ParameterError);
  EXPECT_THROW(bottom_left_transform(Graph(10), 0, 5, 1), ParameterError);
}
