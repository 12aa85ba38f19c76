#include "spca/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "spca/errors.hpp"
#include "spca/rng.hpp"

namespace spca {

DataMatrix::DataMatrix(Eigen::MatrixXd x) : x_(std::move(x)) {
  if (!x_.allFinite()) throw InputDomainError("data matrix has non-finite entries");
}

void SpikedModelSpec::validate() const {
  if (p < 1) throw ParameterError("spiked model: p must be positive");
  if (!(sigma2 > 0.0)) throw ParameterError("spiked model: sigma2 must be positive");
  if (!(theta >= 0.0)) throw ParameterError("spiked model: theta must be non-negative");
  if (v1.dim() != p) throw ParameterError("spiked model: v1 dimension differs from p");
}

SymMatrix SpikedModelSpec::covariance() const {
  validate();
  return SymMatrix::rank_one_update(p, sigma2, theta, v1.dense());
}

int GraphVectorSpec::clique_size() const {
  return static_cast<int>(std::count(g.begin(), g.end(), 1));
}

void GraphVectorSpec::validate() const {
  if (g.empty()) throw ParameterError("graph vector: g must be non-empty");
  for (int gj : g)
    if (gj != 0 && gj != 1) throw ParameterError("graph vector: g must be 0/1 valued");
  if (!(pi0 > 0.0 && pi0 <= 0.5)) throw ParameterError("graph vector: pi0 must lie in (0, 1/2]");
}

Graph::Graph(int m) : m_(m), words_(static_cast<std::size_t>((m + 63) / 64)) {
  if (m < 0) throw ParameterError("graph: negative vertex count");
  rows_.assign(static_cast<std::size_t>(m) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= m_ || v >= m_) throw ParameterError("graph: vertex out of range");
  if (u == v) throw ParameterError("graph: self-loops are not allowed");
  set_bit(u, v);
  set_bit(v, u);
}

long Graph::edge_count() const {
  long bits = 0;
  for (auto w : rows_) bits += std::popcount(w);
  return bits / 2;
}

DataMatrix sample_spiked(const SpikedModelSpec& spec, int n, std::uint64_t seed) {
  spec.validate();
  if (n < 1) throw ParameterError("sample size must be positive");
  Rng rng(seed);
  const double sigma = std::sqrt(spec.sigma2);
  const double root_theta = std::sqrt(spec.theta);
  const Eigen::VectorXd v1 = spec.v1.dense();
  Eigen::MatrixXd x(n, spec.p);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < spec.p; ++j) x(i, j) = sigma * rng.gaussian();
    const double w = rng.gaussian();
    x.row(i) += (root_theta * w) * v1.transpose();
  }
  return DataMatrix(std::move(x));
}

DataMatrix sample_graph_vector(const GraphVectorSpec& spec, int n, std::uint64_t seed) {
  spec.validate();
  if (n < 1) throw ParameterError("sample size must be positive");
  Rng rng(seed);
  const int p = spec.p();
  Eigen::MatrixXd y(n, p);
  for (int i = 0; i < n; ++i) {
    const double xi = rng.rademacher();
    const bool eps = rng.bernoulli(spec.pi0);
    for (int j = 0; j < p; ++j) {
      const double r = rng.rademacher();
      const double value = eps ? (spec.g[j] == 1 ? 1.0 : r) : r;
      y(i, j) = xi * value;
    }
  }
  return DataMatrix(std::move(y));
}

SymMatrix gv_covariance(const GraphVectorSpec& spec) {
  spec.validate();
  const int p = spec.p();
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(p, p);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      if (a != b && spec.g[a] == 1 && spec.g[b] == 1) s(a, b) = spec.pi0;
  return SymMatrix(std::move(s));
}

PlantedInstance sample_planted_clique(int m, int kappa, std::uint64_t seed) {
  if (m < 1) throw ParameterError("planted clique: m must be positive");
  if (kappa < 0 || kappa > m) throw ParameterError("planted clique: kappa must lie in [0, m]");
  Rng rng(seed);
  PlantedInstance inst{Graph(m), rng.sample_without_replacement(m, kappa)};
  std::sort(inst.clique.begin(), inst.clique.end());
  std::vector<char> in_clique(static_cast<std::size_t>(m), 0);
  for (int v : inst.clique) in_clique[v] = 1;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      if (in_clique[a] && in_clique[b]) {
        inst.graph.add_edge(a, b);
      } else if (rng.bernoulli(0.5)) {
        inst.graph.add_edge(a, b);
      }
    }
  }
  return inst;
}

BipartiteSample bottom_left_transform(const Graph& graph, int n, int p, std::uint64_t seed) {
  if (n < 1 || p < 1) throw ParameterError("bottom-left transform: n and p must be positive");
  if (n + p > graph.vertex_count())
    throw ParameterError("bottom-left transform: n + p exceeds the number of vertices");
  Rng rng(seed);
  std::vector<int> drawn = rng.sample_without_replacement(graph.vertex_count(), n + p);
  BipartiteSample out;
  out.u.assign(drawn.begin(), drawn.begin() + n);
  out.w.assign(drawn.begin() + n, drawn.end());
  Eigen::MatrixXd x(n, p);
  for (int i = 0; i < n; ++i) {
    const double xi = rng.rademacher();
    for (int j = 0; j < p; ++j) x(i, j) = xi * (graph.adjacent(out.u[i], out.w[j]) ? 1.0 : -1.0);
  }
  out.x = DataMatrix(std::move(x));
  return out;
}

}  // namespace spca
