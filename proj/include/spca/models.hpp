#pragma once

#include <cstdint>
#include <vector>

#include "spca/matcore.hpp"
#include "spca/types.hpp"

namespace spca {

/// N_p(0, sigma2 I + theta v1 v1^T).
struct SpikedModelSpec {
  int p = 0;
  double sigma2 = 1.0;
  double theta = 0.0;
  SparseUnitVector v1;

  void validate() const;
  SymMatrix covariance() const;
};

/// Graph Vector distribution: Y = xi {(1 - eps) R + eps (g + R~)} with
/// R~_j = (1 - g_j) R_j, xi and R Rademacher, eps ~ Bernoulli(pi0).
struct GraphVectorSpec {
  std::vector<int> g;
  double pi0 = 0.5;

  int p() const { return static_cast<int>(g.size()); }
  int clique_size() const;
  void validate() const;
};

/// Undirected simple graph with packed bit-row adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int m);

  int vertex_count() const { return m_; }
  bool adjacent(int u, int v) const {
    return (rows_[row_offset(u) + static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U;
  }
  /// Throws ParameterError for self-loops or out-of-range vertices.
  void add_edge(int u, int v);
  long edge_count() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t row_offset(int u) const { return static_cast<std::size_t>(u) * words_; }
  void set_bit(int u, int v) {
    rows_[row_offset(u) + static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63);
  }

  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

struct PlantedInstance {
  Graph graph;
  std::vector<int> clique;  // sorted
};

DataMatrix sample_spiked(const SpikedModelSpec& spec, int n, std::uint64_t seed);

DataMatrix sample_graph_vector(const GraphVectorSpec& spec, int n, std::uint64_t seed);

/// I_p + pi0 (g g^T - diag(g)).
SymMatrix gv_covariance(const GraphVectorSpec& spec);

/// Erdos-Renyi(1/2) graph on m vertices with a clique forced on kappa
/// uniformly chosen vertices.
PlantedInstance sample_planted_clique(int m, int kappa, std::uint64_t seed);

struct BipartiteSample {
  DataMatrix x;
  std::vector<int> u;  // row vertices
  std::vector<int> w;  // column vertices
};

/// Draws u_1..u_n, w_1..w_p without replacement and forms
/// X_ij = xi_i (2 * 1{u_i ~ w_j} - 1).
BipartiteSample bottom_left_transform(const Graph& graph, int n, int p, std::uint64_t seed);

}  // namespace spca
