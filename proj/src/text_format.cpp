#include "spca/text_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "spca/errors.hpp"

namespace spca {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << format_double(m(i, j));
    }
    out << '\n';
  }
}

Eigen::MatrixXd read_matrix(std::istream& in) {
  long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows < 1 || cols < 1)
    throw ParameterError("matrix file: expected a positive 'rows cols' header");
  Eigen::MatrixXd m(rows, cols);
  std::string token;
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < cols; ++j) {
      if (!(in >> token)) throw ParameterError("matrix file: too few values");
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(token, &used);
      } catch (const std::out_of_range&) {
        throw InputDomainError("matrix file: value out of range: " + token);
      } catch (const std::exception&) {
        throw ParameterError("matrix file: not a number: " + token);
      }
      if (used != token.size()) throw ParameterError("matrix file: not a number: " + token);
      if (!std::isfinite(v)) throw InputDomainError("matrix file: non-finite value");
      m(i, j) = v;
    }
  }
  if (in >> token) throw ParameterError("matrix file: trailing data after the last row");
  return m;
}

SymMatrix read_sym_matrix(std::istream& in) { return SymMatrix(read_matrix(in)); }

DataMatrix read_data_matrix(std::istream& in) { return DataMatrix(read_matrix(in)); }

void write_graph(std::ostream& out, const PlantedInstance& inst) {
  const int m = inst.graph.vertex_count();
  out << m << ' ' << inst.clique.size() << '\n';
  for (std::size_t i = 0; i < inst.clique.size(); ++i) {
    if (i) out << ' ';
    out << inst.clique[i];
  }
  out << '\n';
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (inst.graph.adjacent(a, b)) out << a << ' ' << b << '\n';
}

PlantedInstance read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParameterError("graph file: missing header");
  std::istringstream header(line);
  long m = 0, kappa = 0;
  if (!(header >> m >> kappa) || m < 1 || kappa < 0 || kappa > m)
    throw ParameterError("graph file: expected 'm kappa' with 0 <= kappa <= m");
  PlantedInstance inst{Graph(static_cast<int>(m)), {}};
  if (!std::getline(in, line)) throw ParameterError("graph file: missing clique line");
  std::istringstream clique(line);
  long v = 0;
  while (clique >> v) {
    if (v < 0 || v >= m) throw ParameterError("graph file: clique vertex out of range");
    inst.clique.push_back(static_cast<int>(v));
  }
  if (!clique.eof()) throw ParameterError("graph file: malformed clique line");
  std::sort(inst.clique.begin(), inst.clique.end());
  if (static_cast<long>(inst.clique.size()) != kappa ||
      std::adjacent_find(inst.clique.begin(), inst.clique.end()) != inst.clique.end())
    throw ParameterError("graph file: clique line must list kappa distinct vertices");
  long a = 0, b = 0;
  while (in >> a) {
    if (!(in >> b)) throw ParameterError("graph file: dangling edge endpoint");
    if (a < 0 || b < 0 || a >= m || b >= m || a == b)
      throw ParameterError("graph file: invalid edge");
    inst.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
  }
  if (!in.eof()) throw ParameterError("graph file: malformed edge line");
  return inst;
}

}  // namespace spca
