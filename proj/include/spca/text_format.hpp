#pragma once

#include <iosfwd>
#include <string>

#include "spca/matcore.hpp"
#include "spca/models.hpp"

namespace spca {

// Matrix text format: a "rows cols" header line, then one line per row of
// whitespace-separated values written with 17 significant digits.
//
// Graph text format: a "m kappa" header line, a line listing the kappa clique
// vertices (0-based; empty when kappa = 0), then one "i j" line per edge with
// i < j in lexicographic order.

/// Shortest-round-trip-safe rendering: %.17g.
std::string format_double(double x);

void write_matrix(std::ostream& out, const Eigen::MatrixXd& m);
Eigen::MatrixXd read_matrix(std::istream& in);

SymMatrix read_sym_matrix(std::istream& in);
DataMatrix read_data_matrix(std::istream& in);

void write_graph(std::ostream& out, const PlantedInstance& inst);
PlantedInstance read_graph(std::istream& in);

}  // namespace spca
