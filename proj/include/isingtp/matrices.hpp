#pragma once

#include "isingtp/graph.hpp"
#include "isingtp/rational.hpp"

#include <string>
#include <vector>

namespace isingtp {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RealMatrix = std::vector<std::vector<double>>;

// Pairwise boundary correlations indexed by boundary position (diagonal 1).
using BoundaryCorrelations = RationalMatrix;

enum class MatrixKind { N, M, K };
const char* kind_name(MatrixKind k);

struct CorrelationMatrix {
  MatrixKind kind = MatrixKind::M;
  std::vector<int> rows;  // boundary vertex ids
  std::vector<int> cols;
  RationalMatrix entries;
};

// Sign exponent of N^A: `positions` holds the 1-based boundary indices
// l_1 < ... < l_k of A, `l` is one of them and `j` any boundary index.
int sign_exponent(const PlanarGraph& g, const std::vector<int>& positions, int l, int j);

// Rows are A and columns B, both sorted by boundary position.
CorrelationMatrix build_N(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const BoundaryCorrelations& corr);
// Requires a_1..a_k, b_k..b_1 to be a counterclockwise order.
CorrelationMatrix build_M(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const BoundaryCorrelations& corr);
// S is put in boundary order; entries above the diagonal are correlations.
CorrelationMatrix build_K(const PlanarGraph& g, const std::vector<int>& s, const BoundaryCorrelations& corr);

// True when the sequence visits boundary positions in increasing cyclic order.
bool is_ccw_sequence(const PlanarGraph& g, const std::vector<int>& vertices);

Rational det_exact(const RationalMatrix& m);
// Expansion along the first row; at most 12 rows. Checks pf^2 = det.
Rational pfaffian_exact(const RationalMatrix& k);

double det_real(RealMatrix m);
double pfaffian_real(const RealMatrix& k);

std::string matrix_csv(const CorrelationMatrix& m);

}  // namespace isingtp
