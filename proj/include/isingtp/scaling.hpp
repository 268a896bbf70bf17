#pragma once

#include "isingtp/matrices.hpp"
#include "isingtp/transfer_matrix.hpp"

#include <string>
#include <vector>

namespace isingtp {

// x_c = tanh J_c = sqrt(2) - 1
double critical_x();

// Axis-parallel rectangle [0, width] x [0, height].
struct RectDomain {
  double width = 1;
  double height = 1;
};

struct BoundaryPoint {
  double x = 0;
  double y = 0;
};

// Elliptic modulus data of the map from the rectangle onto the upper half
// plane sending the corners bottom-left, bottom-right, top-right, top-left
// to -1, 1, 1/k, -1/k.
struct RectMap {
  double m = 0;       // k^2
  double K = 0;       // K(m)
  double Kprime = 0;  // K(1 - m)
};
RectMap rect_map(const RectDomain& d);

// Image on the real line of a boundary point; counterclockwise order on the
// boundary becomes increasing order (cyclically, through infinity).
double rect_to_halfplane(const RectDomain& d, const BoundaryPoint& z);

// det M~ / pf K~ for real images a_1..a_k and b_1..b_k such that
// a_1..a_k, b_k..b_1 is counterclockwise (cyclically increasing).
double continuum_p(const std::vector<double>& a, const std::vector<double>& b);

// D_eps: lattice points of eps Z^2 strictly inside the rectangle.
struct LatticeApprox {
  double eps = 0;
  int rows = 0;
  int cols = 0;
  std::vector<Site> a, b;
};
LatticeApprox discretize(const RectDomain& d, double eps, const std::vector<BoundaryPoint>& a,
                         const std::vector<BoundaryPoint>& b);

// det M / pf K from transfer-matrix correlations at x_c.
double lattice_p(const LatticeApprox& lat);
double lattice_p(const RectDomain& d, double eps, const std::vector<BoundaryPoint>& a,
                 const std::vector<BoundaryPoint>& b);

struct ConvergenceRow {
  double eps = 0;
  double lattice = 0;
  double continuum = 0;
  double gap = 0;
};

struct ConvergenceStudy {
  std::vector<ConvergenceRow> rows;
  bool non_increasing = true;
};

ConvergenceStudy convergence_study(const RectDomain& d, const std::vector<BoundaryPoint>& a,
                                   const std::vector<BoundaryPoint>& b, const std::vector<double>& eps_list);

// "eps,lattice_p,continuum_p,gap"
std::string convergence_csv(const ConvergenceStudy& s);

}  // namespace isingtp
