#include "isingtp/scaling.hpp"

#include "isingtp/elliptic.hpp"
#include "isingtp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace isingtp {

namespace {

constexpr double kBoundaryTol = 1e-12;

bool cyclically_increasing(const std::vector<double>& seq) {
  int descents = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    double next = seq[(i + 1) % seq.size()];
    if (next == seq[i]) return false;
    if (next < seq[i]) ++descents;
  }
  return seq.size() <= 1 || descents == 1;
}

}  // namespace

double critical_x() { return std::sqrt(2.0) - 1; }

RectMap rect_map(const RectDomain& d) {
  if (!(d.width > 0 && d.height > 0)) throw InputError("rectangle sides must be positive");
  // the half plane maps onto [-K, K] x [0, K'], so K'/(2K) = height/width
  RectMap r;
  r.m = parameter_for_ratio(2 * d.height / d.width);
  r.K = ellipk(r.m);
  r.Kprime = ellipk(1 - r.m);
  return r;
}

double rect_to_halfplane(const RectDomain& d, const BoundaryPoint& z) {
  const bool bottom = std::abs(z.y) <= kBoundaryTol, top = std::abs(z.y - d.height) <= kBoundaryTol;
  const bool left = std::abs(z.x) <= kBoundaryTol, right = std::abs(z.x - d.width) <= kBoundaryTol;
  const bool inside_x = z.x >= -kBoundaryTol && z.x <= d.width + kBoundaryTol;
  const bool inside_y = z.y >= -kBoundaryTol && z.y <= d.height + kBoundaryTol;
  if (!(inside_x && inside_y) || !(bottom || top || left || right))
    throw InputError("point is not on the rectangle boundary");
  const RectMap r = rect_map(d);
  const double k = std::sqrt(r.m);
  const double u = (z.x / d.width - 0.5) * 2 * r.K;  // horizontal coordinate in [-K, K]
  const double v = z.y / d.height * r.Kprime;         // vertical coordinate in [0, K']
  if (bottom) return jacobi(u, r.m).sn;
  if (top) {
    double s = jacobi(u, r.m).sn;
    if (std::abs(s) < 1e-300) throw InputError("point maps to infinity");
    return 1 / (k * s);
  }
  // sn(+-K + i v) = +-1/dn(v, k')
  const double dn = jacobi(v, 1 - r.m).dn;
  return right ? 1 / dn : -1 / dn;
}

double continuum_p(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.empty()) throw InputError("A and B must be non-empty and of equal size");
  std::vector<double> ccw = a;
  ccw.insert(ccw.end(), b.rbegin(), b.rend());
  for (std::size_t i = 0; i < ccw.size(); ++i)
    for (std::size_t j = i + 1; j < ccw.size(); ++j)
      if (ccw[i] == ccw[j]) throw InputError("coincident marked points");
  if (!cyclically_increasing(ccw)) throw InputError("a_1..a_k, b_k..b_1 must be counterclockwise");
  const std::size_t k = a.size();
  RealMatrix m(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m[i][j] = 1 / std::abs(a[i] - b[j]);
  const std::size_t n = 2 * k;
  RealMatrix kk(n, std::vector<double>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      kk[i][j] = 1 / std::abs(ccw[i] - ccw[j]);
      kk[j][i] = -kk[i][j];
    }
  return det_real(m) / pfaffian_real(kk);
}

LatticeApprox discretize(const RectDomain& d, double eps, const std::vector<BoundaryPoint>& a,
                         const std::vector<BoundaryPoint>& b) {
  if (!(eps > 0)) throw InputError("eps must be positive");
  LatticeApprox lat;
  lat.eps = eps;
  // interior lattice points eps*i with 0 < eps*i < side
  auto count = [&](double side) { return static_cast<int>(std::ceil(side / eps - 1e-9)) - 1; };
  lat.cols = count(d.width);
  lat.rows = count(d.height);
  if (lat.cols < 1 || lat.rows < 1) throw InputError("eps too coarse for the domain");
  if (std::min(lat.rows, lat.cols) > kMaxTransferRows)
    throw CapacityError("lattice wider than the transfer-matrix cap");
  auto nearest = [&](const BoundaryPoint& p) {
    Site best{};
    double best_d = std::numeric_limits<double>::infinity();
    for (int c = 0; c < lat.cols; ++c)
      for (int r = 0; r < lat.rows; ++r) {
        if (r != 0 && r != lat.rows - 1 && c != 0 && c != lat.cols - 1) continue;
        double dx = (c + 1) * eps - p.x, dy = (r + 1) * eps - p.y;
        double dist = std::hypot(dx, dy);
        // scan order is increasing (col, row), so strict comparison keeps
        // the smaller coordinate on ties
        if (dist < best_d - 1e-12) {
          best_d = dist;
          best = {r, c};
        }
      }
    return best;
  };
  for (const auto& p : a) lat.a.push_back(nearest(p));
  for (const auto& p : b) lat.b.push_back(nearest(p));
  std::vector<Site> all = lat.a;
  all.insert(all.end(), lat.b.begin(), lat.b.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InputError("marked points collide after discretization");
  return lat;
}

double lattice_p(const LatticeApprox& lat) {
  const std::size_t k = lat.a.size();
  std::vector<Site> ccw = lat.a;
  ccw.insert(ccw.end(), lat.b.rbegin(), lat.b.rend());
  // transfer along the longer side keeps the state space small
  const bool transpose = lat.rows > lat.cols;
  auto orient = [&](Site s) { return transpose ? Site{s.col, s.row} : s; };
  const int rows = transpose ? lat.cols : lat.rows, cols = transpose ? lat.rows : lat.cols;
  std::vector<std::pair<Site, Site>> pairs;
  for (std::size_t i = 0; i < ccw.size(); ++i)
    for (std::size_t j = i + 1; j < ccw.size(); ++j) pairs.emplace_back(orient(ccw[i]), orient(ccw[j]));
  const auto corr = tm_boundary_correlations(rows, cols, pairs, critical_x());
  const std::size_t n = 2 * k;
  RealMatrix kk(n, std::vector<double>(n, 0));
  std::size_t p = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      kk[i][j] = corr[p++];
      kk[j][i] = -kk[i][j];
    }
  // a_i sits at ccw index i, b_j at ccw index n - 1 - j
  RealMatrix m(k, std::vector<double>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      std::size_t bj = n - 1 - j;
      m[i][j] = kk[std::min(i, bj)][std::max(i, bj)];
    }
  return det_real(m) / pfaffian_real(kk);
}

double lattice_p(const RectDomain& d, double eps, const std::vector<BoundaryPoint>& a,
                 const std::vector<BoundaryPoint>& b) {
  return lattice_p(discretize(d, eps, a, b));
}

ConvergenceStudy convergence_study(const RectDomain& d, const std::vector<BoundaryPoint>& a,
                                   const std::vector<BoundaryPoint>& b, const std::vector<double>& eps_list) {
  std::vector<double> ia, ib;
  for (const auto& p : a) ia.push_back(rect_to_halfplane(d, p));
  for (const auto& p : b) ib.push_back(rect_to_halfplane(d, p));
  const double cont = continuum_p(ia, ib);
  ConvergenceStudy s;
  for (double eps : eps_list) {
    ConvergenceRow row;
    row.eps = eps;
    row.lattice = lattice_p(d, eps, a, b);
    row.continuum = cont;
    row.gap = std::abs(row.lattice - cont);
    if (!s.rows.empty() && row.gap > s.rows.back().gap) s.non_increasing = false;
    s.rows.push_back(row);
  }
  return s;
}

std::string convergence_csv(const ConvergenceStudy& s) {
  std::string out = "eps,lattice_p,continuum_p,gap\n";
  char buf[160];
  for (const auto& r : s.rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.eps, r.lattice, r.continuum, r.gap);
    out += buf;
  }
  return out;
}

}  // namespace isingtp
