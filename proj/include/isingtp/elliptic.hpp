#pragma once

namespace isingtp {

// Complete elliptic integral of the first kind K(m), parameter m = k^2,
// by the arithmetic-geometric mean.
double ellipk(double m);

struct Jacobi {
  double sn, cn, dn;
};

// Jacobi elliptic functions of real argument, 0 <= m < 1, by descending
// Landen (AGM) iteration.
Jacobi jacobi(double u, double m);

// The parameter m with K(1 - m) / K(m) = ratio, by bisection.
double parameter_for_ratio(double ratio);

}  // namespace isingtp
