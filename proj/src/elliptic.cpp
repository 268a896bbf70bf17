#include "isingtp/elliptic.hpp"

#include "isingtp/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace isingtp {

namespace {
constexpr double kTol = 1e-15;
constexpr int kMaxSteps = 64;

double agm(double a, double b) {
  for (int i = 0; i < kMaxSteps && std::abs(a - b) > kTol * a; ++i) {
    double an = (a + b) / 2;
    b = std::sqrt(a * b);
    a = an;
  }
  return a;
}

// K(1 - m) without forming 1 - m
double ellipk_complement(double m) { return std::numbers::pi / (2 * agm(1, std::sqrt(m))); }

}  // namespace

double ellipk(double m) {
  if (!(m >= 0 && m < 1)) throw InputError("elliptic parameter must lie in [0, 1)");
  return std::numbers::pi / (2 * agm(1, std::sqrt(1 - m)));
}

Jacobi jacobi(double u, double m) {
  if (!(m >= 0 && m < 1)) throw InputError("elliptic parameter must lie in [0, 1)");
  if (m < 1e-300) return {std::sin(u), std::cos(u), 1.0};
  std::array<double, kMaxSteps + 1> a{}, c{};
  a[0] = 1;
  double b = std::sqrt(1 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::abs(c[static_cast<std::size_t>(n)]) > kTol && n < kMaxSteps) {
    const auto i = static_cast<std::size_t>(n);
    a[i + 1] = (a[i] + b) / 2;
    c[i + 1] = (a[i] - b) / 2;
    b = std::sqrt(a[i] * b);
    ++n;
  }
  double phi = std::ldexp(a[static_cast<std::size_t>(n)] * u, n);
  for (int i = n; i > 0; --i) {
    const auto k = static_cast<std::size_t>(i);
    phi = (phi + std::asin(c[k] * std::sin(phi) / a[k])) / 2;
  }
  const double sn = std::sin(phi), cn = std::cos(phi);
  return {sn, cn, std::sqrt(1 - m * sn * sn)};
}

double parameter_for_ratio(double ratio) {
  if (!(ratio > 0)) throw InputError("modulus ratio must be positive");
  // K(1-m)/K(m) decreases from +inf to 0 on (0, 1); bisect on log m near 0
  double lo = 1e-300, hi = 1 - 1e-16;
  auto f = [](double m) { return ellipk_complement(m) / ellipk(m); };
  if (ratio > f(lo) || ratio < f(hi)) throw InputError("modulus ratio out of range");
  for (int i = 0; i < 2000 && hi - lo > 1e-17 * hi; ++i) {
    double mid = lo < 1e-3 ? std::sqrt(lo * hi) : (lo + hi) / 2;
    if (f(mid) > ratio) lo = mid;
    else hi = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace isingtp
