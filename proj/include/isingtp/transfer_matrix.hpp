#pragma once

#include <utility>
#include <vector>

namespace isingtp {

inline constexpr int kMaxTransferRows = 20;

// Site of a rows x cols grid; row 0 is the bottom, col 0 the left side.
struct Site {
  int row = 0;
  int col = 0;
  auto operator<=>(const Site&) const = default;
};

// <sigma_a sigma_b> on the free-boundary grid with uniform x = tanh J,
// summing column states left to right. Both sites must be on the outer face.
double tm_boundary_correlation(int rows, int cols, Site a, Site b, double x);

// Several pairs at once; the parallel version spreads pairs over threads.
std::vector<double> tm_boundary_correlations(int rows, int cols, const std::vector<std::pair<Site, Site>>& pairs,
                                             double x);
std::vector<double> tm_boundary_correlations_serial(int rows, int cols,
                                                    const std::vector<std::pair<Site, Site>>& pairs, double x);

}  // namespace isingtp
