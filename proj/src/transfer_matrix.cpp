#include "isingtp/transfer_matrix.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

namespace isingtp {

namespace {

void check_site(int rows, int cols, Site s) {
  if (s.row < 0 || s.row >= rows || s.col < 0 || s.col >= cols)
    throw InputError("site (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") outside the grid");
  if (s.row != 0 && s.row != rows - 1 && s.col != 0 && s.col != cols - 1)
    throw InputError("site (" + std::to_string(s.row) + "," + std::to_string(s.col) + ") is not on the boundary");
}

// Spin of `row` in column state s: bit set means -1.
inline double spin(std::uint32_t s, int row) { return (s >> row) & 1U ? -1.0 : 1.0; }

// Partition sum with spin insertions at `marks`; returns log of the scale
// removed along the way together with the remaining mantissa.
std::pair<double, double> sweep(int rows, int cols, const std::vector<Site>& marks, double x,
                                const std::vector<double>& vertical) {
  const std::size_t states = std::size_t{1} << rows;
  std::vector<double> v(vertical);
  double log_scale = 0;
  auto insert = [&](int col) {
    for (const Site& s : marks)
      if (s.col == col)
        for (std::size_t st = 0; st < states; ++st) v[st] *= spin(static_cast<std::uint32_t>(st), s.row);
  };
  insert(0);
  for (int c = 1; c < cols; ++c) {
    // horizontal bonds, one row at a time
    for (int r = 0; r < rows; ++r) {
      const std::size_t bitr = std::size_t{1} << r;
      for (std::size_t st = 0; st < states; ++st) {
        if (st & bitr) continue;
        const double a = v[st], b = v[st | bitr];
        v[st] = (1 + x) * a + (1 - x) * b;
        v[st | bitr] = (1 - x) * a + (1 + x) * b;
      }
    }
    for (std::size_t st = 0; st < states; ++st) v[st] *= vertical[st];
    insert(c);
    double peak = 0;
    for (double val : v) peak = std::max(peak, std::abs(val));
    if (peak > 0) {
      log_scale += std::log(peak);
      for (double& val : v) val /= peak;
    }
  }
  double total = 0;
  for (double val : v) total += val;
  return {log_scale, total};
}

std::vector<double> vertical_weights(int rows, double x) {
  const std::size_t states = std::size_t{1} << rows;
  std::vector<double> w(states, 1.0);
  for (std::size_t st = 0; st < states; ++st)
    for (int r = 0; r + 1 < rows; ++r)
      w[st] *= 1 + x * spin(static_cast<std::uint32_t>(st), r) * spin(static_cast<std::uint32_t>(st), r + 1);
  return w;
}

void check_grid(int rows, int cols, double x) {
  if (rows < 1 || cols < 1) throw InputError("grid needs at least one row and column");
  if (rows > kMaxTransferRows)
    throw CapacityError("transfer matrix limited to " + std::to_string(kMaxTransferRows) + " rows");
  if (!(x > 0 && x < 1)) throw InputError("x must lie in (0, 1)");
}

double ratio(const std::pair<double, double>& num, const std::pair<double, double>& den) {
  return num.second / den.second * std::exp(num.first - den.first);
}

}  // namespace

double tm_boundary_correlation(int rows, int cols, Site a, Site b, double x) {
  return tm_boundary_correlations_serial(rows, cols, {{a, b}}, x)[0];
}

std::vector<double> tm_boundary_correlations_serial(int rows, int cols,
                                                    const std::vector<std::pair<Site, Site>>& pairs, double x) {
  check_grid(rows, cols, x);
  for (const auto& [a, b] : pairs) {
    check_site(rows, cols, a);
    check_site(rows, cols, b);
  }
  const auto vertical = vertical_weights(rows, x);
  const auto den = sweep(rows, cols, {}, x, vertical);
  std::vector<double> out;
  for (const auto& [a, b] : pairs) {
    if (a == b) out.push_back(1.0);
    else out.push_back(ratio(sweep(rows, cols, {a, b}, x, vertical), den));
  }
  return out;
}

std::vector<double> tm_boundary_correlations(int rows, int cols, const std::vector<std::pair<Site, Site>>& pairs,
                                             double x) {
  check_grid(rows, cols, x);
  for (const auto& [a, b] : pairs) {
    check_site(rows, cols, a);
    check_site(rows, cols, b);
  }
  const auto vertical = vertical_weights(rows, x);
  const long jobs = static_cast<long>(pairs.size()) + 1;
  std::vector<std::pair<double, double>> sums(static_cast<std::size_t>(jobs));
#pragma omp parallel for schedule(dynamic)
  for (long j = 0; j < jobs; ++j) {
    if (j == 0) {
      sums[0] = sweep(rows, cols, {}, x, vertical);
    } else {
      const auto& [a, b] = pairs[static_cast<std::size_t>(j - 1)];
      if (!(a == b)) sums[static_cast<std::size_t>(j)] = sweep(rows, cols, {a, b}, x, vertical);
    }
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out.push_back(pairs[i].first == pairs[i].second ? 1.0 : ratio(sums[i + 1], sums[0]));
  return out;
}

}  // namespace isingtp
