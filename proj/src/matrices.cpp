#include "isingtp/matrices.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace isingtp {

namespace {

std::vector<int> sorted_by_position(const PlanarGraph& g, std::vector<int> vs, const char* what) {
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count() || !g.on_boundary(v))
      throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " is not a boundary vertex");
  std::sort(vs.begin(), vs.end(), [&](int x, int y) { return g.boundary_position(x) < g.boundary_position(y); });
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InputError(std::string(what) + " has repeated vertices");
  return vs;
}

const Rational& corr_of(const PlanarGraph& g, const BoundaryCorrelations& corr, int a, int b) {
  return corr[static_cast<std::size_t>(g.boundary_position(a))][static_cast<std::size_t>(g.boundary_position(b))];
}

void require_square(const RationalMatrix& m) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw InputError("matrix is not square");
}

Rational pf_recursive(const RationalMatrix& k, std::vector<int>& idx) {
  if (idx.empty()) return Rational(1);
  const int first = idx[0];
  Rational total = 0;
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Rational& entry = k[static_cast<std::size_t>(first)][static_cast<std::size_t>(idx[j])];
    if (entry == 0) continue;
    std::vector<int> rest;
    for (std::size_t t = 1; t < idx.size(); ++t)
      if (t != j) rest.push_back(idx[t]);
    Rational sub = pf_recursive(k, rest);
    if (j % 2 == 1) total += entry * sub;
    else total -= entry * sub;
  }
  return total;
}

}  // namespace

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::N: return "N";
    case MatrixKind::M: return "M";
    case MatrixKind::K: return "K";
  }
  return "?";
}

int sign_exponent(const PlanarGraph& g, const std::vector<int>& positions, int l, int j) {
  const int n = g.boundary_size();
  if (j < 1 || j > n || l < 1 || l > n) throw InputError("boundary index out of range");
  if (std::find(positions.begin(), positions.end(), l) == positions.end())
    throw InputError("row index is not in A");
  int s = 0;
  for (int p : positions)
    if (p > std::min(l, j) && p < std::max(l, j)) ++s;
  const bool j_in_a = std::find(positions.begin(), positions.end(), j) != positions.end();
  if (j_in_a) {
    Color c = g.boundary()[static_cast<std::size_t>(j - 1)].color;
    if (c == Color::Open && j < l) ++s;
    if (c == Color::Filled && j > l) ++s;
  }
  return s;
}

CorrelationMatrix build_N(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const BoundaryCorrelations& corr) {
  if (a.size() != b.size()) throw InputError("A and B must have equal size");
  CorrelationMatrix m;
  m.kind = MatrixKind::N;
  m.rows = sorted_by_position(g, a, "A");
  m.cols = sorted_by_position(g, b, "B");
  std::vector<int> positions;
  for (int v : m.rows) positions.push_back(g.boundary_position(v) + 1);
  for (int r : m.rows) {
    std::vector<Rational> row;
    for (int c : m.cols) {
      int s = sign_exponent(g, positions, g.boundary_position(r) + 1, g.boundary_position(c) + 1);
      row.push_back(s % 2 ? Rational(-corr_of(g, corr, r, c)) : corr_of(g, corr, r, c));
    }
    m.entries.push_back(std::move(row));
  }
  return m;
}

bool is_ccw_sequence(const PlanarGraph& g, const std::vector<int>& vertices) {
  std::vector<int> pos;
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count() || !g.on_boundary(v)) return false;
    pos.push_back(g.boundary_position(v));
  }
  int descents = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    int next = pos[(i + 1) % pos.size()];
    if (next == pos[i]) return false;
    if (next < pos[i]) ++descents;
  }
  return pos.size() <= 1 || descents == 1;
}

CorrelationMatrix build_M(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                          const BoundaryCorrelations& corr) {
  if (a.size() != b.size()) throw InputError("A and B must have equal size");
  std::vector<int> seq = a;
  seq.insert(seq.end(), b.rbegin(), b.rend());
  if (!is_ccw_sequence(g, seq))
    throw InputError("A and B are not contiguous: a_1..a_k, b_k..b_1 must be counterclockwise");
  CorrelationMatrix m;
  m.kind = MatrixKind::M;
  m.rows = a;
  m.cols = b;
  for (int r : a) {
    std::vector<Rational> row;
    for (int c : b) row.push_back(corr_of(g, corr, r, c));
    m.entries.push_back(std::move(row));
  }
  return m;
}

CorrelationMatrix build_K(const PlanarGraph& g, const std::vector<int>& s, const BoundaryCorrelations& corr) {
  CorrelationMatrix m;
  m.kind = MatrixKind::K;
  m.rows = m.cols = sorted_by_position(g, s, "S");
  const std::size_t n = m.rows.size();
  m.entries.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m.entries[i][j] = corr_of(g, corr, m.rows[i], m.rows[j]);
      m.entries[j][i] = -m.entries[i][j];
    }
  return m;
}

Rational det_exact(const RationalMatrix& m) {
  require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  // clear denominators row by row, then fraction-free elimination
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class l = 1;
    for (const auto& q : m[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    scale *= l;
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].get_num() * (l / m[i][j].get_den());
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return Rational(0);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational d(a[n - 1][n - 1] * sign, scale);
  d.canonicalize();
  return d;
}

Rational pfaffian_exact(const RationalMatrix& k) {
  require_square(k);
  const std::size_t n = k.size();
  if (n % 2) throw InputError("Pfaffian needs an even dimension");
  if (n > 12) throw CapacityError("Pfaffian expansion limited to 12 rows");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (k[i][j] != -k[j][i]) throw InputError("matrix is not skew-symmetric");
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  Rational pf = pf_recursive(k, idx);
  if (pf * pf != det_exact(k)) throw std::logic_error("Pfaffian squared differs from determinant");
  return pf;
}

double det_real(RealMatrix m) {
  const std::size_t n = m.size();
  double det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i][k]) > std::abs(m[piv][k])) piv = i;
    if (m[piv][k] == 0) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      double f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

double pfaffian_real(const RealMatrix& k) {
  const std::size_t n = k.size();
  if (n % 2) throw InputError("Pfaffian needs an even dimension");
  if (n > 12) throw CapacityError("Pfaffian expansion limited to 12 rows");
  std::function<double(const std::vector<int>&)> rec = [&](const std::vector<int>& idx) -> double {
    if (idx.empty()) return 1.0;
    double total = 0;
    for (std::size_t j = 1; j < idx.size(); ++j) {
      std::vector<int> rest;
      for (std::size_t t = 1; t < idx.size(); ++t)
        if (t != j) rest.push_back(idx[t]);
      double term = k[static_cast<std::size_t>(idx[0])][static_cast<std::size_t>(idx[j])] * rec(rest);
      total += j % 2 == 1 ? term : -term;
    }
    return total;
  };
  std::vector<int> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<int>(i);
  return rec(idx);
}

std::string matrix_csv(const CorrelationMatrix& m) {
  std::string s = kind_name(m.kind);
  for (int c : m.cols) s += "," + std::to_string(c);
  s += "\n";
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    s += std::to_string(m.rows[i]);
    for (const auto& q : m.entries[i]) s += "," + to_string(q);
    s += "\n";
  }
  return s;
}

}  // namespace isingtp
