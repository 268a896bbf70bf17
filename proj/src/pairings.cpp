#include "isingtp/pairings.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace isingtp {

namespace {

bool strictly_between(int x, int lo, int hi) { return x > lo && x < hi; }

const Rational& corr_at(const PlanarGraph& g, const BoundaryCorrelations& corr, int a, int b) {
  return corr[static_cast<std::size_t>(g.boundary_position(a))][static_cast<std::size_t>(g.boundary_position(b))];
}

void require_boundary(const PlanarGraph& g, const std::vector<int>& vs, const char* what) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InputError(std::string(what) + " has repeated vertices");
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count() || !g.on_boundary(v))
      throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " is not a boundary vertex");
}

}  // namespace

std::vector<DiskPoint> disk_placement(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  require_boundary(g, a, "A");
  require_boundary(g, b, "B");
  auto in = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  std::vector<DiskPoint> pts;
  for (const auto& bv : g.boundary()) {
    const bool ia = in(a, bv.vertex), ib = in(b, bv.vertex);
    if (ia && ib) {
      if (bv.color == Color::Open) pts.insert(pts.end(), {{bv.vertex, false}, {bv.vertex, true}});
      else pts.insert(pts.end(), {{bv.vertex, true}, {bv.vertex, false}});
    } else if (ia) {
      pts.push_back({bv.vertex, true});
    } else if (ib) {
      pts.push_back({bv.vertex, false});
    }
  }
  return pts;
}

int xing(const Chords& chords) {
  int count = 0;
  for (std::size_t i = 0; i < chords.size(); ++i)
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      int p = std::min(chords[i].first, chords[i].second), q = std::max(chords[i].first, chords[i].second);
      int r = chords[j].first, s = chords[j].second;
      if (strictly_between(r, p, q) != strictly_between(s, p, q)) ++count;
    }
  return count;
}

Rational expand_det_via_pairings(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                                 const BoundaryCorrelations& corr) {
  if (a.size() != b.size()) throw InputError("A and B must have equal size");
  if (a.size() > 8) throw CapacityError("bijection expansion limited to k <= 8");
  const auto pts = disk_placement(g, a, b);
  std::vector<int> a_idx, b_idx;
  for (std::size_t i = 0; i < pts.size(); ++i) (pts[i].in_a ? a_idx : b_idx).push_back(static_cast<int>(i));
  std::vector<int> perm(b_idx.size());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    Chords chords;
    Rational term = 1;
    for (std::size_t i = 0; i < a_idx.size(); ++i) {
      int p = a_idx[i], q = b_idx[static_cast<std::size_t>(perm[i])];
      chords.emplace_back(p, q);
      term *= corr_at(g, corr, pts[static_cast<std::size_t>(p)].vertex, pts[static_cast<std::size_t>(q)].vertex);
    }
    if (xing(chords) % 2) total -= term;
    else total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rational expand_pf_via_pairings(const PlanarGraph& g, const std::vector<int>& s, const BoundaryCorrelations& corr) {
  if (s.size() % 2) throw InputError("pairings need an even number of points");
  if (s.size() > 12) throw CapacityError("pairing expansion limited to |S| <= 12");
  std::vector<int> pts;
  for (const auto& p : disk_placement(g, s, {})) pts.push_back(p.vertex);
  Rational total = 0;
  Chords chords;
  std::vector<char> used(pts.size(), 0);
  std::function<void(Rational)> rec = [&](Rational term) {
    std::size_t first = 0;
    while (first < pts.size() && used[first]) ++first;
    if (first == pts.size()) {
      if (xing(chords) % 2) total -= term;
      else total += term;
      return;
    }
    used[first] = 1;
    for (std::size_t j = first + 1; j < pts.size(); ++j) {
      if (used[j]) continue;
      used[j] = 1;
      chords.emplace_back(static_cast<int>(first), static_cast<int>(j));
      rec(term * corr_at(g, corr, pts[first], pts[j]));
      chords.pop_back();
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(Rational(1));
  return total;
}

}  // namespace isingtp
