#pragma once

#include "isingtp/graph.hpp"
#include "isingtp/matrices.hpp"

#include <utility>
#include <vector>

namespace isingtp {

// A point on the disk boundary: a vertex of A or of B. A vertex in both sets
// contributes two points; for an open vertex the A copy comes right after
// the B copy counterclockwise, for a filled vertex right before.
struct DiskPoint {
  int vertex = 0;
  bool in_a = true;
};

std::vector<DiskPoint> disk_placement(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b);

// Chords join indices into a cyclic sequence of points.
using Chords = std::vector<std::pair<int, int>>;

// Number of crossing chord pairs; chords {p,q}, {r,s} cross iff exactly
// one of r, s lies strictly between p and q.
int xing(const Chords& chords);

// Signed sums over bijections A -> B and over pairings of S.
Rational expand_det_via_pairings(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b,
                                 const BoundaryCorrelations& corr);
Rational expand_pf_via_pairings(const PlanarGraph& g, const std::vector<int>& s, const BoundaryCorrelations& corr);

}  // namespace isingtp
