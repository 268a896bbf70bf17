#pragma once

#include "isingtp/directed.hpp"
#include "isingtp/matrices.hpp"

#include <vector>

namespace isingtp {

// True iff |A'| pairwise vertex-disjoint paths join A' to B'. A vertex in
// both sets is its own length-0 path and is removed from the graph first.
bool disjoint_paths_exist(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b);

struct PathCriterion {
  bool flow_exists = false;  // some alternating flow with sources A, sinks B
  Rational det;              // det N^{A,B}
  bool agrees = false;       // flow_exists == (det > 0)
};

PathCriterion alternating_path_criterion(const DirectedModification& d, const std::vector<int>& a,
                                         const std::vector<int>& b, const BoundaryCorrelations& corr);

}  // namespace isingtp
