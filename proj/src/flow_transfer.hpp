#pragma once

// Internal: frontier dynamic programming for alternating-flow partition
// functions, shared by flows.cpp.

#include "isingtp/flows.hpp"

#include <vector>

namespace isingtp::detail {

// Edges in breadth-first order from vertex 0.
std::vector<int> bfs_edge_order(const PlanarGraph& g);

// Sums flow weights edge by edge, keeping only the partial arc pattern at
// vertices whose edges are not yet all processed. With free_stubs every
// (A, B) is produced at once; otherwise only (a, b).
FlowPartitionTable transfer_table(const DirectedModification& d, bool free_stubs, BoundaryMask a, BoundaryMask b,
                                  const FlowSearchOptions& opts);

}  // namespace isingtp::detail
