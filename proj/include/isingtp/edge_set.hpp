#pragma once

#include "isingtp/graph.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace isingtp {

// Edge subsets as bitmasks over edge ids. Every enumeration in the library
// is far beyond reach long before 64 edges, so a single word suffices.
using EdgeMask = std::uint64_t;

constexpr int kMaxMaskEdges = 64;

inline bool contains(EdgeMask m, int e) { return (m >> e) & 1U; }
inline EdgeMask bit(int e) { return EdgeMask{1} << e; }
inline int size_of(EdgeMask m) { return std::popcount(m); }

template <class F>
void for_each_edge(EdgeMask m, F&& f) {
  while (m) {
    int e = std::countr_zero(m);
    f(e);
    m &= m - 1;
  }
}

EdgeMask full_mask(const PlanarGraph& g);
void require_mask_capacity(const PlanarGraph& g);

// Vertices with odd degree in the subgraph, sorted.
std::vector<int> odd_vertices(const PlanarGraph& g, EdgeMask m);

// Connected components of the subgraph spanned by `m`. Vertices not touched
// by `m` get label -1 unless `isolated` lists them, in which case each gets
// its own singleton component.
struct Components {
  std::vector<int> label;  // per vertex
  int count = 0;           // components among touched (or listed) vertices
  int touched = 0;         // |V(m)|
};

Components components(const PlanarGraph& g, EdgeMask m, const std::vector<int>& isolated = {});

std::string mask_to_string(EdgeMask m, char sep = '+');

}  // namespace isingtp
