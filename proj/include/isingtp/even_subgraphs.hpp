#pragma once

#include "isingtp/edge_set.hpp"
#include "isingtp/graph.hpp"
#include "isingtp/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace isingtp {

// Cycle-space basis from a BFS spanning tree: one fundamental cycle per
// non-tree edge. Every edge set with a prescribed odd-degree set is a coset
// of the span of `basis`.
struct CycleSpace {
  EdgeMask tree = 0;
  std::vector<EdgeMask> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
};

CycleSpace cycle_space(const PlanarGraph& g);

// One edge set whose odd-degree vertex set is exactly `sources`, built by
// pairing the sources along tree paths; nullopt when |sources| is odd.
std::optional<EdgeMask> particular_subgraph(const PlanarGraph& g, const CycleSpace& cs,
                                            const std::vector<int>& sources);

inline constexpr int kMaxCycleRank = 28;

// Visits every member of E_A exactly once, in Gray-code order over the
// cycle basis. Throws CapacityError above the cycle-rank cap.
void enumerate_even_subgraphs(const PlanarGraph& g, const std::vector<int>& sources,
                              const std::function<void(EdgeMask)>& visit);
std::vector<EdgeMask> even_subgraphs(const PlanarGraph& g, const std::vector<int>& sources);

// S_A = sum over E_A of prod x_e. The default entry point splits the coset
// across OpenMP threads; the serial version is the reference.
Rational even_polynomial(const PlanarGraph& g, const std::vector<int>& sources);
Rational even_polynomial_serial(const PlanarGraph& g, const std::vector<int>& sources);

// <sigma_a sigma_b> = S_{a,b} / S_empty, and 1 when a == b.
Rational correlation(const PlanarGraph& g, int a, int b);

// All pairwise boundary correlations, indexed by boundary position.
std::vector<std::vector<Rational>> boundary_correlations(const PlanarGraph& g);

// Product of x_e over a subset.
Rational subset_weight(const PlanarGraph& g, EdgeMask m);

}  // namespace isingtp
