#pragma once

#include "isingtp/directed.hpp"
#include "isingtp/omega.hpp"
#include "isingtp/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace isingtp {

// Local configuration of a flow on the three arcs of one base edge. The
// combination "both side arcs without the middle arc" cannot alternate and
// has no representation.
enum class LocalState : std::uint8_t { Empty, M, S1, S2, S1S2M, MS1, MS2 };
inline constexpr int kLocalStates = 7;

const char* state_name(LocalState s);
bool has_middle(LocalState s);
bool has_side1(LocalState s);
bool has_side2(LocalState s);

struct AlternatingFlow {
  std::vector<LocalState> states;  // per base edge
  std::vector<int> sources;        // boundary vertices whose source arc is used
  std::vector<int> sinks;          // boundary vertices whose sink arc is used
};

// Bitmask over boundary positions.
using BoundaryMask = std::uint64_t;

BoundaryMask boundary_mask(const PlanarGraph& g, const std::vector<int>& vertices);
std::vector<int> boundary_vertices(const PlanarGraph& g, BoundaryMask m);

struct FlowSearchOptions {
  std::uint64_t node_budget = 1'000'000'000ULL;
  int split_depth = 4;  // prefix depth handed to OpenMP workers
  int max_sources = 64;  // table searches skip flows with more sources or sinks
};

// Visits every alternating flow with source set A and sink set B (boundary
// vertices) exactly once, with its weight. Return false from the visitor to
// stop early; the function then returns false.
bool enumerate_flows(const DirectedModification& d, const std::vector<int>& sources, const std::vector<int>& sinks,
                     const std::function<bool(const AlternatingFlow&, const Rational&)>& visit,
                     const FlowSearchOptions& opts = {});

// Weight 2^(|A| + |F| - |V(F)|) * prod x_arc, evaluated from the arc set.
Rational flow_weight(const DirectedModification& d, const AlternatingFlow& f);
// Balance and alternation at every base vertex, evaluated from the arc set.
bool is_alternating_flow(const DirectedModification& d, const AlternatingFlow& f);

Rational z_aflow(const DirectedModification& d, const std::vector<int>& sources, const std::vector<int>& sinks,
                 const FlowSearchOptions& opts = {});
Rational z_aflow_serial(const DirectedModification& d, const std::vector<int>& sources,
                        const std::vector<int>& sinks, const FlowSearchOptions& opts = {});

// Every partition function Z^{A,B} at once, keyed by (A, B) boundary masks;
// pairs with no flows are absent.
using FlowPartitionTable = std::map<std::pair<BoundaryMask, BoundaryMask>, Rational>;
FlowPartitionTable z_aflow_table(const DirectedModification& d, const FlowSearchOptions& opts = {});
FlowPartitionTable z_aflow_table_serial(const DirectedModification& d, const FlowSearchOptions& opts = {});

// True iff some alternating flow exists for (A, B); stops at the first one.
bool has_alternating_flow(const DirectedModification& d, const std::vector<int>& sources,
                          const std::vector<int>& sinks, const FlowSearchOptions& opts = {});

OmegaPair project_flow(const AlternatingFlow& f);

// Total flow weight per projected omega.
std::map<OmegaPair, Rational> flow_pushforward(const DirectedModification& d, const std::vector<int>& sources,
                                               const std::vector<int>& sinks, const FlowSearchOptions& opts = {});

// Number of components of omega meeting A u B; an untouched vertex of A u B
// is its own component.
int touching_components(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                        const std::vector<int>& sinks);

// 2^(|A| - k'(omega)) |E_empty(omega)| prod x prod x^2 prod (1 - x^2)
Rational induced_flow_weight(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                             const std::vector<int>& sinks);

// Within every component of omega, sources and sinks met around the outer
// face alternate (stub order inside a corner follows the boundary color).
bool interlaces(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                const std::vector<int>& sinks);

// CSV "edge_id,state" lines for one flow.
std::string flow_dump_csv(const AlternatingFlow& f);

}  // namespace isingtp
