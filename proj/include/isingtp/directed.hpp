#pragma once

#include "isingtp/graph.hpp"
#include "isingtp/rational.hpp"

#include <optional>
#include <vector>

namespace isingtp {

enum class ArcKind { Middle, Side1, Side2, Source, Sink };

// A directed edge of the modification. Vertices 0..n-1 are the base graph;
// boundary position p owns source n + 2p and sink n + 2p + 1.
struct Arc {
  int id = 0;
  ArcKind kind = ArcKind::Middle;
  int base = -1;  // base edge id, or boundary position for stubs
  int tail = 0;
  int head = 0;
  Rational weight;
};

// Each base edge becomes a middle arc and two opposite side arcs; each
// boundary vertex w gains a source arc (w+, w) and a sink arc (w, w-)
// placed in an outer-face corner of w.
class DirectedModification {
 public:
  // `middle_from_u[e]` orients the middle arc of e from e.u to e.v when true;
  // the default orients every middle arc from the lower to the higher
  // endpoint id. `corners` overrides the outer-face corner used for the
  // stubs at each boundary position.
  explicit DirectedModification(PlanarGraph g, std::optional<std::vector<bool>> middle_from_u = std::nullopt,
                                std::optional<std::vector<OuterCorner>> corners = std::nullopt);

  const PlanarGraph& base() const { return graph_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_[static_cast<std::size_t>(id)]; }

  int middle(int e) const { return 3 * e; }
  int side1(int e) const { return 3 * e + 1; }
  int side2(int e) const { return 3 * e + 2; }
  int source_arc(int boundary_pos) const { return 3 * graph_.edge_count() + 2 * boundary_pos; }
  int sink_arc(int boundary_pos) const { return 3 * graph_.edge_count() + 2 * boundary_pos + 1; }
  int source_vertex(int boundary_pos) const { return graph_.vertex_count() + 2 * boundary_pos; }
  int sink_vertex(int boundary_pos) const { return graph_.vertex_count() + 2 * boundary_pos + 1; }

  int middle_tail(int e) const { return arc(middle(e)).tail; }
  int middle_head(int e) const { return arc(middle(e)).head; }

  // Counterclockwise arc ids around a base vertex.
  const std::vector<int>& rotation(int v) const { return rotation_[static_cast<std::size_t>(v)]; }
  const std::vector<OuterCorner>& corners() const { return corners_; }

 private:
  PlanarGraph graph_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> rotation_;
  std::vector<OuterCorner> corners_;
};

}  // namespace isingtp
