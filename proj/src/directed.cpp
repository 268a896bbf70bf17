#include "isingtp/directed.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>

namespace isingtp {

DirectedModification::DirectedModification(PlanarGraph g, std::optional<std::vector<bool>> middle_from_u,
                                           std::optional<std::vector<OuterCorner>> corners)
    : graph_(std::move(g)) {
  const int m = graph_.edge_count();
  if (middle_from_u && static_cast<int>(middle_from_u->size()) != m)
    throw InputError("middle orientation list must have one entry per edge");

  for (int e = 0; e < m; ++e) {
    const Edge& ed = graph_.edge(e);
    bool from_u = middle_from_u ? (*middle_from_u)[static_cast<std::size_t>(e)] : ed.u < ed.v;
    int t = from_u ? ed.u : ed.v;
    int h = from_u ? ed.v : ed.u;
    Rational x2 = ed.x * ed.x;
    Rational mid = ed.x / (1 - x2);
    Rational side = ed.x / 2;
    arcs_.push_back({3 * e, ArcKind::Middle, e, t, h, mid});
    arcs_.push_back({3 * e + 1, ArcKind::Side1, e, h, t, side});
    arcs_.push_back({3 * e + 2, ArcKind::Side2, e, h, t, side});
  }
  const int n = graph_.vertex_count();
  for (int p = 0; p < graph_.boundary_size(); ++p) {
    int w = graph_.boundary()[static_cast<std::size_t>(p)].vertex;
    arcs_.push_back({3 * m + 2 * p, ArcKind::Source, p, n + 2 * p, w, Rational(1)});
    arcs_.push_back({3 * m + 2 * p + 1, ArcKind::Sink, p, w, n + 2 * p + 1, Rational(1)});
  }

  if (corners) {
    if (static_cast<int>(corners->size()) != graph_.boundary_size())
      throw InputError("one stub corner per boundary vertex required");
    for (int p = 0; p < graph_.boundary_size(); ++p) {
      const auto& c = (*corners)[static_cast<std::size_t>(p)];
      const auto& allowed = graph_.embedding().all_corners[static_cast<std::size_t>(p)];
      bool ok = std::any_of(allowed.begin(), allowed.end(),
                            [&](const OuterCorner& a) { return a.vertex == c.vertex && a.after_edge == c.after_edge; });
      if (!ok) throw InputError("stub corner for boundary position " + std::to_string(p) + " is not an outer-face corner");
    }
    corners_ = *corners;
  } else {
    for (int p = 0; p < graph_.boundary_size(); ++p) corners_.push_back(graph_.stub_corner(p));
  }

  // Bundle order counterclockwise: (s2, m, s1) at the edge's u endpoint and
  // (s1, m, s2) at its v endpoint, so the side arcs flank the middle arc on
  // opposite geometric sides.
  rotation_.assign(static_cast<std::size_t>(n), {});
  for (int v = 0; v < n; ++v) {
    auto& rot = rotation_[static_cast<std::size_t>(v)];
    for (int e : graph_.rotation(v)) {
      const Edge& ed = graph_.edge(e);
      if (ed.u == v) {
        rot.insert(rot.end(), {side2(e), middle(e), side1(e)});
      } else {
        rot.insert(rot.end(), {side1(e), middle(e), side2(e)});
      }
      for (int p = 0; p < graph_.boundary_size(); ++p) {
        const auto& c = corners_[static_cast<std::size_t>(p)];
        if (c.vertex != v || c.after_edge != e) continue;
        // counterclockwise inside the corner: sink before source for open
        // vertices, source before sink for filled ones
        if (graph_.color(v) == Color::Open)
          rot.insert(rot.end(), {sink_arc(p), source_arc(p)});
        else
          rot.insert(rot.end(), {source_arc(p), sink_arc(p)});
      }
    }
  }
}

}  // namespace isingtp
