#pragma once

#include "isingtp/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace isingtp {

struct Point {
  double x = 0;
  double y = 0;
};

// Builds a PlanarGraph from a straight-line drawing: rotations sorted by
// angle, boundary read off the outer face (positive signed area) starting at
// its lowest-numbered vertex. All boundary vertices get `color`.
PlanarGraph embed_drawing(const std::vector<Point>& pos, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<Rational>& weights, Color color = Color::Open);

// Weight ladder used for "mixed rational weights": cycled over edge ids.
std::vector<Rational> mixed_weights(int edges);
std::vector<Rational> uniform_weights(int edges, const Rational& x);

PlanarGraph single_edge(const Rational& x);
PlanarGraph path_graph(int vertices, const std::vector<Rational>& w);
PlanarGraph cycle_graph(int vertices, const std::vector<Rational>& w);
PlanarGraph k4_graph(const std::vector<Rational>& w);
// rows x cols vertices, vertex id r * cols + c
PlanarGraph grid_graph(int rows, int cols, const std::vector<Rational>& w);
// two poles joined by three paths of two edges each (5 vertices, 6 edges)
PlanarGraph theta_graph(const std::vector<Rational>& w);
// hub joined to every vertex of a (n-1)-cycle; n vertices total
PlanarGraph wheel_graph(int vertices, const std::vector<Rational>& w);
// two triangles sharing one cut vertex
PlanarGraph bowtie_graph(const std::vector<Rational>& w);
// two triangles joined by a bridge
PlanarGraph dumbbell_graph(const std::vector<Rational>& w);

struct NamedGraph {
  std::string name;
  PlanarGraph graph;
};

// The identity-test corpus with mixed weights: single edge, path3,
// triangle, 4-cycle, K4, 3x3 grid, theta, wheel5.
std::vector<NamedGraph> identity_corpus();

// Alternating colorings for a graph's boundary: all-open and alternating o/b.
std::vector<std::vector<Color>> test_colorings(const PlanarGraph& g);

}  // namespace isingtp
