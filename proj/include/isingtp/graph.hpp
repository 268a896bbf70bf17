#pragma once

#include "isingtp/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace isingtp {

// Boundary coloring. `Open` is the white class (sink stub before source
// stub counterclockwise), `Filled` the black class.
enum class Color { Open, Filled };

char color_char(Color c);

struct Edge {
  int id = 0;
  int u = 0;
  int v = 0;
  Rational x;  // tanh of the coupling, strictly inside (0, 1)
};

struct BoundaryVertex {
  int vertex = 0;
  Color color = Color::Open;
};

// Unvalidated graph description, as read from a file or built in code.
struct GraphData {
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotations;  // ccw edge ids per vertex
  std::vector<BoundaryVertex> boundary;     // ccw around the outer face
};

// A corner of the outer face at a vertex: stubs are inserted into the
// rotation right after `after_edge` (counterclockwise).
struct OuterCorner {
  int vertex = 0;
  int after_edge = 0;
};

struct EmbeddingReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  bool euler_ok = false;
  bool boundary_ok = false;
  int outer_face = -1;
  // Outer-face corners chosen for each boundary position, and every outer
  // corner available at each boundary position.
  std::vector<OuterCorner> chosen_corners;
  std::vector<std::vector<OuterCorner>> all_corners;
  std::string message;

  bool ok() const { return euler_ok && boundary_ok; }
};

// Face tracing and boundary matching on structurally consistent data.
// Never throws for embedding problems; the report carries the verdict.
EmbeddingReport validate_embedding(const GraphData& data);

class PlanarGraph {
 public:
  // Validates structure, connectivity and embedding. Throws InputError /
  // EmbeddingError with a description of the first violation found.
  explicit PlanarGraph(GraphData data);

  int vertex_count() const { return data_.vertex_count; }
  int edge_count() const { return static_cast<int>(data_.edges.size()); }
  const Edge& edge(int id) const { return data_.edges[static_cast<std::size_t>(id)]; }
  std::span<const Edge> edges() const { return data_.edges; }
  const std::vector<int>& rotation(int v) const { return data_.rotations[static_cast<std::size_t>(v)]; }
  std::span<const BoundaryVertex> boundary() const { return data_.boundary; }
  int boundary_size() const { return static_cast<int>(data_.boundary.size()); }

  // 0-based position of v in the boundary list, or -1.
  int boundary_position(int v) const { return boundary_pos_[static_cast<std::size_t>(v)]; }
  bool on_boundary(int v) const { return boundary_position(v) >= 0; }
  Color color(int v) const;
  int other_end(int edge_id, int v) const;

  const EmbeddingReport& embedding() const { return report_; }
  const OuterCorner& stub_corner(int boundary_pos) const {
    return report_.chosen_corners[static_cast<std::size_t>(boundary_pos)];
  }

  const GraphData& data() const { return data_; }

  // Same graph with a different boundary coloring (one entry per boundary position).
  PlanarGraph recolored(const std::vector<Color>& colors) const;
  // Same graph with uniform edge weight.
  PlanarGraph reweighted(const Rational& x) const;

 private:
  GraphData data_;
  std::vector<int> boundary_pos_;
  EmbeddingReport report_;
};

// JSON graph document (see README for the schema).
PlanarGraph parse_graph(std::string_view text);
PlanarGraph load_graph(const std::string& path);
std::string graph_to_json(const PlanarGraph& g);

}  // namespace isingtp
