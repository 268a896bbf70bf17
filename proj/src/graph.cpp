#include "isingtp/graph.hpp"

#include "isingtp/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace isingtp {

char color_char(Color c) { return c == Color::Open ? 'o' : 'b'; }

namespace {

struct Dart {
  int edge;
  int tail;
  int head;
};

Dart make_dart(const GraphData& g, int d) {
  const Edge& e = g.edges[static_cast<std::size_t>(d / 2)];
  return d % 2 == 0 ? Dart{e.id, e.u, e.v} : Dart{e.id, e.v, e.u};
}

// Next dart along a face: at the head, leave along the edge that follows
// the arrival edge counterclockwise. The face lies to the right of each
// dart, so the outer face is walked with the graph on its left, which is
// the counterclockwise boundary order.
int next_dart(const GraphData& g, const std::vector<std::vector<int>>& pos_in_rot, int d) {
  Dart cur = make_dart(g, d);
  const auto& rot = g.rotations[static_cast<std::size_t>(cur.head)];
  int deg = static_cast<int>(rot.size());
  int p = pos_in_rot[static_cast<std::size_t>(cur.head)][static_cast<std::size_t>(cur.edge)];
  int out = rot[static_cast<std::size_t>((p + 1) % deg)];
  const Edge& oe = g.edges[static_cast<std::size_t>(out)];
  return oe.u == cur.head ? 2 * out : 2 * out + 1;
}

}  // namespace

EmbeddingReport validate_embedding(const GraphData& g) {
  EmbeddingReport rep;
  rep.vertices = g.vertex_count;
  rep.edges = static_cast<int>(g.edges.size());

  // position of each edge within each rotation (sparse by edge id)
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(g.vertex_count),
                                    std::vector<int>(g.edges.size(), -1));
  for (int v = 0; v < g.vertex_count; ++v) {
    const auto& rot = g.rotations[static_cast<std::size_t>(v)];
    for (std::size_t i = 0; i < rot.size(); ++i)
      pos[static_cast<std::size_t>(v)][static_cast<std::size_t>(rot[i])] = static_cast<int>(i);
  }

  const int darts = 2 * rep.edges;
  std::vector<int> face_of(static_cast<std::size_t>(darts), -1);
  std::vector<std::vector<int>> faces;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (face_of[static_cast<std::size_t>(d0)] >= 0) continue;
    std::vector<int> walk;
    int d = d0;
    while (face_of[static_cast<std::size_t>(d)] < 0) {
      face_of[static_cast<std::size_t>(d)] = static_cast<int>(faces.size());
      walk.push_back(d);
      d = next_dart(g, pos, d);
    }
    faces.push_back(std::move(walk));
  }
  rep.faces = rep.edges == 0 ? 1 : static_cast<int>(faces.size());
  rep.euler_ok = rep.vertices - rep.edges + rep.faces == 2;
  if (!rep.euler_ok) {
    rep.message = "Euler check failed: V - E + F = " + std::to_string(rep.vertices - rep.edges + rep.faces) +
                  " (rotation system is not planar)";
    return rep;
  }

  const std::size_t n = g.boundary.size();
  if (n == 0) {
    rep.message = "empty boundary";
    return rep;
  }
  std::set<int> wanted;
  for (const auto& b : g.boundary) wanted.insert(b.vertex);

  for (std::size_t f = 0; f < faces.size() && !rep.boundary_ok; ++f) {
    const auto& walk = faces[f];
    std::set<int> present;
    for (int d : walk) present.insert(make_dart(g, d).tail);
    if (present != wanted) continue;
    const std::size_t len = walk.size();
    auto tail_at = [&](std::size_t i) { return make_dart(g, walk[i % len]).tail; };
    for (std::size_t start = 0; start < len && !rep.boundary_ok; ++start) {
      if (tail_at(start) != g.boundary[0].vertex) continue;
      std::vector<std::size_t> picked{start};
      std::size_t cursor = start;
      bool ok = true;
      for (std::size_t j = 1; j < n && ok; ++j) {
        std::size_t p = cursor + 1;
        while (p < start + len && tail_at(p) != g.boundary[j].vertex) ++p;
        if (p >= start + len) ok = false;
        else picked.push_back(cursor = p);
      }
      if (!ok) continue;
      rep.boundary_ok = true;
      rep.outer_face = static_cast<int>(f);
      for (std::size_t j = 0; j < n; ++j) {
        // the corner at a visit sits just after the arrival edge
        Dart arrive = make_dart(g, walk[(picked[j] + len - 1) % len]);
        rep.chosen_corners.push_back({arrive.head, arrive.edge});
        std::vector<OuterCorner> all;
        for (int d : walk) {
          Dart dd = make_dart(g, d);
          if (dd.head == g.boundary[j].vertex) all.push_back({dd.head, dd.edge});
        }
        rep.all_corners.push_back(std::move(all));
      }
    }
  }
  if (!rep.boundary_ok)
    rep.message = "boundary list is not the counterclockwise walk of any face of the embedding";
  return rep;
}

PlanarGraph::PlanarGraph(GraphData data) : data_(std::move(data)) {
  const int n = data_.vertex_count;
  if (n <= 0) throw InputError("graph must have at least one vertex");
  if (data_.edges.empty()) throw InputError("graph must have at least one edge");
  const int m = edge_count();

  std::sort(data_.edges.begin(), data_.edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::set<std::pair<int, int>> seen_pairs;
  for (int i = 0; i < m; ++i) {
    const Edge& e = data_.edges[static_cast<std::size_t>(i)];
    std::string where = "edge " + std::to_string(e.id);
    if (e.id != i) throw InputError("edge ids must be dense 0.." + std::to_string(m - 1) + "; found " + std::to_string(e.id));
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) throw InputError(where + ": endpoint out of range");
    if (e.u == e.v) throw InputError(where + ": loops are not supported");
    auto key = std::minmax(e.u, e.v);
    if (!seen_pairs.insert(key).second) throw InputError(where + ": parallel edges are not supported");
    if (e.x <= 0 || e.x >= 1) throw InputError(where + ": weight " + to_string(e.x) + " outside (0,1)");
  }

  if (static_cast<int>(data_.rotations.size()) != n)
    throw InputError("rotations must list all " + std::to_string(n) + " vertices");
  for (int v = 0; v < n; ++v) {
    std::vector<int> expected;
    for (const auto& e : data_.edges)
      if (e.u == v || e.v == v) expected.push_back(e.id);
    std::vector<int> got = data_.rotations[static_cast<std::size_t>(v)];
    std::sort(got.begin(), got.end());
    if (got != expected)
      throw EmbeddingError("rotation at vertex " + std::to_string(v) +
                           " must list each incident edge exactly once");
  }

  // connectivity
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int comps = n;
  for (const auto& e : data_.edges) {
    int a = find(e.u), b = find(e.v);
    if (a != b) { parent[static_cast<std::size_t>(a)] = b; --comps; }
  }
  if (comps != 1) throw InputError("graph is disconnected (" + std::to_string(comps) + " components)");

  boundary_pos_.assign(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < data_.boundary.size(); ++i) {
    int v = data_.boundary[i].vertex;
    if (v < 0 || v >= n) throw InputError("boundary entry " + std::to_string(i) + ": vertex out of range");
    if (boundary_pos_[static_cast<std::size_t>(v)] >= 0)
      throw InputError("boundary entry " + std::to_string(i) + ": vertex " + std::to_string(v) + " listed twice");
    boundary_pos_[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }

  report_ = validate_embedding(data_);
  if (!report_.ok()) throw EmbeddingError(report_.message);
}

Color PlanarGraph::color(int v) const {
  int p = boundary_position(v);
  if (p < 0) throw InputError("vertex " + std::to_string(v) + " is not on the boundary");
  return data_.boundary[static_cast<std::size_t>(p)].color;
}

int PlanarGraph::other_end(int edge_id, int v) const {
  const Edge& e = edge(edge_id);
  return e.u == v ? e.v : e.u;
}

PlanarGraph PlanarGraph::recolored(const std::vector<Color>& colors) const {
  if (colors.size() != data_.boundary.size())
    throw InputError("coloring must have one entry per boundary vertex");
  GraphData d = data_;
  for (std::size_t i = 0; i < colors.size(); ++i) d.boundary[i].color = colors[i];
  return PlanarGraph(std::move(d));
}

PlanarGraph PlanarGraph::reweighted(const Rational& x) const {
  GraphData d = data_;
  for (auto& e : d.edges) e.x = x;
  return PlanarGraph(std::move(d));
}

namespace {

int as_int(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<int>();
}

}  // namespace

PlanarGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  for (const char* key : {"vertices", "edges", "rotations", "boundary"})
    if (!doc.contains(key)) throw InputError(std::string("missing field '") + key + "'");

  GraphData g;
  g.vertex_count = as_int(doc["vertices"], "vertices");
  if (g.vertex_count <= 0) throw InputError("vertices: must be positive");
  if (!doc["edges"].is_array()) throw InputError("edges: expected an array");
  std::size_t idx = 0;
  for (const auto& je : doc["edges"]) {
    std::string where = "edges[" + std::to_string(idx++) + "]";
    if (!je.is_object()) throw InputError(where + ": expected an object");
    for (const char* key : {"id", "u", "v", "x"})
      if (!je.contains(key)) throw InputError(where + ": missing field '" + key + "'");
    Edge e;
    e.id = as_int(je["id"], where + ".id");
    e.u = as_int(je["u"], where + ".u");
    e.v = as_int(je["v"], where + ".v");
    if (!je["x"].is_string()) throw InputError(where + ".x: expected a rational string \"p/q\"");
    try {
      e.x = parse_rational(je["x"].get<std::string>());
    } catch (const InputError& err) {
      throw InputError(where + ".x: " + err.what());
    }
    g.edges.push_back(std::move(e));
  }

  if (!doc["rotations"].is_object()) throw InputError("rotations: expected an object");
  g.rotations.assign(static_cast<std::size_t>(g.vertex_count), {});
  std::vector<bool> have(static_cast<std::size_t>(g.vertex_count), false);
  for (const auto& [key, val] : doc["rotations"].items()) {
    std::string where = "rotations[\"" + key + "\"]";
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(key, &used);
      if (used != key.size()) v = -1;
    } catch (const std::exception&) {
      v = -1;
    }
    if (v < 0 || v >= g.vertex_count) throw InputError(where + ": not a vertex id");
    if (!val.is_array()) throw InputError(where + ": expected an array of edge ids");
    for (const auto& x : val) g.rotations[static_cast<std::size_t>(v)].push_back(as_int(x, where));
    have[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 0; v < g.vertex_count; ++v)
    if (!have[static_cast<std::size_t>(v)]) throw InputError("rotations: vertex " + std::to_string(v) + " missing");

  if (!doc["boundary"].is_array()) throw InputError("boundary: expected an array");
  idx = 0;
  for (const auto& jb : doc["boundary"]) {
    std::string where = "boundary[" + std::to_string(idx++) + "]";
    if (!jb.is_object() || !jb.contains("v") || !jb.contains("color"))
      throw InputError(where + ": expected {\"v\": int, \"color\": \"o\"|\"b\"}");
    BoundaryVertex b;
    b.vertex = as_int(jb["v"], where + ".v");
    std::string c = jb["color"].is_string() ? jb["color"].get<std::string>() : "";
    if (c == "o") b.color = Color::Open;
    else if (c == "b") b.color = Color::Filled;
    else throw InputError(where + ".color: expected \"o\" or \"b\"");
    g.boundary.push_back(b);
  }
  return PlanarGraph(std::move(g));
}

PlanarGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph(ss.str());
}

std::string graph_to_json(const PlanarGraph& g) {
  nlohmann::ordered_json doc;
  doc["vertices"] = g.vertex_count();
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    doc["edges"].push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}, {"x", to_string(e.x)}});
  doc["rotations"] = nlohmann::ordered_json::object();
  for (int v = 0; v < g.vertex_count(); ++v) doc["rotations"][std::to_string(v)] = g.rotation(v);
  doc["boundary"] = nlohmann::ordered_json::array();
  for (const auto& b : g.boundary())
    doc["boundary"].push_back({{"v", b.vertex}, {"color", std::string(1, color_char(b.color))}});
  return doc.dump(1);
}

}  // namespace isingtp
