#include "isingtp/corpus.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace isingtp {

PlanarGraph embed_drawing(const std::vector<Point>& pos, const std::vector<std::pair<int, int>>& edges,
                          const std::vector<Rational>& weights, Color color) {
  if (weights.size() != edges.size()) throw InputError("one weight per edge required");
  GraphData d;
  d.vertex_count = static_cast<int>(pos.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    d.edges.push_back({static_cast<int>(i), edges[i].first, edges[i].second, weights[i]});
  d.rotations.assign(pos.size(), {});
  for (const auto& e : d.edges) {
    d.rotations[static_cast<std::size_t>(e.u)].push_back(e.id);
    d.rotations[static_cast<std::size_t>(e.v)].push_back(e.id);
  }
  for (int v = 0; v < d.vertex_count; ++v) {
    auto angle = [&](int eid) {
      const Edge& e = d.edges[static_cast<std::size_t>(eid)];
      int w = e.u == v ? e.v : e.u;
      return std::atan2(pos[static_cast<std::size_t>(w)].y - pos[static_cast<std::size_t>(v)].y,
                        pos[static_cast<std::size_t>(w)].x - pos[static_cast<std::size_t>(v)].x);
    };
    auto& rot = d.rotations[static_cast<std::size_t>(v)];
    std::sort(rot.begin(), rot.end(), [&](int a, int b) { return angle(a) < angle(b); });
  }

  // Trace faces with the library's convention and keep the one with the
  // largest signed area; that is the outer face walked counterclockwise.
  const int darts = 2 * static_cast<int>(d.edges.size());
  auto tail = [&](int dd) { const Edge& e = d.edges[static_cast<std::size_t>(dd / 2)]; return dd % 2 ? e.v : e.u; };
  auto head = [&](int dd) { const Edge& e = d.edges[static_cast<std::size_t>(dd / 2)]; return dd % 2 ? e.u : e.v; };
  auto next = [&](int dd) {
    int h = head(dd);
    const auto& rot = d.rotations[static_cast<std::size_t>(h)];
    auto it = std::find(rot.begin(), rot.end(), dd / 2);
    auto p = static_cast<std::size_t>(it - rot.begin());
    int out = rot[(p + 1) % rot.size()];
    return d.edges[static_cast<std::size_t>(out)].u == h ? 2 * out : 2 * out + 1;
  };
  std::vector<char> seen(static_cast<std::size_t>(darts), 0);
  double best_area = -1e300;
  std::vector<int> best_walk;
  for (int d0 = 0; d0 < darts; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    std::vector<int> walk;
    double area = 0;
    for (int dd = d0; !seen[static_cast<std::size_t>(dd)]; dd = next(dd)) {
      seen[static_cast<std::size_t>(dd)] = 1;
      walk.push_back(tail(dd));
      const Point& a = pos[static_cast<std::size_t>(tail(dd))];
      const Point& b = pos[static_cast<std::size_t>(head(dd))];
      area += a.x * b.y - b.x * a.y;
    }
    if (area > best_area + 1e-12) {
      best_area = area;
      best_walk = walk;
    }
  }
  auto start = std::min_element(best_walk.begin(), best_walk.end());
  std::rotate(best_walk.begin(), start, best_walk.end());
  std::vector<char> listed(pos.size(), 0);
  for (int v : best_walk) {
    if (listed[static_cast<std::size_t>(v)]) continue;
    listed[static_cast<std::size_t>(v)] = 1;
    d.boundary.push_back({v, color});
  }
  return PlanarGraph(std::move(d));
}

std::vector<Rational> mixed_weights(int edges) {
  static const char* ladder[] = {"1/2", "1/3", "2/5", "3/7", "1/4", "3/5", "2/3", "5/8", "4/9", "1/5"};
  std::vector<Rational> w;
  for (int i = 0; i < edges; ++i) w.push_back(parse_rational(ladder[i % 10]));
  return w;
}

std::vector<Rational> uniform_weights(int edges, const Rational& x) {
  return std::vector<Rational>(static_cast<std::size_t>(edges), x);
}

PlanarGraph single_edge(const Rational& x) { return embed_drawing({{0, 0}, {1, 0}}, {{0, 1}}, {x}); }

PlanarGraph path_graph(int n, const std::vector<Rational>& w) {
  std::vector<Point> p;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) p.push_back({static_cast<double>(i), 0});
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return embed_drawing(p, e, w);
}

PlanarGraph cycle_graph(int n, const std::vector<Rational>& w) {
  std::vector<Point> p;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    double t = 2 * std::numbers::pi * i / n - std::numbers::pi / 2 - std::numbers::pi / n;
    p.push_back({std::cos(t), std::sin(t)});
    e.emplace_back(i, (i + 1) % n);
  }
  return embed_drawing(p, e, w);
}

PlanarGraph k4_graph(const std::vector<Rational>& w) {
  return embed_drawing({{0, 0}, {4, 0}, {2, 3.5}, {2, 1.2}}, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 3}, {2, 3}}, w);
}

PlanarGraph grid_graph(int rows, int cols, const std::vector<Rational>& w) {
  std::vector<Point> p;
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) p.push_back({static_cast<double>(c), static_cast<double>(r)});
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      int v = r * cols + c;
      if (c + 1 < cols) e.emplace_back(v, v + 1);
      if (r + 1 < rows) e.emplace_back(v, v + cols);
    }
  return embed_drawing(p, e, w);
}

PlanarGraph theta_graph(const std::vector<Rational>& w) {
  return embed_drawing({{0, 0}, {2, 0}, {1, 1}, {1, 0}, {1, -1}},
                       {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}, w);
}

PlanarGraph wheel_graph(int n, const std::vector<Rational>& w) {
  std::vector<Point> p{{0, 0}};
  std::vector<std::pair<int, int>> e;
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    double t = 2 * std::numbers::pi * i / rim + 0.3;
    p.push_back({std::cos(t), std::sin(t)});
  }
  for (int i = 0; i < rim; ++i) e.emplace_back(1 + i, 1 + (i + 1) % rim);
  for (int i = 0; i < rim; ++i) e.emplace_back(0, 1 + i);
  return embed_drawing(p, e, w);
}

PlanarGraph bowtie_graph(const std::vector<Rational>& w) {
  return embed_drawing({{0, 0}, {0, 2}, {1, 1}, {2, 2}, {2, 0}},
                       {{0, 2}, {1, 2}, {0, 1}, {2, 3}, {2, 4}, {3, 4}}, w);
}

PlanarGraph dumbbell_graph(const std::vector<Rational>& w) {
  return embed_drawing({{0, 0}, {0, 2}, {1, 1}, {2, 1}, {3, 2}, {3, 0}},
                       {{0, 2}, {1, 2}, {0, 1}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}, w);
}

std::vector<NamedGraph> identity_corpus() {
  std::vector<NamedGraph> c;
  c.push_back({"single_edge", single_edge(Rational(1, 2))});
  c.push_back({"path3", path_graph(3, mixed_weights(2))});
  c.push_back({"triangle", cycle_graph(3, mixed_weights(3))});
  c.push_back({"cycle4", cycle_graph(4, mixed_weights(4))});
  c.push_back({"k4", k4_graph(mixed_weights(6))});
  c.push_back({"grid3x3", grid_graph(3, 3, mixed_weights(12))});
  c.push_back({"theta", theta_graph(mixed_weights(6))});
  c.push_back({"wheel5", wheel_graph(5, mixed_weights(8))});
  return c;
}

std::vector<std::vector<Color>> test_colorings(const PlanarGraph& g) {
  std::vector<Color> open(static_cast<std::size_t>(g.boundary_size()), Color::Open);
  std::vector<Color> alt = open;
  for (std::size_t i = 0; i < alt.size(); ++i) alt[i] = i % 2 ? Color::Filled : Color::Open;
  return {open, alt};
}

}  // namespace isingtp
