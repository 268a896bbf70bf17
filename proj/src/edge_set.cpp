#include "isingtp/edge_set.hpp"

#include "isingtp/errors.hpp"

#include <numeric>

namespace isingtp {

EdgeMask full_mask(const PlanarGraph& g) {
  int m = g.edge_count();
  return m == 64 ? ~EdgeMask{0} : (EdgeMask{1} << m) - 1;
}

void require_mask_capacity(const PlanarGraph& g) {
  if (g.edge_count() > kMaxMaskEdges)
    throw CapacityError("edge-set enumeration supports at most 64 edges (graph has " +
                        std::to_string(g.edge_count()) + ")");
}

std::vector<int> odd_vertices(const PlanarGraph& g, EdgeMask m) {
  std::vector<char> parity(static_cast<std::size_t>(g.vertex_count()), 0);
  for_each_edge(m, [&](int e) {
    parity[static_cast<std::size_t>(g.edge(e).u)] ^= 1;
    parity[static_cast<std::size_t>(g.edge(e).v)] ^= 1;
  });
  std::vector<int> out;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (parity[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

Components components(const PlanarGraph& g, EdgeMask m, const std::vector<int>& isolated) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> used(n, 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  Components c;
  for_each_edge(m, [&](int e) {
    const Edge& ed = g.edge(e);
    used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
    int a = find(ed.u), b = find(ed.v);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  });
  for (std::size_t v = 0; v < n; ++v) c.touched += used[v];
  for (int v : isolated) used[static_cast<std::size_t>(v)] = 1;
  c.label.assign(n, -1);
  std::vector<int> root_label(n, -1);
  for (std::size_t v = 0; v < n; ++v) {
    if (!used[v]) continue;
    auto r = static_cast<std::size_t>(find(static_cast<int>(v)));
    if (root_label[r] < 0) root_label[r] = c.count++;
    c.label[v] = root_label[r];
  }
  return c;
}

std::string mask_to_string(EdgeMask m, char sep) {
  std::string s;
  for_each_edge(m, [&](int e) {
    if (!s.empty()) s += sep;
    s += std::to_string(e);
  });
  return s;
}

}  // namespace isingtp
