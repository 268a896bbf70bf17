#include "isingtp/disjoint_paths.hpp"

#include "isingtp/errors.hpp"
#include "isingtp/flows.hpp"

#include <algorithm>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

namespace isingtp {

namespace {

using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<boost::edge_capacity_t, long,
                    boost::property<boost::edge_residual_capacity_t, long,
                                    boost::property<boost::edge_reverse_t, Traits::edge_descriptor>>>>;

class Network {
 public:
  explicit Network(int vertices) : g_(static_cast<std::size_t>(vertices)) {}
  void arc(int from, int to, long cap) {
    auto cap_map = boost::get(boost::edge_capacity, g_);
    auto rev_map = boost::get(boost::edge_reverse, g_);
    auto e = boost::add_edge(static_cast<std::size_t>(from), static_cast<std::size_t>(to), g_).first;
    auto r = boost::add_edge(static_cast<std::size_t>(to), static_cast<std::size_t>(from), g_).first;
    cap_map[e] = cap;
    cap_map[r] = 0;
    rev_map[e] = r;
    rev_map[r] = e;
  }
  long max_flow(int s, int t) {
    return boost::edmonds_karp_max_flow(g_, static_cast<std::size_t>(s), static_cast<std::size_t>(t));
  }

 private:
  FlowGraph g_;
};

}  // namespace

bool disjoint_paths_exist(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw InputError("A' and B' must have equal size");
  const int n = g.vertex_count();
  for (int v : a)
    if (v < 0 || v >= n) throw InputError("vertex out of range");
  for (int v : b)
    if (v < 0 || v >= n) throw InputError("vertex out of range");
  auto in = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  std::vector<int> sources, sinks;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  for (int v : a) {
    if (in(b, v)) removed[static_cast<std::size_t>(v)] = 1;
    else sources.push_back(v);
  }
  for (int v : b)
    if (!in(a, v)) sinks.push_back(v);
  if (sources.empty()) return true;

  // vertex v splits into 2v (in) and 2v+1 (out) joined by a unit arc
  const int s = 2 * n, t = 2 * n + 1;
  Network net(2 * n + 2);
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) net.arc(2 * v, 2 * v + 1, 1);
  for (const Edge& e : g.edges()) {
    net.arc(2 * e.u + 1, 2 * e.v, 1);
    net.arc(2 * e.v + 1, 2 * e.u, 1);
  }
  for (int v : sources) net.arc(s, 2 * v, 1);
  for (int v : sinks) net.arc(2 * v + 1, t, 1);
  return net.max_flow(s, t) == static_cast<long>(sources.size());
}

PathCriterion alternating_path_criterion(const DirectedModification& d, const std::vector<int>& a,
                                         const std::vector<int>& b, const BoundaryCorrelations& corr) {
  PathCriterion pc;
  pc.flow_exists = has_alternating_flow(d, a, b);
  pc.det = det_exact(build_N(d.base(), a, b, corr).entries);
  pc.agrees = pc.flow_exists == (pc.det > 0);
  return pc;
}

}  // namespace isingtp
