#include "isingtp/even_subgraphs.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <queue>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isingtp {

namespace {

struct Tree {
  std::vector<int> parent;       // parent vertex, -1 at root
  std::vector<int> parent_edge;  // edge to parent
  std::vector<int> depth;
};

Tree bfs_tree(const PlanarGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  Tree t{std::vector<int>(n, -1), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::queue<int> q;
  q.push(0);
  t.depth[0] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : g.rotation(v)) {
      int w = g.other_end(e, v);
      if (t.depth[static_cast<std::size_t>(w)] >= 0) continue;
      t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(v)] + 1;
      t.parent[static_cast<std::size_t>(w)] = v;
      t.parent_edge[static_cast<std::size_t>(w)] = e;
      q.push(w);
    }
  }
  return t;
}

EdgeMask tree_path(const Tree& t, int a, int b) {
  EdgeMask m = 0;
  auto d = [&](int v) { return t.depth[static_cast<std::size_t>(v)]; };
  while (a != b) {
    if (d(a) >= d(b)) {
      m ^= bit(t.parent_edge[static_cast<std::size_t>(a)]);
      a = t.parent[static_cast<std::size_t>(a)];
    } else {
      m ^= bit(t.parent_edge[static_cast<std::size_t>(b)]);
      b = t.parent[static_cast<std::size_t>(b)];
    }
  }
  return m;
}

void check_vertices(const PlanarGraph& g, const std::vector<int>& vs) {
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

// Integer form of the weights: x_e = num_e / den_e, so
// prod_{e in m} x_e = prod_{e in m} num_e * prod_{e not in m} den_e / prod_e den_e.
struct IntegerWeights {
  std::vector<mpz_class> num, den;
  mpz_class den_total = 1;

  explicit IntegerWeights(const PlanarGraph& g) {
    for (const auto& e : g.edges()) {
      num.push_back(e.x.get_num());
      den.push_back(e.x.get_den());
      den_total *= e.x.get_den();
    }
  }

  void accumulate(EdgeMask m, int edges, mpz_class& sum, mpz_class& scratch) const {
    scratch = 1;
    for (int e = 0; e < edges; ++e) scratch *= contains(m, e) ? num[static_cast<std::size_t>(e)] : den[static_cast<std::size_t>(e)];
    sum += scratch;
  }
};

}  // namespace

CycleSpace cycle_space(const PlanarGraph& g) {
  require_mask_capacity(g);
  Tree t = bfs_tree(g);
  CycleSpace cs;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (t.parent_edge[static_cast<std::size_t>(v)] >= 0) cs.tree |= bit(t.parent_edge[static_cast<std::size_t>(v)]);
  for (const auto& e : g.edges())
    if (!contains(cs.tree, e.id)) cs.basis.push_back(bit(e.id) | tree_path(t, e.u, e.v));
  return cs;
}

std::optional<EdgeMask> particular_subgraph(const PlanarGraph& g, const CycleSpace&,
                                            const std::vector<int>& sources) {
  check_vertices(g, sources);
  std::vector<int> s = sources;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("source set has repeated vertices");
  if (s.size() % 2 != 0) return std::nullopt;
  Tree t = bfs_tree(g);
  EdgeMask m = 0;
  for (std::size_t i = 0; i < s.size(); i += 2) m ^= tree_path(t, s[i], s[i + 1]);
  return m;
}

void enumerate_even_subgraphs(const PlanarGraph& g, const std::vector<int>& sources,
                              const std::function<void(EdgeMask)>& visit) {
  CycleSpace cs = cycle_space(g);
  if (cs.dimension() > kMaxCycleRank)
    throw CapacityError("cycle rank " + std::to_string(cs.dimension()) + " exceeds the enumeration cap of " +
                        std::to_string(kMaxCycleRank));
  auto base = particular_subgraph(g, cs, sources);
  if (!base) return;
  EdgeMask cur = *base;
  const std::uint64_t total = std::uint64_t{1} << cs.dimension();
  visit(cur);
  for (std::uint64_t i = 1; i < total; ++i) {
    cur ^= cs.basis[static_cast<std::size_t>(std::countr_zero(i))];
    visit(cur);
  }
}

std::vector<EdgeMask> even_subgraphs(const PlanarGraph& g, const std::vector<int>& sources) {
  std::vector<EdgeMask> out;
  enumerate_even_subgraphs(g, sources, [&](EdgeMask m) { out.push_back(m); });
  return out;
}

Rational even_polynomial_serial(const PlanarGraph& g, const std::vector<int>& sources) {
  IntegerWeights w(g);
  mpz_class sum = 0, scratch;
  const int m = g.edge_count();
  enumerate_even_subgraphs(g, sources, [&](EdgeMask s) { w.accumulate(s, m, sum, scratch); });
  Rational r(sum, w.den_total);
  r.canonicalize();
  return r;
}

Rational even_polynomial(const PlanarGraph& g, const std::vector<int>& sources) {
  CycleSpace cs = cycle_space(g);
  if (cs.dimension() > kMaxCycleRank)
    throw CapacityError("cycle rank " + std::to_string(cs.dimension()) + " exceeds the enumeration cap of " +
                        std::to_string(kMaxCycleRank));
  auto base = particular_subgraph(g, cs, sources);
  if (!base) return Rational(0);

  IntegerWeights w(g);
  const int m = g.edge_count();
  const int dim = cs.dimension();
  // High basis elements select a block; each block is a Gray-code walk over
  // the low elements. Exact integer sums make the reduction order-free.
  const int high = std::min(dim, 6);
  const int low = dim - high;
  const long blocks = 1L << high;
  const std::uint64_t inner = std::uint64_t{1} << low;
  mpz_class total = 0;

#pragma omp parallel
  {
    mpz_class local = 0, scratch;
#pragma omp for schedule(dynamic)
    for (long b = 0; b < blocks; ++b) {
      EdgeMask cur = *base;
      for (int h = 0; h < high; ++h)
        if ((b >> h) & 1) cur ^= cs.basis[static_cast<std::size_t>(low + h)];
      w.accumulate(cur, m, local, scratch);
      for (std::uint64_t i = 1; i < inner; ++i) {
        cur ^= cs.basis[static_cast<std::size_t>(std::countr_zero(i))];
        w.accumulate(cur, m, local, scratch);
      }
    }
#pragma omp critical
    total += local;
  }
  Rational r(total, w.den_total);
  r.canonicalize();
  return r;
}

Rational correlation(const PlanarGraph& g, int a, int b) {
  check_vertices(g, {a, b});
  if (a == b) return Rational(1);
  return even_polynomial(g, {a, b}) / even_polynomial(g, {});
}

std::vector<std::vector<Rational>> boundary_correlations(const PlanarGraph& g) {
  const int n = g.boundary_size();
  Rational empty = even_polynomial(g, {});
  std::vector<std::vector<Rational>> c(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = even_polynomial(g, {g.boundary()[static_cast<std::size_t>(i)].vertex,
                                       g.boundary()[static_cast<std::size_t>(j)].vertex}) / empty;
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      c[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    }
  return c;
}

Rational subset_weight(const PlanarGraph& g, EdgeMask m) {
  Rational r(1);
  for_each_edge(m, [&](int e) { r *= g.edge(e).x; });
  return r;
}

}  // namespace isingtp
