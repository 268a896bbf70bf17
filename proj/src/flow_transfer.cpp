#include "flow_transfer.hpp"

#include "isingtp/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <queue>
#include <string>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isingtp::detail {

std::vector<int> bfs_edge_order(const PlanarGraph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  std::vector<char> placed(static_cast<std::size_t>(g.edge_count()), 0), seen(n, 0);
  std::vector<int> order;
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int e : g.rotation(v)) {
      if (!placed[static_cast<std::size_t>(e)]) {
        placed[static_cast<std::size_t>(e)] = 1;
        order.push_back(e);
      }
      int w = g.other_end(e, v);
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        q.push(w);
      }
    }
  }
  return order;
}

namespace {

using Mask = std::uint32_t;

// Present slots that are cyclically consecutive with no unknown slot in
// between must point in opposite directions. A lone present slot with
// everything else known fails as well.
bool alternates(Mask present, Mask known, Mask out, int len) {
  if (present == 0) return true;
  const Mask all = len == 32 ? ~Mask{0} : (Mask{1} << len) - 1;
  const Mask unknown = ~known & all;
  const int first = std::countr_zero(present);
  int prev = first;
  Mask rest = present & (present - 1);
  for (;;) {
    const int next = rest ? std::countr_zero(rest) : first;
    Mask between;
    if (next > prev) {
      between = ((Mask{1} << next) - 1) & ~((Mask{2} << prev) - 1);
    } else {
      Mask high = prev + 1 >= len ? 0 : all & ~((Mask{2} << prev) - 1);
      between = high | ((Mask{1} << next) - 1);
    }
    if ((unknown & between) == 0 && ((out >> prev) & 1) == ((out >> next) & 1)) return false;
    if (!rest) return true;
    prev = next;
    rest &= rest - 1;
  }
}

struct VertexLayout {
  int len = 0;
  Mask out = 0;
  Mask source = 0;  // stub slot bits, zero off the boundary
  Mask sink = 0;
};

struct Key {
  std::vector<Mask> present;  // per active vertex, in activation order
  BoundaryMask a = 0, b = 0;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::size_t h = std::hash<std::uint64_t>()(k.a * 0x9E3779B97F4A7C15ULL ^ k.b);
    for (Mask m : k.present) h = h * 1000003u ^ m;
    return h;
  }
};

using StateMap = std::unordered_map<Key, Rational, KeyHash>;

}  // namespace

FlowPartitionTable transfer_table(const DirectedModification& d, bool free_stubs, BoundaryMask a, BoundaryMask b,
                                  const FlowSearchOptions& opts) {
  const PlanarGraph& g = d.base();
  const int n = g.vertex_count();
  const int m = g.edge_count();

  std::vector<VertexLayout> layout(static_cast<std::size_t>(n));
  // slot bits of each arc at its base vertex
  std::vector<Mask> arc_bit_at_tail(d.arcs().size(), 0), arc_bit_at_head(d.arcs().size(), 0);
  for (int v = 0; v < n; ++v) {
    const auto& rot = d.rotation(v);
    if (rot.size() > 32) throw CapacityError("vertex degree too large for the flow transfer");
    auto& lay = layout[static_cast<std::size_t>(v)];
    lay.len = static_cast<int>(rot.size());
    for (std::size_t i = 0; i < rot.size(); ++i) {
      const Arc& arc = d.arc(rot[i]);
      Mask bitv = Mask{1} << i;
      if (arc.tail == v) {
        lay.out |= bitv;
        arc_bit_at_tail[static_cast<std::size_t>(arc.id)] = bitv;
      } else {
        arc_bit_at_head[static_cast<std::size_t>(arc.id)] = bitv;
      }
      if (arc.kind == ArcKind::Source) lay.source = bitv;
      if (arc.kind == ArcKind::Sink) lay.sink = bitv;
    }
  }
  auto bit_at = [&](int arc, int v) {
    return d.arc(arc).tail == v ? arc_bit_at_tail[static_cast<std::size_t>(arc)]
                                : arc_bit_at_head[static_cast<std::size_t>(arc)];
  };

  const std::vector<int> order = bfs_edge_order(g);
  std::vector<int> first(static_cast<std::size_t>(n), m), last(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < m; ++i) {
    const Edge& e = g.edge(order[static_cast<std::size_t>(i)]);
    for (int v : {e.u, e.v}) {
      first[static_cast<std::size_t>(v)] = std::min(first[static_cast<std::size_t>(v)], i);
      last[static_cast<std::size_t>(v)] = std::max(last[static_cast<std::size_t>(v)], i);
    }
  }

  // slots known at each vertex before step i: stubs (if forced) plus bundles
  // of earlier edges
  std::vector<Mask> known(static_cast<std::size_t>(n), 0);
  std::vector<Mask> forced_present(static_cast<std::size_t>(n), 0);
  for (int p = 0; p < g.boundary_size(); ++p) {
    int w = g.boundary()[static_cast<std::size_t>(p)].vertex;
    const auto& lay = layout[static_cast<std::size_t>(w)];
    if (!free_stubs) {
      known[static_cast<std::size_t>(w)] |= lay.source | lay.sink;
      if ((a >> p) & 1) forced_present[static_cast<std::size_t>(w)] |= lay.source;
      if ((b >> p) & 1) forced_present[static_cast<std::size_t>(w)] |= lay.sink;
    }
  }

  // per-state weight of each edge times 2^(arc count)
  std::vector<std::array<Rational, kLocalStates>> edge_weight(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    const Rational mid = d.arc(d.middle(e)).weight * 2;
    const Rational side = d.arc(d.side1(e)).weight * 2;
    for (int s = 0; s < kLocalStates; ++s) {
      auto ls = static_cast<LocalState>(s);
      Rational w(1);
      if (has_middle(ls)) w *= mid;
      if (has_side1(ls)) w *= side;
      if (has_side2(ls)) w *= side;
      edge_weight[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)] = w;
    }
  }

  std::vector<int> active;  // vertices in key order
  StateMap states;
  states.emplace(Key{}, Rational(1));
  std::uint64_t work = 0;

  for (int i = 0; i < m; ++i) {
    const int eid = order[static_cast<std::size_t>(i)];
    const Edge& e = g.edge(eid);
    // activate endpoints seen for the first time
    std::vector<int> next_active = active;
    for (int v : {e.u, e.v})
      if (first[static_cast<std::size_t>(v)] == i) next_active.push_back(v);
    const std::size_t added = next_active.size() - active.size();
    auto slot_of = [&](int v) {
      return static_cast<std::size_t>(std::find(next_active.begin(), next_active.end(), v) - next_active.begin());
    };
    const std::size_t iu = slot_of(e.u), iv = slot_of(e.v);
    for (int v : {e.u, e.v})
      known[static_cast<std::size_t>(v)] |= bit_at(d.middle(eid), v) | bit_at(d.side1(eid), v) | bit_at(d.side2(eid), v);
    std::array<Mask, kLocalStates> add_u{}, add_v{};
    for (int s = 0; s < kLocalStates; ++s) {
      auto ls = static_cast<LocalState>(s);
      for (auto [has, arc] : {std::pair{has_middle(ls), d.middle(eid)}, std::pair{has_side1(ls), d.side1(eid)},
                              std::pair{has_side2(ls), d.side2(eid)}}) {
        if (!has) continue;
        add_u[static_cast<std::size_t>(s)] |= bit_at(arc, e.u);
        add_v[static_cast<std::size_t>(s)] |= bit_at(arc, e.v);
      }
    }
    std::vector<int> closing;
    for (int v : {e.u, e.v})
      if (last[static_cast<std::size_t>(v)] == i) closing.push_back(v);
    std::vector<int> survivors;
    for (int v : next_active)
      if (std::find(closing.begin(), closing.end(), v) == closing.end()) survivors.push_back(v);

    std::vector<const StateMap::value_type*> items;
    items.reserve(states.size());
    for (const auto& kv : states) items.push_back(&kv);
    work += items.size() * kLocalStates;
    if (work > opts.node_budget) throw CapacityError("alternating-flow transfer exceeded its work budget");

    StateMap merged;
    const long count = static_cast<long>(items.size());
#pragma omp parallel
    {
      StateMap local;
#pragma omp for schedule(static)
      for (long it = 0; it < count; ++it) {
        const Key& key = items[static_cast<std::size_t>(it)]->first;
        const Rational& weight = items[static_cast<std::size_t>(it)]->second;
        std::vector<Mask> pres = key.present;
        for (std::size_t k = 0; k < added; ++k)
          pres.push_back(forced_present[static_cast<std::size_t>(next_active[active.size() + k])]);
        for (int s = 0; s < kLocalStates; ++s) {
          std::vector<Mask> np = pres;
          np[iu] |= add_u[static_cast<std::size_t>(s)];
          np[iv] |= add_v[static_cast<std::size_t>(s)];
          bool ok = true;
          for (auto [v, idx] : {std::pair{e.u, iu}, std::pair{e.v, iv}}) {
            const auto& lay = layout[static_cast<std::size_t>(v)];
            if (!alternates(np[idx], known[static_cast<std::size_t>(v)], lay.out, lay.len)) ok = false;
          }
          if (!ok) continue;
          Rational w = weight * edge_weight[static_cast<std::size_t>(eid)][static_cast<std::size_t>(s)];

          // close finished vertices, branching over stub choices if free
          struct Partial {
            std::vector<Mask> np;
            BoundaryMask a, b;
            long exponent;
          };
          std::vector<Partial> partials{{np, key.a, key.b, 0}};
          for (int v : closing) {
            const std::size_t idx = slot_of(v);
            const auto& lay = layout[static_cast<std::size_t>(v)];
            const int pos = g.boundary_position(v);
            std::vector<Partial> nextp;
            for (const Partial& pp : partials) {
              const int options = free_stubs && pos >= 0 ? 4 : 1;
              for (int opt = 0; opt < options; ++opt) {
                Partial q = pp;
                if (free_stubs && pos >= 0) {
                  if (opt & 1) {
                    if (std::popcount(q.a) >= opts.max_sources) continue;
                    q.np[idx] |= lay.source;
                    q.a |= BoundaryMask{1} << pos;
                  }
                  if (opt & 2) {
                    if (std::popcount(q.b) >= opts.max_sources) continue;
                    q.np[idx] |= lay.sink;
                    q.b |= BoundaryMask{1} << pos;
                  }
                }
                const Mask all = lay.len == 32 ? ~Mask{0} : (Mask{1} << lay.len) - 1;
                if (!alternates(q.np[idx], all, lay.out, lay.len)) continue;
                if (q.np[idx] != 0) --q.exponent;
                if (q.np[idx] & lay.source) ++q.exponent;
                nextp.push_back(std::move(q));
              }
            }
            partials = std::move(nextp);
          }
          for (const Partial& pp : partials) {
            Key nk;
            nk.a = pp.a;
            nk.b = pp.b;
            for (int v : survivors) nk.present.push_back(pp.np[slot_of(v)]);
            Rational contrib = w;
            if (pp.exponent > 0) mpq_mul_2exp(contrib.get_mpq_t(), contrib.get_mpq_t(), static_cast<mp_bitcnt_t>(pp.exponent));
            if (pp.exponent < 0) mpq_div_2exp(contrib.get_mpq_t(), contrib.get_mpq_t(), static_cast<mp_bitcnt_t>(-pp.exponent));
            local[nk] += contrib;
          }
        }
      }
#pragma omp critical
      for (auto& kv : local) merged[kv.first] += kv.second;
    }
    states = std::move(merged);
    active = survivors;
  }

  FlowPartitionTable out;
  for (const auto& [key, w] : states) {
    if (w == 0) continue;
    if (free_stubs) out.emplace(std::pair{key.a, key.b}, w);
    else out.emplace(std::pair{a, b}, w);
  }
  return out;
}

}  // namespace isingtp::detail
