#include "isingtp/flows.hpp"

#include "flow_transfer.hpp"
#include "isingtp/errors.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace isingtp {

namespace {

// presence of (middle, side1, side2) per LocalState
constexpr bool kPresent[kLocalStates][3] = {
    {false, false, false}, {true, false, false}, {false, true, false}, {false, false, true},
    {true, true, true},    {true, true, false},  {true, false, true}};
constexpr int kArcCount[kLocalStates] = {0, 1, 1, 1, 3, 2, 2};

enum Which : std::uint8_t { kMid, kSide1, kSide2, kSource, kSink };

struct Slot {
  int owner;  // base edge, or boundary position for stubs
  Which which;
  bool out;  // arc leaves the vertex
};

struct PairHash {
  std::size_t operator()(const std::pair<BoundaryMask, BoundaryMask>& p) const {
    return std::hash<std::uint64_t>()(p.first * 0x9E3779B97F4A7C15ULL ^ p.second);
  }
};

struct KeyedOmega {
  BoundaryMask a, b;
  OmegaPair w;
  bool operator==(const KeyedOmega&) const = default;
};

struct KeyedOmegaHash {
  std::size_t operator()(const KeyedOmega& k) const {
    return OmegaPairHash()(k.w) ^ std::hash<std::uint64_t>()(k.a * 31 + k.b);
  }
};

// Depth-first search over per-edge local states with stub choices resolved
// when a vertex has all its bundles assigned. Weights are tracked as
// integers: prod over edges of state_num[e][s], times 2^(exponent + n); the
// common denominator is returned by denominator().
class FlowEngine {
 public:
  FlowEngine(const DirectedModification& d, bool free_stubs, BoundaryMask a, BoundaryMask b,
             std::uint64_t budget, int max_sources = 64)
      : d_(d), g_(d.base()), free_stubs_(free_stubs), budget_(budget), max_sources_(max_sources) {
    const int n = g_.vertex_count();
    const int m = g_.edge_count();
    if (g_.boundary_size() > 64) throw CapacityError("at most 64 boundary vertices supported");

    slots_.assign(static_cast<std::size_t>(n), {});
    for (int v = 0; v < n; ++v) {
      for (int id : d.rotation(v)) {
        const Arc& arc = d.arc(id);
        Which w = arc.kind == ArcKind::Middle  ? kMid
                  : arc.kind == ArcKind::Side1 ? kSide1
                  : arc.kind == ArcKind::Side2 ? kSide2
                  : arc.kind == ArcKind::Source ? kSource
                                                : kSink;
        slots_[static_cast<std::size_t>(v)].push_back({arc.base, w, arc.tail == v});
      }
    }

    // BFS edge order so vertex neighbourhoods close early
    std::vector<char> placed(static_cast<std::size_t>(m), 0), seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e : g_.rotation(v)) {
        if (!placed[static_cast<std::size_t>(e)]) {
          placed[static_cast<std::size_t>(e)] = 1;
          order_.push_back(e);
        }
        int w = g_.other_end(e, v);
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          q.push(w);
        }
      }
    }
    std::vector<int> last(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < m; ++i) {
      const Edge& e = g_.edge(order_[static_cast<std::size_t>(i)]);
      last[static_cast<std::size_t>(e.u)] = std::max(last[static_cast<std::size_t>(e.u)], i);
      last[static_cast<std::size_t>(e.v)] = std::max(last[static_cast<std::size_t>(e.v)], i);
    }
    closing_.assign(static_cast<std::size_t>(m), {});
    for (int v = 0; v < n; ++v) closing_[static_cast<std::size_t>(last[static_cast<std::size_t>(v)])].push_back(v);

    // integer weights: state weight = num / den_e with den_e = 4 q^2 (q^2 - p^2)
    den_ = 1;
    num_.assign(static_cast<std::size_t>(m), {});
    for (int e = 0; e < m; ++e) {
      const Rational mid = d.arc(d.middle(e)).weight;
      const Rational side = d.arc(d.side1(e)).weight;
      const mpz_class& p = g_.edge(e).x.get_num();
      const mpz_class& qq = g_.edge(e).x.get_den();
      mpz_class den_e = 4 * qq * qq * (qq * qq - p * p);
      den_ *= den_e;
      for (int s = 0; s < kLocalStates; ++s) {
        Rational w(1);
        if (kPresent[s][0]) w *= mid;
        if (kPresent[s][1]) w *= side;
        if (kPresent[s][2]) w *= side;
        Rational scaled = w * Rational(den_e);
        scaled.canonicalize();
        num_[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)] = scaled.get_num();
      }
    }
    mpz_mul_2exp(den_.get_mpz_t(), den_.get_mpz_t(), static_cast<mp_bitcnt_t>(n));

    state_.assign(static_cast<std::size_t>(m), -1);
    stub_.assign(static_cast<std::size_t>(g_.boundary_size()), -1);
    if (!free_stubs_)
      for (int p = 0; p < g_.boundary_size(); ++p)
        stub_[static_cast<std::size_t>(p)] =
            static_cast<std::int8_t>(((a >> p) & 1 ? 1 : 0) | ((b >> p) & 1 ? 2 : 0));
    prod_.assign(static_cast<std::size_t>(m) + 1, mpz_class(1));
  }

  const mpz_class& denominator() const { return den_; }
  int edges() const { return g_.edge_count(); }

  // Runs the search from `depth`, calling leaf(engine) at `limit`.
  template <class F>
  bool dfs(int depth, int limit, F& leaf) {
    if (depth == limit) return leaf(*this);
    if (++nodes_ > budget_) throw CapacityError("alternating-flow search exceeded its node budget");
    const int e = order_[static_cast<std::size_t>(depth)];
    const Edge& ed = g_.edge(e);
    const auto& closing = closing_[static_cast<std::size_t>(depth)];
    for (int s = 0; s < kLocalStates; ++s) {
      state_[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(s);
      bool ok = true;
      for (int v : {ed.u, ed.v})
        if (std::find(closing.begin(), closing.end(), v) == closing.end() && !alternates(v)) ok = false;
      if (!ok) continue;
      mpz_mul(prod_[static_cast<std::size_t>(depth) + 1].get_mpz_t(), prod_[static_cast<std::size_t>(depth)].get_mpz_t(),
              num_[static_cast<std::size_t>(e)][static_cast<std::size_t>(s)].get_mpz_t());
      arcs_ += kArcCount[s];
      bool go = close(depth, 0, limit, leaf);
      arcs_ -= kArcCount[s];
      if (!go) {
        state_[static_cast<std::size_t>(e)] = -1;
        return false;
      }
    }
    state_[static_cast<std::size_t>(e)] = -1;
    return true;
  }

  // Integer weight numerator of the current complete assignment.
  void leaf_weight(mpz_class& out) const {
    int sources = 0;
    for (auto s : stub_) sources += (s & 1);
    long exponent = sources + arcs_ - touched_ + g_.vertex_count();
    mpz_mul_2exp(out.get_mpz_t(), prod_.back().get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  }

  BoundaryMask source_mask() const {
    BoundaryMask m = 0;
    for (std::size_t p = 0; p < stub_.size(); ++p)
      if (stub_[p] & 1) m |= BoundaryMask{1} << p;
    return m;
  }
  BoundaryMask sink_mask() const {
    BoundaryMask m = 0;
    for (std::size_t p = 0; p < stub_.size(); ++p)
      if (stub_[p] & 2) m |= BoundaryMask{1} << p;
    return m;
  }

  OmegaPair omega() const {
    OmegaPair w;
    for (std::size_t e = 0; e < state_.size(); ++e) {
      auto s = static_cast<LocalState>(state_[e]);
      if (s == LocalState::MS1 || s == LocalState::MS2) w.even |= bit(static_cast<int>(e));
      else if (s != LocalState::Empty) w.odd |= bit(static_cast<int>(e));
    }
    return w;
  }

  AlternatingFlow flow() const {
    AlternatingFlow f;
    for (auto s : state_) f.states.push_back(static_cast<LocalState>(s));
    for (std::size_t p = 0; p < stub_.size(); ++p) {
      int w = g_.boundary()[p].vertex;
      if (stub_[p] & 1) f.sources.push_back(w);
      if (stub_[p] & 2) f.sinks.push_back(w);
    }
    return f;
  }

  std::uint64_t nodes() const { return nodes_; }
  void add_nodes(std::uint64_t k) { nodes_ += k; }

 private:
  // 0 absent, 1 present, 2 unknown
  int slot_status(const Slot& s) const {
    if (s.which == kSource || s.which == kSink) {
      int st = stub_[static_cast<std::size_t>(s.owner)];
      if (st < 0) return 2;
      return (st & (s.which == kSource ? 1 : 2)) ? 1 : 0;
    }
    int st = state_[static_cast<std::size_t>(s.owner)];
    if (st < 0) return 2;
    return kPresent[st][s.which] ? 1 : 0;
  }

  // Present arcs that are cyclically adjacent (no unknown slot between
  // them) must point in opposite directions.
  bool alternates(int v) const {
    const auto& sl = slots_[static_cast<std::size_t>(v)];
    const std::size_t len = sl.size();
    std::size_t first = len;
    for (std::size_t i = 0; i < len; ++i)
      if (slot_status(sl[i]) == 1) {
        first = i;
        break;
      }
    if (first == len) return true;
    bool prev = sl[first].out;
    bool gap = false;
    for (std::size_t k = 1; k <= len; ++k) {
      const Slot& s = sl[(first + k) % len];
      int st = slot_status(s);
      if (st == 2) {
        gap = true;
      } else if (st == 1) {
        if (!gap && s.out == prev) return false;
        prev = s.out;
        gap = false;
      }
    }
    return true;
  }

  bool touched(int v) const {
    for (const auto& s : slots_[static_cast<std::size_t>(v)])
      if (slot_status(s) == 1) return true;
    return false;
  }

  template <class F>
  bool close(int depth, std::size_t idx, int limit, F& leaf) {
    const auto& closing = closing_[static_cast<std::size_t>(depth)];
    if (idx == closing.size()) return dfs(depth + 1, limit, leaf);
    const int v = closing[idx];
    const int pos = g_.boundary_position(v);
    if (free_stubs_ && pos >= 0) {
      for (int opt = 0; opt < 4; ++opt) {
        if ((opt & 1) && open_sources_ == max_sources_) continue;
        if ((opt & 2) && open_sinks_ == max_sources_) continue;
        stub_[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(opt);
        open_sources_ += opt & 1;
        open_sinks_ += opt >> 1;
        bool go = close_vertex(v, depth, idx, limit, leaf);
        open_sources_ -= opt & 1;
        open_sinks_ -= opt >> 1;
        if (!go) {
          stub_[static_cast<std::size_t>(pos)] = -1;
          return false;
        }
      }
      stub_[static_cast<std::size_t>(pos)] = -1;
      return true;
    }
    return close_vertex(v, depth, idx, limit, leaf);
  }

  template <class F>
  bool close_vertex(int v, int depth, std::size_t idx, int limit, F& leaf) {
    if (!alternates(v)) return true;
    int t = touched(v) ? 1 : 0;
    touched_ += t;
    bool go = close(depth, idx + 1, limit, leaf);
    touched_ -= t;
    return go;
  }

  const DirectedModification& d_;
  const PlanarGraph& g_;
  bool free_stubs_;
  std::uint64_t budget_;
  int max_sources_;
  int open_sources_ = 0;
  int open_sinks_ = 0;
  std::vector<std::vector<Slot>> slots_;
  std::vector<int> order_;
  std::vector<std::vector<int>> closing_;
  std::vector<std::array<mpz_class, kLocalStates>> num_;
  mpz_class den_;

  std::vector<std::int8_t> state_;
  std::vector<std::int8_t> stub_;
  std::vector<mpz_class> prod_;
  int arcs_ = 0;
  int touched_ = 0;
  std::uint64_t nodes_ = 0;
};

void check_boundary_set(const PlanarGraph& g, const std::vector<int>& vs, const char* what) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw InputError(std::string(what) + " has repeated vertices");
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count() || !g.on_boundary(v))
      throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " is not a boundary vertex");
}

FlowEngine make_forced(const DirectedModification& d, const std::vector<int>& a, const std::vector<int>& b,
                       const FlowSearchOptions& opts) {
  check_boundary_set(d.base(), a, "source set");
  check_boundary_set(d.base(), b, "sink set");
  if (a.size() != b.size()) throw InputError("source and sink sets must have equal size");
  return FlowEngine(d, false, boundary_mask(d.base(), a), boundary_mask(d.base(), b), opts.node_budget);
}

Rational ratio(const mpz_class& num, const mpz_class& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Collects engine snapshots at the split depth, then continues each one on
// an OpenMP worker with a private accumulator; merge() folds them together.
template <class Acc, class Merge>
void run_parallel(const FlowEngine& proto, int split_depth, std::uint64_t budget, Acc& result, Merge merge) {
  const int split = std::min(split_depth, proto.edges());
  std::vector<FlowEngine> prefixes;
  FlowEngine root = proto;
  auto collect = [&](FlowEngine& e) {
    prefixes.push_back(e);
    return true;
  };
  root.dfs(0, split, collect);
  std::uint64_t spent = root.nodes();
  const long count = static_cast<long>(prefixes.size());
  bool over_budget = false;
#pragma omp parallel
  {
    Acc local{};
    std::uint64_t local_nodes = 0;
    bool local_over = false;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      FlowEngine e = prefixes[static_cast<std::size_t>(i)];
      try {
        e.dfs(split, e.edges(), local);
      } catch (const CapacityError&) {
        local_over = true;
      }
      local_nodes += e.nodes();
    }
#pragma omp critical
    {
      merge(result, local);
      spent += local_nodes;
      over_budget = over_budget || local_over;
    }
  }
  if (over_budget || spent > budget) throw CapacityError("alternating-flow search exceeded its node budget");
}

struct SumAcc {
  mpz_class sum = 0;
  mpz_class scratch;
  bool operator()(const FlowEngine& e) {
    e.leaf_weight(scratch);
    sum += scratch;
    return true;
  }
};

struct TableAcc {
  std::unordered_map<std::pair<BoundaryMask, BoundaryMask>, mpz_class, PairHash> table;
  mpz_class scratch;
  bool operator()(const FlowEngine& e) {
    e.leaf_weight(scratch);
    table[{e.source_mask(), e.sink_mask()}] += scratch;
    return true;
  }
};

struct OmegaAcc {
  std::unordered_map<OmegaPair, mpz_class, OmegaPairHash> table;
  mpz_class scratch;
  bool operator()(const FlowEngine& e) {
    e.leaf_weight(scratch);
    table[e.omega()] += scratch;
    return true;
  }
};

FlowPartitionTable finish_table(const TableAcc& acc, const mpz_class& den) {
  FlowPartitionTable out;
  for (const auto& [key, num] : acc.table)
    if (num != 0) out.emplace(key, ratio(num, den));
  return out;
}

}  // namespace

const char* state_name(LocalState s) {
  switch (s) {
    case LocalState::Empty: return "EMPTY";
    case LocalState::M: return "M";
    case LocalState::S1: return "S1";
    case LocalState::S2: return "S2";
    case LocalState::S1S2M: return "S1S2M";
    case LocalState::MS1: return "MS1";
    case LocalState::MS2: return "MS2";
  }
  return "?";
}

bool has_middle(LocalState s) { return kPresent[static_cast<int>(s)][0]; }
bool has_side1(LocalState s) { return kPresent[static_cast<int>(s)][1]; }
bool has_side2(LocalState s) { return kPresent[static_cast<int>(s)][2]; }

BoundaryMask boundary_mask(const PlanarGraph& g, const std::vector<int>& vertices) {
  BoundaryMask m = 0;
  for (int v : vertices) {
    int p = v >= 0 && v < g.vertex_count() ? g.boundary_position(v) : -1;
    if (p < 0) throw InputError("vertex " + std::to_string(v) + " is not a boundary vertex");
    m |= BoundaryMask{1} << p;
  }
  return m;
}

std::vector<int> boundary_vertices(const PlanarGraph& g, BoundaryMask m) {
  std::vector<int> out;
  for (int p = 0; p < g.boundary_size(); ++p)
    if ((m >> p) & 1) out.push_back(g.boundary()[static_cast<std::size_t>(p)].vertex);
  return out;
}

bool enumerate_flows(const DirectedModification& d, const std::vector<int>& sources, const std::vector<int>& sinks,
                     const std::function<bool(const AlternatingFlow&, const Rational&)>& visit,
                     const FlowSearchOptions& opts) {
  FlowEngine engine = make_forced(d, sources, sinks, opts);
  mpz_class num;
  auto leaf = [&](const FlowEngine& e) {
    e.leaf_weight(num);
    return visit(e.flow(), ratio(num, e.denominator()));
  };
  return engine.dfs(0, engine.edges(), leaf);
}

Rational flow_weight(const DirectedModification& d, const AlternatingFlow& f) {
  const PlanarGraph& g = d.base();
  Rational w(1);
  long arcs = 0;
  std::vector<char> touched(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    LocalState s = f.states[static_cast<std::size_t>(e)];
    if (s == LocalState::Empty) continue;
    const Edge& ed = g.edge(e);
    touched[static_cast<std::size_t>(ed.u)] = touched[static_cast<std::size_t>(ed.v)] = 1;
    if (has_middle(s)) { w *= d.arc(d.middle(e)).weight; ++arcs; }
    if (has_side1(s)) { w *= d.arc(d.side1(e)).weight; ++arcs; }
    if (has_side2(s)) { w *= d.arc(d.side2(e)).weight; ++arcs; }
  }
  for (int v : f.sources) touched[static_cast<std::size_t>(v)] = 1;
  for (int v : f.sinks) touched[static_cast<std::size_t>(v)] = 1;
  long stubs = static_cast<long>(f.sources.size() + f.sinks.size());
  long vertices = stubs;  // one new source or sink vertex per stub arc
  for (char t : touched) vertices += t;
  long exponent = static_cast<long>(f.sources.size()) + (arcs + stubs) - vertices;
  return w * pow2(exponent);
}

bool is_alternating_flow(const DirectedModification& d, const AlternatingFlow& f) {
  const PlanarGraph& g = d.base();
  auto present = [&](const Arc& a) {
    switch (a.kind) {
      case ArcKind::Middle: return has_middle(f.states[static_cast<std::size_t>(a.base)]);
      case ArcKind::Side1: return has_side1(f.states[static_cast<std::size_t>(a.base)]);
      case ArcKind::Side2: return has_side2(f.states[static_cast<std::size_t>(a.base)]);
      case ArcKind::Source: {
        int w = g.boundary()[static_cast<std::size_t>(a.base)].vertex;
        return std::find(f.sources.begin(), f.sources.end(), w) != f.sources.end();
      }
      case ArcKind::Sink: {
        int w = g.boundary()[static_cast<std::size_t>(a.base)].vertex;
        return std::find(f.sinks.begin(), f.sinks.end(), w) != f.sinks.end();
      }
    }
    return false;
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<bool> dirs;  // true = out
    int in = 0, out = 0;
    for (int id : d.rotation(v)) {
      const Arc& a = d.arc(id);
      if (!present(a)) continue;
      dirs.push_back(a.tail == v);
      (a.tail == v ? out : in)++;
    }
    if (in != out) return false;
    for (std::size_t i = 0; i < dirs.size(); ++i)
      if (dirs[i] == dirs[(i + 1) % dirs.size()]) return false;
  }
  return true;
}

Rational z_aflow_serial(const DirectedModification& d, const std::vector<int>& sources,
                        const std::vector<int>& sinks, const FlowSearchOptions& opts) {
  FlowEngine engine = make_forced(d, sources, sinks, opts);
  SumAcc acc;
  engine.dfs(0, engine.edges(), acc);
  return ratio(acc.sum, engine.denominator());
}

Rational z_aflow(const DirectedModification& d, const std::vector<int>& sources, const std::vector<int>& sinks,
                 const FlowSearchOptions& opts) {
  check_boundary_set(d.base(), sources, "source set");
  check_boundary_set(d.base(), sinks, "sink set");
  if (sources.size() != sinks.size()) throw InputError("source and sink sets must have equal size");
  BoundaryMask a = boundary_mask(d.base(), sources), b = boundary_mask(d.base(), sinks);
  auto t = detail::transfer_table(d, false, a, b, opts);
  auto it = t.find({a, b});
  return it == t.end() ? Rational(0) : it->second;
}

FlowPartitionTable z_aflow_table_serial(const DirectedModification& d, const FlowSearchOptions& opts) {
  FlowEngine engine(d, true, 0, 0, opts.node_budget, opts.max_sources);
  TableAcc acc;
  engine.dfs(0, engine.edges(), acc);
  return finish_table(acc, engine.denominator());
}

FlowPartitionTable z_aflow_table(const DirectedModification& d, const FlowSearchOptions& opts) {
  return detail::transfer_table(d, true, 0, 0, opts);
}

bool has_alternating_flow(const DirectedModification& d, const std::vector<int>& sources,
                          const std::vector<int>& sinks, const FlowSearchOptions& opts) {
  FlowEngine engine = make_forced(d, sources, sinks, opts);
  bool found = false;
  auto leaf = [&](const FlowEngine&) {
    found = true;
    return false;
  };
  engine.dfs(0, engine.edges(), leaf);
  return found;
}

OmegaPair project_flow(const AlternatingFlow& f) {
  OmegaPair w;
  for (std::size_t e = 0; e < f.states.size(); ++e) {
    LocalState s = f.states[e];
    if (s == LocalState::MS1 || s == LocalState::MS2) w.even |= bit(static_cast<int>(e));
    else if (s != LocalState::Empty) w.odd |= bit(static_cast<int>(e));
  }
  return w;
}

std::map<OmegaPair, Rational> flow_pushforward(const DirectedModification& d, const std::vector<int>& sources,
                                               const std::vector<int>& sinks, const FlowSearchOptions& opts) {
  FlowEngine engine = make_forced(d, sources, sinks, opts);
  OmegaAcc result;
  run_parallel(engine, opts.split_depth, opts.node_budget, result, [](OmegaAcc& into, const OmegaAcc& from) {
    for (const auto& [k, v] : from.table) into.table[k] += v;
  });
  std::map<OmegaPair, Rational> out;
  for (const auto& [w, num] : result.table) out.emplace(w, ratio(num, engine.denominator()));
  return out;
}

int touching_components(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                        const std::vector<int>& sinks) {
  std::vector<int> marked = sources;
  marked.insert(marked.end(), sinks.begin(), sinks.end());
  Components c = components(g, w.support(), marked);
  std::vector<char> hit(static_cast<std::size_t>(c.count), 0);
  for (int v : marked) hit[static_cast<std::size_t>(c.label[static_cast<std::size_t>(v)])] = 1;
  int k = 0;
  for (char h : hit) k += h;
  return k;
}

Rational induced_flow_weight(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                             const std::vector<int>& sinks) {
  int kp = touching_components(g, w, sources, sinks);
  return pow2(static_cast<long>(sources.size()) - kp) * Rational(count_sourceless(g, w.support())) *
         parity_weight(g, w);
}

bool interlaces(const PlanarGraph& g, const OmegaPair& w, const std::vector<int>& sources,
                const std::vector<int>& sinks) {
  std::vector<int> marked = sources;
  marked.insert(marked.end(), sinks.begin(), sinks.end());
  Components c = components(g, w.support(), marked);
  auto in = [](const std::vector<int>& s, int v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  std::vector<std::vector<bool>> pattern(static_cast<std::size_t>(c.count));  // true = source
  for (const auto& b : g.boundary()) {
    int lab = c.label[static_cast<std::size_t>(b.vertex)];
    if (lab < 0) continue;
    bool is_src = in(sources, b.vertex), is_snk = in(sinks, b.vertex);
    auto& pat = pattern[static_cast<std::size_t>(lab)];
    if (is_src && is_snk) {
      if (b.color == Color::Open) pat.insert(pat.end(), {false, true});
      else pat.insert(pat.end(), {true, false});
    } else if (is_src) {
      pat.push_back(true);
    } else if (is_snk) {
      pat.push_back(false);
    }
  }
  for (const auto& pat : pattern) {
    if (pat.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < pat.size(); ++i)
      if (pat[i] == pat[(i + 1) % pat.size()]) return false;
  }
  return true;
}

std::string flow_dump_csv(const AlternatingFlow& f) {
  std::string s = "edge_id,state\n";
  for (std::size_t e = 0; e < f.states.size(); ++e)
    s += std::to_string(e) + "," + state_name(f.states[e]) + "\n";
  return s;
}

}  // namespace isingtp
