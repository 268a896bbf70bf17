// Command-line front end. CSV goes to stdout (or --out), the summary to
// stderr. Exit codes: 0 ok, 1 identity failure, 2 input error, 3 capacity.
#include "isingtp/currents.hpp"
#include "isingtp/directed.hpp"
#include "isingtp/disjoint_paths.hpp"
#include "isingtp/errors.hpp"
#include "isingtp/even_subgraphs.hpp"
#include "isingtp/events.hpp"
#include "isingtp/flows.hpp"
#include "isingtp/matrices.hpp"
#include "isingtp/minors.hpp"
#include "isingtp/sampler.hpp"
#include "isingtp/scaling.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace isingtp;

namespace {

enum Exit { kOk = 0, kIdentity = 1, kInput = 2, kCapacity = 3 };

struct Config {
  std::string graph;
  std::string a, b;
  std::string coloring;
  int k_max = 3;
  std::string suite = "all";
  std::string kind = "N";
  std::uint64_t seed = 0;
  std::uint64_t samples = 10000;
  bool mcmc = false;
  std::string eps = "1/8,1/12,1/16,1/20";
  double width = 1, height = 1;
  std::string out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

std::vector<int> parse_vertices(const std::string& s) {
  std::vector<int> out;
  for (const auto& p : split(s, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(p, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != p.size()) throw InputError("bad vertex id '" + p + "'");
    out.push_back(v);
  }
  return out;
}

// accepts 0.25 as well as 1/4
double parse_number(const std::string& t) {
  if (t.find('/') != std::string::npos) return parse_rational(t).get_d();
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw InputError("bad number '" + t + "'");
  return v;
}

std::vector<BoundaryPoint> parse_points(const std::string& s) {
  std::vector<BoundaryPoint> out;
  for (const auto& p : split(s, ',')) {
    auto xy = split(p, ':');
    if (xy.size() != 2) throw InputError("boundary point '" + p + "' must be x:y");
    out.push_back({parse_number(xy[0]), parse_number(xy[1])});
  }
  return out;
}

PlanarGraph load(const Config& c) {
  if (c.graph.empty()) throw InputError("--graph is required");
  PlanarGraph g = load_graph(c.graph);
  if (!c.coloring.empty()) {
    std::vector<Color> cols;
    for (const auto& t : split(c.coloring, ',')) {
      if (t == "o") cols.push_back(Color::Open);
      else if (t == "b") cols.push_back(Color::Filled);
      else throw InputError("coloring entries must be 'o' or 'b'");
    }
    g = g.recolored(cols);
  }
  return g;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& operator()() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "+" : "") + std::to_string(v[i]);
  return s;
}

std::string omega_field(const OmegaPair& w) {
  return mask_to_string(w.odd, '+') + "|" + mask_to_string(w.even, '+');
}

// One row per identity instance; rows are collected then emitted in order.
struct Report {
  struct Row {
    std::string suite, identity, inputs, lhs, rhs;
    bool holds;
  };
  std::vector<Row> rows;
  void add(std::string suite, std::string identity, std::string inputs, const Rational& lhs, const Rational& rhs) {
    rows.push_back({std::move(suite), std::move(identity), std::move(inputs), to_string(lhs), to_string(rhs), lhs == rhs});
  }
  void add(std::string suite, std::string identity, std::string inputs, bool lhs, bool rhs) {
    rows.push_back({std::move(suite), std::move(identity), std::move(inputs), lhs ? "true" : "false",
                    rhs ? "true" : "false", lhs == rhs});
  }
  int failures() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.holds; }));
  }
};

std::vector<std::uint64_t> subsets(int n, int min_size, int max_size, bool even_only) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    int s = std::popcount(m);
    if (s < min_size || s > max_size || (even_only && s % 2)) continue;
    out.push_back(m);
  }
  return out;
}

// contiguous splits a_1..a_k | b_k..b_1 of every 2k-subset
std::vector<std::pair<std::vector<int>, std::vector<int>>> contiguous(const PlanarGraph& g, int k) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  for (auto m : subsets(g.boundary_size(), 2 * k, 2 * k, false)) {
    auto s = boundary_vertices(g, m);
    for (int r = 0; r < 2 * k; ++r) {
      std::vector<int> seq;
      for (int i = 0; i < 2 * k; ++i) seq.push_back(s[static_cast<std::size_t>((r + i) % (2 * k))]);
      out.emplace_back(std::vector<int>(seq.begin(), seq.begin() + k), std::vector<int>(seq.rbegin(), seq.rbegin() + k));
    }
  }
  return out;
}

void suite_det(const PlanarGraph& g, int k_max, Report& rep) {
  DirectedModification d(g);
  FlowSearchOptions opts;
  opts.max_sources = k_max;
  FlowPartitionTable t = z_aflow_table(d, opts);
  const Rational z0 = t.at({0, 0});
  auto corr = boundary_correlations(g);
  for (auto a : subsets(g.boundary_size(), 0, k_max, false))
    for (auto b : subsets(g.boundary_size(), std::popcount(a), std::popcount(a), false)) {
      auto it = t.find({a, b});
      Rational z = it == t.end() ? Rational(0) : it->second / z0;
      auto av = boundary_vertices(g, a), bv = boundary_vertices(g, b);
      rep.add("det", "detN=Z_AB/Z_00", "A=" + join(av) + ";B=" + join(bv), det_exact(build_N(g, av, bv, corr).entries), z);
    }
}

void suite_pf(const PlanarGraph& g, int k_max, Report& rep) {
  auto corr = boundary_correlations(g);
  const Rational s0 = even_polynomial(g, {});
  for (auto m : subsets(g.boundary_size(), 0, std::min(2 * k_max, 12), true)) {
    auto s = boundary_vertices(g, m);
    rep.add("pf", "pfK=S_S/S_0", "S=" + join(s), pfaffian_exact(build_K(g, s, corr).entries), even_polynomial(g, s) / s0);
  }
}

void suite_flow(const PlanarGraph& g, int k_max, Report& rep) {
  DirectedModification d(g);
  Rational scale = 1;
  for (const auto& e : g.edges()) scale *= 1 - e.x * e.x;
  auto corr = boundary_correlations(g);
  const Rational z0 = z_aflow(d, {}, {});
  for (int i = 0; i < g.boundary_size(); ++i)
    for (int j = 0; j < g.boundary_size(); ++j) {
      int a = g.boundary()[static_cast<std::size_t>(i)].vertex, b = g.boundary()[static_cast<std::size_t>(j)].vertex;
      rep.add("flow", "Z_ab/Z_00=corr", "a=" + std::to_string(a) + ";b=" + std::to_string(b), z_aflow(d, {a}, {b}) / z0,
              corr[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    }
  const int k = std::min(k_max, 2);
  for (auto a : subsets(g.boundary_size(), 0, k, false))
    for (auto b : subsets(g.boundary_size(), std::popcount(a), std::popcount(a), false)) {
      auto av = boundary_vertices(g, a), bv = boundary_vertices(g, b);
      for (const auto& [w, mass] : flow_pushforward(d, av, bv))
        rep.add("flow", "pushforward=induced", "A=" + join(av) + ";B=" + join(bv) + ";w=" + omega_field(w),
                mass * scale, induced_flow_weight(g, w, av, bv));
    }
}

void suite_dcurr(const PlanarGraph& g, int k_max, Report& rep) {
  auto corr = boundary_correlations(g);
  for (int k = 2; k <= k_max; ++k)
    for (const auto& [a, b] : contiguous(g, k)) {
      std::vector<int> s = a;
      s.insert(s.end(), b.begin(), b.end());
      rep.add("dcurr", "P_parallel=detM/pfK", "A=" + join(a) + ";B=" + join(b), prob_parallel(g, a, b),
              det_exact(build_M(g, a, b, corr).entries) / pfaffian_exact(build_K(g, s, corr).entries));
    }
  bool pythagorean = std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) {
    Rational y;
    return exact_sqrt(1 - e.x * e.x, y);
  });
  if (!pythagorean) return;
  for (auto m : subsets(g.boundary_size(), 0, 4, true)) {
    auto s = boundary_vertices(g, m);
    auto formula = double_current_distribution(g, s);
    auto conv = convolve_two_currents(g, s);
    for (const auto& [w, p] : formula)
      rep.add("dcurr", "formula=convolution", "A=" + join(s) + ";w=" + omega_field(w), p, conv.count(w) ? conv.at(w) : Rational(0));
  }
}

void suite_tnn(const PlanarGraph& g, int k_max, Report& rep) {
  auto corr = boundary_correlations(g);
  for (int k = 1; k <= std::min(k_max, 4); ++k)
    for (const auto& [a, b] : contiguous(g, k)) {
      CorrelationMatrix m = build_M(g, a, b, corr);
      for (const auto& mr : all_minors_nonneg(m).minors) {
        std::vector<int> ar, bc;
        for (int r : mr.rows) ar.push_back(a[static_cast<std::size_t>(r)]);
        for (int c : mr.cols) bc.push_back(b[static_cast<std::size_t>(c)]);
        std::string in = "A=" + join(ar) + ";B=" + join(bc);
        rep.add("tnn", "minor>=0", in, mr.value >= 0, true);
        rep.add("tnn", "minor>0<=>disjoint_paths", in, mr.value > 0, disjoint_paths_exist(g, ar, bc));
      }
    }
}

int cmd_verify(const Config& c) {
  PlanarGraph g = load(c);
  if (c.k_max < 1) throw InputError("--k-max must be positive");
  Report rep;
  const bool all = c.suite == "all";
  if (all || c.suite == "det") suite_det(g, c.k_max, rep);
  if (all || c.suite == "pf") suite_pf(g, c.k_max, rep);
  if (all || c.suite == "flow") suite_flow(g, c.k_max, rep);
  if (all || c.suite == "dcurr") suite_dcurr(g, c.k_max, rep);
  if (all || c.suite == "tnn") suite_tnn(g, c.k_max, rep);
  Output out(c.out);
  out() << "suite,identity,inputs,lhs,rhs,holds\n";
  for (const auto& r : rep.rows)
    out() << r.suite << "," << r.identity << "," << r.inputs << "," << r.lhs << "," << r.rhs << ","
          << (r.holds ? "yes" : "no") << "\n";
  const int bad = rep.failures();
  std::cerr << "verify " << c.suite << ": " << rep.rows.size() << " checks, " << bad << " failed\n";
  for (const auto& r : rep.rows)
    if (!r.holds) {
      std::cerr << "counterexample: " << r.suite << " " << r.identity << " " << r.inputs << " lhs=" << r.lhs
                << " rhs=" << r.rhs << "\n";
      break;
    }
  return bad ? kIdentity : kOk;
}

int cmd_compute(const std::string& what, const Config& c) {
  PlanarGraph g = load(c);
  auto a = parse_vertices(c.a), b = parse_vertices(c.b);
  Output out(c.out);
  if (what == "corr") {
    if (a.size() != 1 || b.size() != 1) throw InputError("corr needs --A a --B b");
    out() << to_string(correlation(g, a[0], b[0])) << "\n";
  } else if (what == "matrix") {
    auto corr = boundary_correlations(g);
    CorrelationMatrix m;
    if (c.kind == "N") m = build_N(g, a, b, corr);
    else if (c.kind == "M") m = build_M(g, a, b, corr);
    else if (c.kind == "K") {
      std::vector<int> s = a;
      s.insert(s.end(), b.begin(), b.end());
      m = build_K(g, s, corr);
    } else {
      throw InputError("--kind must be N, M or K");
    }
    out() << matrix_csv(m);
    std::cerr << kind_name(m.kind) << " " << m.rows.size() << "x" << m.cols.size() << "\n";
  } else if (what == "prob-parallel") {
    out() << to_string(prob_parallel(g, a, b)) << "\n";
  }
  return kOk;
}

int cmd_sample(const Config& c) {
  PlanarGraph g = load(c);
  auto src = parse_vertices(c.a);
  SamplerOptions opts;
  opts.mode = c.mcmc ? SamplerMode::Mcmc : SamplerMode::Exact;
  auto samples = sample_double_current(g, src, c.samples, c.seed, opts);
  std::vector<Event> events;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = i + 1; j < src.size(); ++j) events.push_back(Event::connected(src[i], src[j]));
  Output out(c.out);
  out() << samples_csv(g, samples, events);
  std::cerr << "sampled " << samples.size() << " double currents, seed " << c.seed << "\n";
  return kOk;
}

int cmd_scaling(const Config& c) {
  std::vector<double> eps;
  for (const auto& t : split(c.eps, ',')) eps.push_back(parse_number(t));
  if (eps.empty()) throw InputError("--eps needs at least one value");
  auto a = c.a.empty() ? std::vector<BoundaryPoint>{{0.25, 0}, {0.75, 0}} : parse_points(c.a);
  auto b = c.b.empty() ? std::vector<BoundaryPoint>{{0.25, c.height}, {0.75, c.height}} : parse_points(c.b);
  ConvergenceStudy s = convergence_study({c.width, c.height}, a, b, eps);
  Output out(c.out);
  out() << convergence_csv(s);
  std::cerr << "gap column " << (s.non_increasing ? "non-increasing" : "NOT non-increasing") << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planar Ising boundary correlations: exact identities, sampling and scaling"};
  app.require_subcommand(1);
  Config c;
  std::string what;

  auto graph_flags = [&](CLI::App* sub) {
    sub->add_option("--graph", c.graph, "graph document (JSON)")->required();
    sub->add_option("--coloring", c.coloring, "boundary colours, e.g. o,b,o");
    sub->add_option("--out", c.out, "write CSV here instead of stdout");
  };

  auto* verify = app.add_subcommand("verify", "check the exact identities on one graph");
  graph_flags(verify);
  verify->add_option("--suite", c.suite)->check(CLI::IsMember({"all", "det", "pf", "flow", "dcurr", "tnn"}));
  verify->add_option("--k-max", c.k_max, "largest |A| considered");

  auto* compute = app.add_subcommand("compute", "correlations, matrices and parallel-connection probabilities");
  graph_flags(compute);
  compute->add_option("what", what)->required()->check(CLI::IsMember({"corr", "matrix", "prob-parallel"}));
  compute->add_option("--A", c.a, "vertex list a1,a2,...");
  compute->add_option("--B", c.b, "vertex list b1,b2,...");
  compute->add_option("--kind", c.kind)->check(CLI::IsMember({"N", "M", "K"}));

  auto* sample = app.add_subcommand("sample", "draw double random currents");
  graph_flags(sample);
  sample->add_option("--A", c.a, "source vertices");
  sample->add_option("--seed", c.seed)->required();
  sample->add_option("--samples", c.samples);
  sample->add_flag("--mcmc", c.mcmc, "Metropolis chains instead of exact sampling");

  auto* scaling = app.add_subcommand("scaling", "lattice vs continuum on a rectangle at criticality");
  scaling->add_option("--eps", c.eps, "mesh sizes, e.g. 1/8,1/12");
  scaling->add_option("--A", c.a, "boundary points x:y,...");
  scaling->add_option("--B", c.b, "boundary points x:y,...");
  scaling->add_option("--width", c.width);
  scaling->add_option("--height", c.height);
  scaling->add_option("--out", c.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  try {
    if (*verify) return cmd_verify(c);
    if (*compute) return cmd_compute(what, c);
    if (*sample) return cmd_sample(c);
    if (*scaling) return cmd_scaling(c);
  } catch (const CapacityError& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  }
  return kOk;
}
