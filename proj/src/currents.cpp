#include "isingtp/currents.hpp"

#include "isingtp/errors.hpp"
#include "isingtp/even_subgraphs.hpp"
#include "isingtp/matrices.hpp"

#include <cmath>

namespace isingtp {

namespace {

void require_gamma_capacity(const PlanarGraph& g) {
  if (g.edge_count() > kMaxGammaEdges)
    throw CapacityError("Gamma_A enumeration limited to " + std::to_string(kMaxGammaEdges) + " edges");
}

void check_sources(const PlanarGraph& g, const std::vector<int>& sources) {
  for (int v : sources)
    if (v < 0 || v >= g.vertex_count()) throw InputError("source vertex " + std::to_string(v) + " out of range");
  if (sources.size() % 2) throw InputError("source set must have even size");
}

// Subsets of `free` in increasing order of their packed index.
template <class F>
void for_each_subset(EdgeMask free, F&& f) {
  EdgeMask s = 0;
  do {
    f(s);
    s = (s - free) & free;
  } while (s != 0);
}

Rational normalization(const PlanarGraph& g, const std::vector<int>& sources) {
  Rational sa = even_polynomial(g, sources);
  if (sa == 0) throw InputError("no even subgraph has the requested sources");
  return sa * even_polynomial(g, {});
}

}  // namespace

void for_each_gamma(const PlanarGraph& g, const std::vector<int>& sources,
                    const std::function<void(const OmegaPair&)>& visit) {
  check_sources(g, sources);
  require_gamma_capacity(g);
  const EdgeMask all = full_mask(g);
  enumerate_even_subgraphs(g, sources, [&](EdgeMask odd) {
    for_each_subset(all & ~odd, [&](EdgeMask even) { visit(OmegaPair{odd, even}); });
  });
}

std::vector<OmegaPair> gamma_space(const PlanarGraph& g, const std::vector<int>& sources) {
  std::vector<OmegaPair> out;
  for_each_gamma(g, sources, [&](const OmegaPair& w) { out.push_back(w); });
  return out;
}

Rational double_current_weight(const PlanarGraph& g, const OmegaPair& w) {
  return Rational(count_sourceless(g, w.support())) * parity_weight(g, w);
}

Rational double_current_prob(const PlanarGraph& g, const std::vector<int>& sources, const Event& event) {
  check_sources(g, sources);
  require_gamma_capacity(g);
  const Rational norm = normalization(g, sources);
  Rational total = 0;
  for_each_gamma(g, sources, [&](const OmegaPair& w) {
    if (event.holds(components(g, w.support()))) total += double_current_weight(g, w);
  });
  return total / norm;
}

std::map<OmegaPair, Rational> double_current_distribution(const PlanarGraph& g, const std::vector<int>& sources) {
  check_sources(g, sources);
  require_gamma_capacity(g);
  const Rational norm = normalization(g, sources);
  std::map<OmegaPair, Rational> out;
  for_each_gamma(g, sources, [&](const OmegaPair& w) { out.emplace(w, double_current_weight(g, w) / norm); });
  return out;
}

Rational prob_parallel(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size() || a.empty()) throw InputError("A and B must be non-empty and of equal size");
  std::vector<int> seq = a;
  seq.insert(seq.end(), b.rbegin(), b.rend());
  if (!is_ccw_sequence(g, seq))
    throw InputError("A and B are not contiguous: a_1..a_k, b_k..b_1 must be counterclockwise");
  return double_current_prob(g, seq, Event::parallel(a, b));
}

Rational pythagorean_y(const Rational& x) {
  Rational y;
  if (!exact_sqrt(1 - x * x, y)) throw InputError("weight " + to_string(x) + " has irrational y = sqrt(1 - x^2)");
  return y;
}

Rational single_current_weight_exact(const PlanarGraph& g, const OmegaPair& w) {
  Rational r(1);
  for (const Edge& e : g.edges()) {
    if (contains(w.odd, e.id)) r *= e.x;
    else if (contains(w.even, e.id)) r *= 1 - pythagorean_y(e.x);
    else r *= pythagorean_y(e.x);
  }
  return r;
}

double single_current_weight_float(const PlanarGraph& g, const OmegaPair& w) {
  double r = 1;
  for (const Edge& e : g.edges()) {
    double x = e.x.get_d();
    double y = std::sqrt(1 - x * x);
    if (contains(w.odd, e.id)) r *= x;
    else if (contains(w.even, e.id)) r *= 1 - y;
    else r *= y;
  }
  return r;
}

std::map<OmegaPair, Rational> convolve_two_currents(const PlanarGraph& g, const std::vector<int>& sources) {
  check_sources(g, sources);
  require_gamma_capacity(g);
  for (const Edge& e : g.edges()) pythagorean_y(e.x);
  auto law = [&](const std::vector<int>& s) {
    std::vector<std::pair<OmegaPair, Rational>> out;
    Rational z = 0;
    for_each_gamma(g, s, [&](const OmegaPair& w) {
      Rational wt = single_current_weight_exact(g, w);
      z += wt;
      out.emplace_back(w, wt);
    });
    for (auto& kv : out) kv.second /= z;
    return out;
  };
  const auto first = law(sources);
  const auto second = law({});
  std::map<OmegaPair, Rational> out;
  for (const auto& [w1, p1] : first)
    for (const auto& [w2, p2] : second) {
      OmegaPair w;
      w.odd = w1.odd ^ w2.odd;
      w.even = (w1.odd & w2.odd) | ((w1.even | w2.even) & ~(w1.odd | w2.odd));
      out[w] += p1 * p2;
    }
  return out;
}

}  // namespace isingtp
