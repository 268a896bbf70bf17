#include "isingtp/sampler.hpp"

#include "isingtp/currents.hpp"
#include "isingtp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace isingtp {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

McmcChain::McmcChain(const PlanarGraph& g, const std::vector<int>& sources, std::uint64_t seed)
    : g_(g), cs_(cycle_space(g)), rng_(seed) {
  auto start = particular_subgraph(g, cs_, sources);
  if (!start) throw InputError("no even subgraph has the requested sources");
  state_ = OmegaPair{*start, 0};
  log_w_ = log_weight(state_);
}

double McmcChain::log_weight(const OmegaPair& w) const {
  double lw = static_cast<double>(mpz_sizeinbase(count_sourceless(g_, w.support()).get_mpz_t(), 2) - 1) * std::log(2.0);
  for (const Edge& e : g_.edges()) {
    double x = e.x.get_d();
    if (contains(w.odd, e.id)) lw += std::log(x);
    else if (contains(w.even, e.id)) lw += 2 * std::log(x);
    else lw += std::log1p(-x * x);
  }
  return lw;
}

void McmcChain::step() {
  const int m = g_.edge_count();
  const bool flip = cs_.dimension() > 0 && unit_uniform(rng_) < 0.5;
  OmegaPair next = state_;
  double log_q = 0;  // log of reverse/forward proposal ratio
  if (!flip) {
    int e = static_cast<int>(unit_uniform(rng_) * m);
    if (contains(state_.odd, e)) return;
    next.even ^= bit(e);
  } else {
    EdgeMask c = cs_.basis[static_cast<std::size_t>(unit_uniform(rng_) * cs_.dimension())];
    EdgeMask leaving = c & state_.odd;
    EdgeMask entering = c & ~state_.odd;
    next.odd ^= c;
    next.even &= ~entering;
    for_each_edge(leaving, [&](int e) {
      if (unit_uniform(rng_) < 0.5) next.even |= bit(e);
    });
    log_q = (size_of(leaving) - size_of(entering)) * std::log(2.0);
  }
  const double lw = log_weight(next);
  const double log_ratio = lw - log_w_ + log_q;
  if (log_ratio >= 0 || unit_uniform(rng_) < std::exp(log_ratio)) {
    state_ = next;
    log_w_ = lw;
    ++accepted_;
  }
}

void McmcChain::sweep() {
  for (int i = 0; i < g_.edge_count(); ++i) step();
}

std::vector<OmegaPair> sample_double_current(const PlanarGraph& g, const std::vector<int>& sources,
                                             std::uint64_t count, std::uint64_t seed, const SamplerOptions& opts) {
  if (opts.mode == SamplerMode::Exact) {
    const auto law = double_current_distribution(g, sources);
    std::vector<OmegaPair> support;
    std::vector<double> cdf;
    double acc = 0;
    for (const auto& [w, p] : law) {
      acc += p.get_d();
      support.push_back(w);
      cdf.push_back(acc);
    }
    std::mt19937_64 rng(seed);
    std::vector<OmegaPair> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      double u = unit_uniform(rng) * acc;
      auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), support.size() - 1);
      out.push_back(support[idx]);
    }
    return out;
  }

  if (opts.chains < 1) throw InputError("need at least one chain");
  const auto chains = static_cast<std::uint64_t>(opts.chains);
  std::vector<std::vector<OmegaPair>> per_chain(chains);
#pragma omp parallel for schedule(static)
  for (long c = 0; c < static_cast<long>(chains); ++c) {
    const auto idx = static_cast<std::uint64_t>(c);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(idx)};
    std::uint64_t chain_seed;
    seq.generate(reinterpret_cast<std::uint32_t*>(&chain_seed), reinterpret_cast<std::uint32_t*>(&chain_seed) + 2);
    McmcChain chain(g, sources, chain_seed);
    const std::uint64_t share = count / chains + (idx < count % chains ? 1 : 0);
    for (int s = 0; s < 10 * g.edge_count(); ++s) chain.sweep();
    auto& out = per_chain[idx];
    out.reserve(share);
    for (std::uint64_t i = 0; i < share; ++i) {
      for (int s = 0; s < g.edge_count(); ++s) chain.sweep();
      out.push_back(chain.state());
    }
  }
  std::vector<OmegaPair> out;
  for (auto& v : per_chain) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string samples_csv(const PlanarGraph& g, const std::vector<OmegaPair>& samples,
                        const std::vector<Event>& events) {
  std::string s = "sample_index,omega1,omega2";
  for (const auto& e : events) s += "," + e.name();
  s += "\n";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& w = samples[i];
    s += std::to_string(i) + "," + mask_to_string(w.odd) + "," + mask_to_string(w.even);
    Components c = components(g, w.support());
    for (const auto& e : events) s += e.holds(c) ? ",1" : ",0";
    s += "\n";
  }
  return s;
}

}  // namespace isingtp
