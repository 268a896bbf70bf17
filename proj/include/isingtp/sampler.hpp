#pragma once

#include "isingtp/events.hpp"
#include "isingtp/even_subgraphs.hpp"
#include "isingtp/graph.hpp"
#include "isingtp/omega.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace isingtp {

enum class SamplerMode { Exact, Mcmc };

struct SamplerOptions {
  SamplerMode mode = SamplerMode::Exact;
  int chains = 4;  // MCMC only; fixed so output does not depend on thread count
};

// Uniform double in [0, 1) from the top 53 bits.
double unit_uniform(std::mt19937_64& rng);

// Metropolis chain on Gamma_A with double-current weights. A step picks
// either an omega_2 toggle on an edge outside omega_1, or a cycle-basis
// flip of omega_1 whose leaving edges are reassigned at random.
class McmcChain {
 public:
  McmcChain(const PlanarGraph& g, const std::vector<int>& sources, std::uint64_t seed);
  void step();
  void sweep();  // |E| steps
  const OmegaPair& state() const { return state_; }
  std::uint64_t accepted() const { return accepted_; }

 private:
  double log_weight(const OmegaPair& w) const;

  const PlanarGraph& g_;
  CycleSpace cs_;
  std::mt19937_64 rng_;
  OmegaPair state_;
  double log_w_ = 0;
  std::uint64_t accepted_ = 0;
};

std::vector<OmegaPair> sample_double_current(const PlanarGraph& g, const std::vector<int>& sources,
                                             std::uint64_t count, std::uint64_t seed,
                                             const SamplerOptions& opts = {});

// Header "sample_index,omega1,omega2,<event names>", one row per sample.
std::string samples_csv(const PlanarGraph& g, const std::vector<OmegaPair>& samples,
                        const std::vector<Event>& events);

}  // namespace isingtp
