#pragma once

#include "isingtp/edge_set.hpp"
#include "isingtp/graph.hpp"
#include "isingtp/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

namespace isingtp {

// Parity shadow of a current: edges with odd value, and edges with even
// non-zero value.
struct OmegaPair {
  EdgeMask odd = 0;
  EdgeMask even = 0;

  EdgeMask support() const { return odd | even; }
  auto operator<=>(const OmegaPair&) const = default;
};

struct OmegaPairHash {
  std::size_t operator()(const OmegaPair& w) const {
    return std::hash<std::uint64_t>()(w.odd * 0x9E3779B97F4A7C15ULL ^ (w.even + 0x632BE59BD9B4E019ULL));
  }
};

// |E_empty(omega)| = 2^(|omega| - |V(omega)| + k(omega)).
mpz_class count_sourceless(const PlanarGraph& g, EdgeMask omega);
// Same count by testing every subset of omega for even degrees.
mpz_class count_sourceless_bruteforce(const PlanarGraph& g, EdgeMask omega);

// prod_{odd} x_e * prod_{even} x_e^2 * prod_{absent} (1 - x_e^2)
Rational parity_weight(const PlanarGraph& g, const OmegaPair& w);

std::string to_string(const OmegaPair& w);

}  // namespace isingtp
