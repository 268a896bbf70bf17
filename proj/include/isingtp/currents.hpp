#pragma once

#include "isingtp/events.hpp"
#include "isingtp/graph.hpp"
#include "isingtp/omega.hpp"
#include "isingtp/rational.hpp"

#include <functional>
#include <map>
#include <vector>

namespace isingtp {

inline constexpr int kMaxGammaEdges = 24;

// Every (omega_1, omega_2) with omega_1 in E_A and omega_2 outside omega_1.
void for_each_gamma(const PlanarGraph& g, const std::vector<int>& sources,
                    const std::function<void(const OmegaPair&)>& visit);
std::vector<OmegaPair> gamma_space(const PlanarGraph& g, const std::vector<int>& sources);

// |E_empty(omega)| prod_{omega_1} x prod_{omega_2} x^2 prod_{rest} (1 - x^2)
Rational double_current_weight(const PlanarGraph& g, const OmegaPair& w);

// Probability of `event` under the double-current law on Gamma_A,
// normalized by S_A * S_empty.
Rational double_current_prob(const PlanarGraph& g, const std::vector<int>& sources, const Event& event);

// Full normalized law on Gamma_A.
std::map<OmegaPair, Rational> double_current_distribution(const PlanarGraph& g, const std::vector<int>& sources);

// A = a_1..a_k, B = b_1..b_k with a_1..a_k, b_k..b_1 counterclockwise.
Rational prob_parallel(const PlanarGraph& g, const std::vector<int>& a, const std::vector<int>& b);

// y = sqrt(1 - x^2) when rational; throws InputError otherwise.
Rational pythagorean_y(const Rational& x);

// prod_{omega_1} x prod_{omega_2} (1 - y) prod_{rest} y, unnormalized.
Rational single_current_weight_exact(const PlanarGraph& g, const OmegaPair& w);
double single_current_weight_float(const PlanarGraph& g, const OmegaPair& w);

// Law of omega(n1 + n2) for independent single currents with sources A and
// none, combined edge by edge; needs rational y on every edge.
std::map<OmegaPair, Rational> convolve_two_currents(const PlanarGraph& g, const std::vector<int>& sources);

}  // namespace isingtp
