#include "doctest.h"
#include "oracles.hpp"

#include "isingtp/corpus.hpp"
#include "isingtp/currents.hpp"
#include "isingtp/errors.hpp"
#include "isingtp/even_subgraphs.hpp"
#include "isingtp/events.hpp"
#include "isingtp/matrices.hpp"
#include "isingtp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace isingtp;

namespace {

std::vector<int> bverts(const PlanarGraph& g) {
  std::vector<int> v;
  for (const auto& b : g.boundary()) v.push_back(b.vertex);
  return v;
}

double frequency(const PlanarGraph& g, const std::vector<OmegaPair>& samples, const Event& ev) {
  std::size_t hits = 0;
  for (const auto& w : samples) hits += ev(g, w) ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(samples.size());
}

}  // namespace

TEST_SUITE("currents") {
  TEST_CASE("gamma spaces") {
    PlanarGraph e = single_edge(Rational(1, 2));
    auto g0 = gamma_space(e, {});
    CHECK(std::set<OmegaPair>(g0.begin(), g0.end()) == std::set<OmegaPair>{{0, 0}, {0, 1}});
    auto g1 = gamma_space(e, {0, 1});
    CHECK(g1 == std::vector<OmegaPair>{{1, 0}});
    CHECK(gamma_space(cycle_graph(3, mixed_weights(3)), {}).size() == 9);
  }

  TEST_CASE("gamma space against the 3^|E| labelling") {
    for (const auto& ng : identity_corpus()) {
      if (ng.graph.edge_count() > 8) continue;
      CAPTURE(ng.name);
      auto b = bverts(ng.graph);
      for (std::vector<int> s : {std::vector<int>{}, {b[0], b[1]}}) {
        auto mine = gamma_space(ng.graph, s);
        auto ref = oracle::gamma_brute(ng.graph, s);
        CHECK(std::set<OmegaPair>(mine.begin(), mine.end()) == std::set<OmegaPair>(ref.begin(), ref.end()));
        CHECK(mine.size() == ref.size());
      }
    }
  }

  TEST_CASE("double current weights") {
    PlanarGraph e = single_edge(Rational(1, 2));
    CHECK(double_current_weight(e, {1, 0}) == Rational(1, 2));
    CHECK(double_current_weight(e, {0, 0}) == Rational(3, 4));
    PlanarGraph t = cycle_graph(3, uniform_weights(3, Rational(1, 2)));
    CHECK(double_current_weight(t, {0b111, 0}) == Rational(1, 4));
  }

  TEST_CASE("double current probabilities") {
    PlanarGraph t = identity_corpus()[3].graph;
    auto b = bverts(t);
    CHECK(double_current_prob(t, {b[0], b[2]}, Event::always()) == 1);
    PlanarGraph e = single_edge(Rational(1, 2));
    CHECK(double_current_prob(e, {0, 1}, Event::connected(0, 1)) == 1);
    CHECK_THROWS_AS(double_current_prob(e, {0}, Event::always()), InputError);
  }

  TEST_CASE("double current law against actual currents") {
    // the formula holds for any weights; compare with the law built from
    // integer currents with couplings atanh(x)
    for (const auto& ng : identity_corpus()) {
      if (ng.graph.edge_count() > 6) continue;
      CAPTURE(ng.name);
      auto b = bverts(ng.graph);
      for (std::vector<int> s : {std::vector<int>{}, {b[0], b[1]}}) {
        auto exact = double_current_distribution(ng.graph, s);
        auto ref = oracle::double_current_from_currents(ng.graph, s);
        CHECK(exact.size() == ref.size());
        for (const auto& [w, p] : ref) CHECK(exact[w].get_d() == doctest::Approx(p).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("four-cycle k = 2 events") {
    PlanarGraph c = cycle_graph(4, uniform_weights(4, Rational(1, 2)));
    auto v = bverts(c);
    auto s = [&](int i, int j) { return correlation(c, v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]); };
    Rational pf = s(0, 1) * s(2, 3) + s(0, 3) * s(1, 2) - s(0, 2) * s(1, 3);
    Rational ab_cd = double_current_prob(c, v, Event::parallel({v[1], v[2]}, {v[0], v[3]}));
    Rational ad_bc = double_current_prob(c, v, Event::parallel({v[0], v[1]}, {v[3], v[2]}));
    Rational x = double_current_prob(c, v, Event::all_connected(v));
    CHECK(ab_cd == (s(0, 3) * s(1, 2) - s(0, 2) * s(1, 3)) / pf);
    CHECK(ad_bc == (s(0, 1) * s(2, 3) - s(0, 2) * s(1, 3)) / pf);
    CHECK(x == s(0, 2) * s(1, 3) / pf);
    CHECK(ab_cd + ad_bc + x == 1);
    CHECK(prob_parallel(c, {v[1], v[2]}, {v[0], v[3]}) == ab_cd);
  }

  TEST_CASE("prob_parallel") {
    PlanarGraph t = identity_corpus()[2].graph;
    auto v = bverts(t);
    CHECK(prob_parallel(t, {v[0]}, {v[2]}) == 1);

    // 3x3 grid, A on the bottom row and B on the top row
    PlanarGraph g = grid_graph(3, 3, uniform_weights(12, Rational(1, 2)));
    auto corr = boundary_correlations(g);
    std::vector<int> a{0, 2}, b{6, 8};  // 0, 2, 8, 6 runs counterclockwise
    Rational p = prob_parallel(g, a, b);
    Rational rhs = det_exact(build_M(g, a, b, corr).entries) / pfaffian_exact(build_K(g, {0, 2, 6, 8}, corr).entries);
    CHECK(p == rhs);
    CHECK(p > 0);
    CHECK(p < 1);
    CHECK_THROWS_AS(prob_parallel(g, {0, 8}, {2, 6}), InputError);
  }

  TEST_CASE("single current weights with y = sqrt(1 - x^2)") {
    PlanarGraph e = single_edge(Rational(3, 5));
    CHECK(pythagorean_y(Rational(3, 5)) == Rational(4, 5));
    CHECK(single_current_weight_exact(e, {1, 0}) == Rational(3, 5));
    CHECK(single_current_weight_exact(e, {0, 1}) == Rational(1, 5));
    CHECK(single_current_weight_exact(e, {0, 0}) == Rational(4, 5));
    CHECK(single_current_weight_float(e, {0, 1}) == doctest::Approx(0.2).epsilon(1e-15));
    CHECK_THROWS_AS(pythagorean_y(Rational(1, 2)), InputError);
  }

  TEST_CASE("two-current convolution") {
    PlanarGraph e = single_edge(Rational(3, 5));
    auto c0 = convolve_two_currents(e, {});
    CHECK(c0[{0, 0}] == Rational(16, 25));
    CHECK(c0[{0, 1}] == Rational(9, 25));
    auto c1 = convolve_two_currents(e, {0, 1});
    CHECK(c1.size() == 1);
    CHECK(c1[{1, 0}] == 1);

    PlanarGraph t = cycle_graph(3, uniform_weights(3, Rational(3, 5)));
    auto conv = convolve_two_currents(t, {});
    auto formula = double_current_distribution(t, {});
    CHECK(conv.size() == 9);
    CHECK(conv == formula);
  }

  TEST_CASE("exact sampler") {
    PlanarGraph e = single_edge(Rational(1, 2));
    for (const auto& w : sample_double_current(e, {0, 1}, 50, 7)) CHECK(w == OmegaPair{1, 0});

    PlanarGraph t = cycle_graph(3, uniform_weights(3, Rational(1, 2)));
    const std::uint64_t n = 100000;
    auto samples = sample_double_current(t, {}, n, 12345);
    auto law = double_current_distribution(t, {});
    double p = law[{0b111, 0}].get_d();
    std::size_t hits = std::count(samples.begin(), samples.end(), OmegaPair{0b111, 0});
    double se = std::sqrt(p * (1 - p) / static_cast<double>(n));
    CHECK(std::abs(static_cast<double>(hits) / n - p) <= 3 * se);
  }

  TEST_CASE("sampler determinism") {
    PlanarGraph c = identity_corpus()[3].graph;
    auto v = bverts(c);
    CHECK(sample_double_current(c, v, 500, 99) == sample_double_current(c, v, 500, 99));
    CHECK(sample_double_current(c, v, 500, 99) != sample_double_current(c, v, 500, 100));
    SamplerOptions mc;
    mc.mode = SamplerMode::Mcmc;
    CHECK(sample_double_current(c, v, 400, 5, mc) == sample_double_current(c, v, 400, 5, mc));
  }

  TEST_CASE("mcmc sampler tracks the exact law") {
    PlanarGraph c = cycle_graph(4, uniform_weights(4, Rational(1, 2)));
    auto v = bverts(c);
    SamplerOptions mc;
    mc.mode = SamplerMode::Mcmc;
    const std::uint64_t n = 40000;
    auto samples = sample_double_current(c, v, n, 2024, mc);
    for (const Event& ev : {Event::parallel({v[1], v[2]}, {v[0], v[3]}), Event::all_connected(v)}) {
      double p = double_current_prob(c, v, ev).get_d();
      double se = std::sqrt(p * (1 - p) / static_cast<double>(n));
      // thinned chain output is close to independent; allow a little slack
      CHECK(std::abs(frequency(c, samples, ev) - p) <= 4 * se);
    }
  }

  TEST_CASE("samples csv") {
    PlanarGraph e = single_edge(Rational(1, 2));
    auto s = sample_double_current(e, {0, 1}, 2, 1);
    std::string csv = samples_csv(e, s, {Event::connected(0, 1)});
    CHECK(csv.rfind("sample_index,omega1,omega2,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  }
}
