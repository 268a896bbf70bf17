#include "isingtp/omega.hpp"

#include "isingtp/errors.hpp"

namespace isingtp {

mpz_class count_sourceless(const PlanarGraph& g, EdgeMask omega) {
  Components c = components(g, omega);
  long exponent = size_of(omega) - c.touched + c.count;
  mpz_class r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
  return r;
}

mpz_class count_sourceless_bruteforce(const PlanarGraph& g, EdgeMask omega) {
  if (size_of(omega) > 24) throw CapacityError("brute-force sourceless count limited to 24 edges");
  std::vector<int> ids;
  for_each_edge(omega, [&](int e) { ids.push_back(e); });
  const std::uint64_t total = std::uint64_t{1} << ids.size();
  std::vector<int> parity(static_cast<std::size_t>(g.vertex_count()));
  mpz_class count = 0;
  for (std::uint64_t s = 0; s < total; ++s) {
    std::fill(parity.begin(), parity.end(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i)
      if ((s >> i) & 1) {
        parity[static_cast<std::size_t>(g.edge(ids[i]).u)] ^= 1;
        parity[static_cast<std::size_t>(g.edge(ids[i]).v)] ^= 1;
      }
    bool even = true;
    for (int p : parity) even = even && p == 0;
    if (even) ++count;
  }
  return count;
}

Rational parity_weight(const PlanarGraph& g, const OmegaPair& w) {
  Rational r(1);
  for (const auto& e : g.edges()) {
    if (contains(w.odd, e.id)) r *= e.x;
    else if (contains(w.even, e.id)) r *= e.x * e.x;
    else r *= 1 - e.x * e.x;
  }
  return r;
}

std::string to_string(const OmegaPair& w) {
  return "(" + mask_to_string(w.odd, ',') + "|" + mask_to_string(w.even, ',') + ")";
}

}  // namespace isingtp
