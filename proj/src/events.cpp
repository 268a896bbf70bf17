#include "isingtp/events.hpp"

namespace isingtp {

namespace {

std::string list(const std::vector<int>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "+" : "") + std::to_string(vs[i]);
  return s;
}

}  // namespace

bool joined(const Components& c, int u, int v) {
  if (u == v) return true;
  int lu = c.label[static_cast<std::size_t>(u)];
  return lu >= 0 && lu == c.label[static_cast<std::size_t>(v)];
}

Event Event::connected(int u, int v) {
  return Event("conn_" + std::to_string(u) + "_" + std::to_string(v),
               [u, v](const Components& c) { return joined(c, u, v); });
}

Event Event::all_connected(std::vector<int> vs) {
  std::string name = "allconn_" + list(vs);
  return Event(std::move(name), [vs = std::move(vs)](const Components& c) {
    for (std::size_t i = 1; i < vs.size(); ++i)
      if (!joined(c, vs[0], vs[i])) return false;
    return true;
  });
}

Event Event::parallel(std::vector<int> a, std::vector<int> b) {
  std::string name = "parallel_" + list(a) + "_" + list(b);
  return Event(std::move(name), [a = std::move(a), b = std::move(b)](const Components& c) {
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j)
        if (joined(c, a[i], b[j]) != (i == j)) return false;
    return true;
  });
}

Event Event::always() {
  return Event("true", [](const Components&) { return true; });
}

bool Event::operator()(const PlanarGraph& g, const OmegaPair& w) const { return test_(components(g, w.support())); }

Event operator&&(const Event& x, const Event& y) {
  return Event("(" + x.name_ + "&" + y.name_ + ")", [x, y](const Components& c) { return x.holds(c) && y.holds(c); });
}

Event operator||(const Event& x, const Event& y) {
  return Event("(" + x.name_ + "|" + y.name_ + ")", [x, y](const Components& c) { return x.holds(c) || y.holds(c); });
}

Event operator!(const Event& x) {
  return Event("!" + x.name_, [x](const Components& c) { return !x.holds(c); });
}

}  // namespace isingtp
