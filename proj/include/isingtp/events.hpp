#pragma once

#include "isingtp/edge_set.hpp"
#include "isingtp/graph.hpp"
#include "isingtp/omega.hpp"

#include <functional>
#include <string>
#include <vector>

namespace isingtp {

// Predicate on an omega through the components of omega_1 u omega_2 only.
class Event {
 public:
  using Test = std::function<bool(const Components&)>;

  Event(std::string name, Test test) : name_(std::move(name)), test_(std::move(test)) {}

  // u and v lie in one component (always true for u == v).
  static Event connected(int u, int v);
  // Every listed vertex lies in one component.
  static Event all_connected(std::vector<int> vs);
  // a_i <-> b_i for all i and a_i not <-> b_j for i != j.
  static Event parallel(std::vector<int> a, std::vector<int> b);

  bool operator()(const PlanarGraph& g, const OmegaPair& w) const;
  bool holds(const Components& c) const { return test_(c); }
  const std::string& name() const { return name_; }

  friend Event operator&&(const Event& x, const Event& y);
  friend Event operator||(const Event& x, const Event& y);
  friend Event operator!(const Event& x);

  static Event always();

 private:
  std::string name_;
  Test test_;
};

bool joined(const Components& c, int u, int v);

}  // namespace isingtp
