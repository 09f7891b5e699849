#ifndef WEYLBRAID_BRANCHING_HPP
#define WEYLBRAID_BRANCHING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "weylbraid/root_system.hpp"

namespace weylbraid::hurwitz {

// Reflection counts of one irreducible component.  Simply laced components
// carry a single count (stored in n_short, all their roots counting as
// short); the others carry separate short/long counts.  All counts are even.
struct ComponentBranching {
  bool split = false;
  int n_short = 0;
  int n_long = 0;

  int total() const { return n_short + n_long; }
  friend bool operator==(const ComponentBranching&, const ComponentBranching&) = default;
};

// One entry per component of the root-system spec, in canonical component
// order.  Text grammar: "n=4" for a simply laced component, "ns=2,nl=2"
// otherwise; several components are joined by ';' with an optional
// "<family><rank>:" prefix each, e.g. "A2:n=4;G2:ns=2,nl=2".
struct BranchingData {
  std::vector<ComponentBranching> per_component;

  int total() const;
  std::string to_string(const rootsys::RootSystemSpec& spec) const;
  static BranchingData parse(const rootsys::RootSystemSpec& spec, std::string_view text);

  friend bool operator==(const BranchingData&, const BranchingData&) = default;
};

} // namespace weylbraid::hurwitz

#endif
