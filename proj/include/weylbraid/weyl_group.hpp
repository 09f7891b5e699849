#ifndef WEYLBRAID_WEYL_GROUP_HPP
#define WEYLBRAID_WEYL_GROUP_HPP

#include <cstddef>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "weylbraid/weyl_element.hpp"

namespace weylbraid::weyl {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

struct Reflection {
  WeylElement element;
  rootsys::RootVector axis; // positive representative
  int axis_index = -1;
};

// Per-root-system context: one reflection matrix per positive root plus a
// reverse lookup, built eagerly at construction.  The full element list is
// enumerated lazily on first use and cached.  The reference to the root
// system must outlive the group.
class WeylGroup {
public:
  explicit WeylGroup(const rootsys::RootSystem& rs);

  const rootsys::RootSystem& roots() const { return *rs_; }
  int rank() const { return rs_->rank(); }

  WeylElement identity() const { return WeylElement::identity_of_rank(rank()); }

  const WeylElement& reflection_matrix(int axis_index) const {
    return reflections_[axis_index];
  }
  Reflection reflection(int axis_index) const;

  // Axis index when g is a reflection, otherwise nothing.  Constant time.
  std::optional<int> is_reflection(const WeylElement& g) const;

  // All |W| elements in canonical (lexicographic matrix) order.  Fails
  // loudly if the group is larger than cap.
  const std::vector<WeylElement>& elements(std::size_t cap = kDefaultGroupCap) const;
  std::size_t order(std::size_t cap = kDefaultGroupCap) const { return elements(cap).size(); }
  int element_id(const WeylElement& g) const; // requires elements() built

  // How g permutes the positive roots up to sign: axis -> axis of g(root).
  std::vector<int> axis_permutation(const WeylElement& g) const;

private:
  const rootsys::RootSystem* rs_;
  std::vector<WeylElement> reflections_;
  std::unordered_map<std::uint64_t, std::vector<int>> recognize_; // hash -> candidates

  mutable std::once_flag elements_once_;
  mutable std::vector<WeylElement> elements_;
  mutable std::unordered_map<std::uint64_t, std::vector<int>> element_ids_;
  mutable bool elements_failed_ = false;
  mutable std::size_t elements_cap_used_ = 0;
};

Reflection reflection_element(const WeylGroup& g, const rootsys::RootVector& beta);

// BFS closure of the generating set under right multiplication; returns the
// whole subgroup in canonical order, or fails loudly when it passes cap.
std::vector<WeylElement> generate_subgroup(std::span<const WeylElement> gens,
                                           std::size_t cap = kDefaultGroupCap);

int set_height(const rootsys::RootSystem& rs, std::span<const Reflection> t);

} // namespace weylbraid::weyl

#endif
