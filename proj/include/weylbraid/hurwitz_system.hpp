#ifndef WEYLBRAID_HURWITZ_SYSTEM_HPP
#define WEYLBRAID_HURWITZ_SYSTEM_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "weylbraid/branching.hpp"
#include "weylbraid/weyl_group.hpp"

namespace weylbraid::hurwitz {

// Elementary braid move sigma_i (forward) or sigma_i^{-1} (inverse).  The
// index is 1-based and the move acts on the entries at positions i, i+1 in
// 1-based counting:
//   forward:  (.., t_i, t_{i+1}, ..) -> (.., t_i t_{i+1} t_i^{-1}, t_i, ..)
//   inverse:  (.., t_i, t_{i+1}, ..) -> (.., t_{i+1}, t_{i+1}^{-1} t_i t_{i+1}, ..)
// Everywhere else in the API entry positions are plain 0-based indices.
enum class MoveDir : std::uint8_t { forward, inverse };

struct BraidMove {
  int index = 1;
  MoveDir dir = MoveDir::forward;

  BraidMove inverted() const {
    return {index, dir == MoveDir::forward ? MoveDir::inverse : MoveDir::forward};
  }
  friend bool operator==(const BraidMove&, const BraidMove&) = default;
};

// A replayable witness of a braid equivalence.  Replaying `moves` from the
// system with hash `source_hash` must land exactly on `target_hash`.
struct MoveLog {
  std::vector<BraidMove> moves;
  std::uint64_t source_hash = 0;
  std::uint64_t target_hash = 0;
};

// An ordered tuple of reflections with product equal to the identity
// (taken left to right).  Entries are stored as indices into the positive
// roots of the underlying root system; the tuple length is always even.
class HurwitzSystem {
public:
  HurwitzSystem(const weyl::WeylGroup& group, std::vector<int> axis_indices);

  const weyl::WeylGroup& group() const { return *group_; }
  const rootsys::RootSystem& roots() const { return group_->roots(); }

  int size() const { return static_cast<int>(axes_.size()); }
  int axis(int i) const { return axes_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& axes() const { return axes_; }
  const rootsys::RootVector& axis_vector(int i) const {
    return roots().positive_roots()[axes_[static_cast<std::size_t>(i)]];
  }
  weyl::Reflection entry(int i) const { return group_->reflection(axis(i)); }

  // Stable 64-bit FNV-1a over the tuple length followed by the coefficient
  // vectors of all entry axes (32-bit little-endian words).  Fixed for
  // cross-run reproducibility; serialized inside MoveLog.
  std::uint64_t hash() const;

  // Product of all entries; the identity for any valid system.
  weyl::WeylElement product() const;

  friend bool operator==(const HurwitzSystem& a, const HurwitzSystem& b) {
    return a.group_ == b.group_ && a.axes_ == b.axes_;
  }

private:
  const weyl::WeylGroup* group_;
  std::vector<int> axes_;
};

// Validating constructors.  Reject empty tuples and tuples whose product is
// not the identity.
HurwitzSystem make_system(const weyl::WeylGroup& group,
                          const std::vector<rootsys::RootVector>& axes);
HurwitzSystem make_system_by_index(const weyl::WeylGroup& group, std::vector<int> axis_indices);

BranchingData branching_signature(const HurwitzSystem& sys);

HurwitzSystem apply_move(const HurwitzSystem& sys, BraidMove m);

// Folds the log over `source`; throws when the endpoint hashes do not match.
HurwitzSystem replay(const HurwitzSystem& source, const MoveLog& log);

// Applies moves one at a time while recording them; every composite
// operation is built on top of this so its MoveLog is correct by
// construction.
class MoveBuilder {
public:
  explicit MoveBuilder(HurwitzSystem start);

  void apply(BraidMove m);
  void apply_all(std::span<const BraidMove> moves);

  const HurwitzSystem& current() const { return current_; }
  int size() const { return current_.size(); }

  std::pair<HurwitzSystem, MoveLog> finish() const;

private:
  HurwitzSystem start_;
  HurwitzSystem current_;
  std::vector<BraidMove> moves_;
};

} // namespace weylbraid::hurwitz

#endif
