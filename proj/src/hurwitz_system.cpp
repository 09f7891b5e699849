#include "weylbraid/hurwitz_system.hpp"

#include <sstream>

#include "weylbraid/detail/fnv.hpp"
#include "weylbraid/errors.hpp"

namespace weylbraid::hurwitz {

HurwitzSystem::HurwitzSystem(const weyl::WeylGroup& group, std::vector<int> axis_indices)
    : group_(&group), axes_(std::move(axis_indices)) {
  const int p = group.roots().positive_count();
  for (int a : axes_)
    if (a < 0 || a >= p) throw validation_error("axis index out of range");
}

std::uint64_t HurwitzSystem::hash() const {
  std::uint64_t h = detail::kFnvOffset;
  h = detail::fnv1a64_i32(size(), h);
  for (int a : axes_)
    for (int c : axis_vector(0).empty() ? rootsys::RootVector{} : roots().positive_roots()[a])
      h = detail::fnv1a64_i32(c, h);
  return h;
}

weyl::WeylElement HurwitzSystem::product() const {
  auto w = group_->identity();
  for (int a : axes_) w = w * group_->reflection_matrix(a);
  return w;
}

HurwitzSystem make_system(const weyl::WeylGroup& group,
                          const std::vector<rootsys::RootVector>& axes) {
  std::vector<int> idx;
  idx.reserve(axes.size());
  for (const auto& v : axes) idx.push_back(group.roots().axis_index(v));
  return make_system_by_index(group, std::move(idx));
}

HurwitzSystem make_system_by_index(const weyl::WeylGroup& group, std::vector<int> axis_indices) {
  if (axis_indices.empty()) throw validation_error("a Hurwitz system cannot be empty");
  HurwitzSystem sys(group, std::move(axis_indices));
  if (!sys.product().is_identity())
    throw validation_error("entry product is not the identity");
  if (sys.size() % 2 != 0)
    throw theorem_violation_error("reflection tuple with identity product has odd length");
  return sys;
}

BranchingData branching_signature(const HurwitzSystem& sys) {
  const auto& rs = sys.roots();
  BranchingData out;
  out.per_component.resize(rs.components().size());
  for (std::size_t c = 0; c < rs.components().size(); ++c)
    out.per_component[c].split = !rs.components()[c].simply_laced;
  for (int i = 0; i < sys.size(); ++i) {
    int a = sys.axis(i);
    auto& comp = out.per_component[static_cast<std::size_t>(rs.component_of(a))];
    (rs.is_long(a) ? comp.n_long : comp.n_short)++;
  }
  return out;
}

namespace {

void apply_move_raw(const rootsys::RootSystem& rs, std::vector<int>& axes, BraidMove m) {
  int n = static_cast<int>(axes.size());
  if (m.index < 1 || m.index >= n)
    throw validation_error("braid move index out of range");
  int i = m.index - 1;
  int a = axes[i], b = axes[i + 1];
  if (m.dir == MoveDir::forward) {
    axes[i] = rs.reflect_index(a, b);
    axes[i + 1] = a;
  } else {
    axes[i] = b;
    axes[i + 1] = rs.reflect_index(b, a);
  }
}

} // namespace

HurwitzSystem apply_move(const HurwitzSystem& sys, BraidMove m) {
  auto axes = sys.axes();
  apply_move_raw(sys.roots(), axes, m);
  return HurwitzSystem(sys.group(), std::move(axes));
}

HurwitzSystem replay(const HurwitzSystem& source, const MoveLog& log) {
  if (source.hash() != log.source_hash)
    throw validation_error("replay: source hash does not match the log");
  auto axes = source.axes();
  for (const auto& m : log.moves) apply_move_raw(source.roots(), axes, m);
  HurwitzSystem target(source.group(), std::move(axes));
  if (target.hash() != log.target_hash)
    throw validation_error("replay: target hash does not match the log");
  return target;
}

MoveBuilder::MoveBuilder(HurwitzSystem start) : start_(start), current_(std::move(start)) {}

void MoveBuilder::apply(BraidMove m) {
  current_ = apply_move(current_, m);
  moves_.push_back(m);
}

void MoveBuilder::apply_all(std::span<const BraidMove> moves) {
  for (const auto& m : moves) apply(m);
}

std::pair<HurwitzSystem, MoveLog> MoveBuilder::finish() const {
  MoveLog log;
  log.moves = moves_;
  log.source_hash = start_.hash();
  log.target_hash = current_.hash();
  return {current_, log};
}

} // namespace weylbraid::hurwitz
