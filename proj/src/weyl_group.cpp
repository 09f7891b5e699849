#include "weylbraid/weyl_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "weylbraid/errors.hpp"

namespace weylbraid::weyl {

WeylGroup::WeylGroup(const rootsys::RootSystem& rs) : rs_(&rs) {
  const int n = rs.rank();
  const int p = rs.positive_count();
  reflections_.reserve(p);
  for (int k = 0; k < p; ++k) {
    const auto& beta = rs.positive_roots()[k];
    std::vector<int> m(static_cast<std::size_t>(n) * n);
    for (int j = 0; j < n; ++j) {
      rootsys::RootVector e(n, 0);
      e[j] = 1;
      auto img = rs.reflect(beta, e);
      for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + j] = img[i];
    }
    WeylElement w(n, std::move(m));
    recognize_[w.hash()].push_back(k);
    reflections_.push_back(std::move(w));
  }
}

Reflection WeylGroup::reflection(int axis_index) const {
  return Reflection{reflections_[axis_index], rs_->positive_roots()[axis_index], axis_index};
}

std::optional<int> WeylGroup::is_reflection(const WeylElement& g) const {
  auto it = recognize_.find(g.hash());
  if (it == recognize_.end()) return std::nullopt;
  for (int k : it->second)
    if (reflections_[k] == g) return k;
  return std::nullopt;
}

const std::vector<WeylElement>& WeylGroup::elements(std::size_t cap) const {
  std::call_once(elements_once_, [this, cap] {
    elements_cap_used_ = cap;
    try {
      elements_ = generate_subgroup(reflections_, cap);
    } catch (const cap_exceeded_error&) {
      elements_failed_ = true;
      return;
    }
    for (std::size_t i = 0; i < elements_.size(); ++i)
      element_ids_[elements_[i].hash()].push_back(static_cast<int>(i));
  });
  if (elements_failed_) {
    std::ostringstream os;
    os << "Weyl group of " << rs_->spec().to_string()
       << " exceeds the group closure cap " << elements_cap_used_;
    throw cap_exceeded_error(os.str());
  }
  return elements_;
}

int WeylGroup::element_id(const WeylElement& g) const {
  auto it = element_ids_.find(g.hash());
  if (it != element_ids_.end())
    for (int i : it->second)
      if (elements_[static_cast<std::size_t>(i)] == g) return i;
  throw validation_error("element does not belong to this Weyl group");
}

std::vector<int> WeylGroup::axis_permutation(const WeylElement& g) const {
  const int p = rs_->positive_count();
  std::vector<int> perm(p);
  for (int k = 0; k < p; ++k) perm[k] = rs_->axis_index(g.apply(rs_->positive_roots()[k]));
  return perm;
}

Reflection reflection_element(const WeylGroup& g, const rootsys::RootVector& beta) {
  return g.reflection(g.roots().axis_index(beta));
}

std::vector<WeylElement> generate_subgroup(std::span<const WeylElement> gens, std::size_t cap) {
  if (cap < 1) throw validation_error("subgroup cap must be at least 1");
  int rank = gens.empty() ? 0 : gens[0].rank();
  for (const auto& g : gens)
    if (g.rank() != rank) throw validation_error("generator rank mismatch");
  if (gens.empty()) return {WeylElement::identity_of_rank(0)};

  std::vector<WeylElement> closed_gens(gens.begin(), gens.end());
  for (const auto& g : gens) {
    auto gi = g.inverse();
    if (std::find(closed_gens.begin(), closed_gens.end(), gi) == closed_gens.end())
      closed_gens.push_back(std::move(gi));
  }

  std::unordered_map<std::uint64_t, std::vector<WeylElement>> seen;
  auto insert = [&seen](const WeylElement& w) {
    auto& bucket = seen[w.hash()];
    for (const auto& e : bucket)
      if (e == w) return false;
    bucket.push_back(w);
    return true;
  };

  std::deque<WeylElement> frontier;
  auto id = WeylElement::identity_of_rank(rank);
  insert(id);
  frontier.push_back(id);
  std::size_t count = 1;
  while (!frontier.empty()) {
    WeylElement cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : closed_gens) {
      WeylElement next = cur * g;
      if (insert(next)) {
        if (++count > cap) {
          std::ostringstream os;
          os << "subgroup closure truncated at cap " << cap;
          throw cap_exceeded_error(os.str());
        }
        frontier.push_back(std::move(next));
      }
    }
  }

  std::vector<WeylElement> out;
  out.reserve(count);
  for (auto& [h, bucket] : seen)
    for (auto& e : bucket) out.push_back(std::move(e));
  std::sort(out.begin(), out.end());
  return out;
}

int set_height(const rootsys::RootSystem& rs, std::span<const Reflection> t) {
  int h = 0;
  for (const auto& r : t) h += rs.height(r.axis);
  return h;
}

} // namespace weylbraid::weyl
