#ifndef WEYLBRAID_ROOT_SYSTEM_HPP
#define WEYLBRAID_ROOT_SYSTEM_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace weylbraid::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

char family_letter(Family f);

struct ComponentSpec {
  Family family;
  int rank;

  friend auto operator<=>(const ComponentSpec&, const ComponentSpec&) = default;
};

// A (possibly reducible) root-system type, e.g. "A2" or "A1+B3".  Components
// are kept sorted by (family, rank) so equal types compare equal regardless
// of the order they were written in.
class RootSystemSpec {
public:
  RootSystemSpec() = default;
  explicit RootSystemSpec(std::vector<ComponentSpec> components);

  // Parses compact form: one component "A2", several joined by '+': "B3+G2".
  static RootSystemSpec parse(std::string_view text);
  std::string to_string() const;

  const std::vector<ComponentSpec>& components() const { return components_; }
  int total_rank() const;

  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;

private:
  std::vector<ComponentSpec> components_;
};

// Roots are integer coefficient vectors over the concatenated simple roots
// of all components.  No floating point is used anywhere.
using RootVector = std::vector<int>;

struct ComponentInfo {
  ComponentSpec spec;
  int offset = 0;            // first simple-root coordinate of this block
  int rank = 0;
  bool simply_laced = true;
  int short_simple_count = 0; // simple roots of squared length 2
  int long_simple_count = 0;
  RootVector dominant_short;  // highest short root (highest root when simply laced)
  int dominant_short_index = -1;
  int positive_count = 0;     // number of positive roots in this component
};

// Exact integer model of a root system: Cartan data, the full positive-root
// list, length classes, and the reflection action.  Immutable after
// construction and safe to share across threads.
//
// Conventions, fixed once and used everywhere downstream:
//   * simple roots are numbered per component in Bourbaki order (A/B/C: the
//     chain with the distinguished end last; D: fork at the tail; E: node 2
//     hangs off node 4; F4: long-long-short-short; G2: short first);
//   * the invariant inner product is normalized so short roots have squared
//     length 2 (long roots then have 4, or 6 for G2); simply laced components
//     count as all short;
//   * positive roots are sorted by (height, lexicographic coefficients).
class RootSystem {
public:
  static RootSystem build(const RootSystemSpec& spec);

  const RootSystemSpec& spec() const { return spec_; }
  int rank() const { return rank_; }
  const std::vector<ComponentInfo>& components() const { return components_; }

  // cartan()[i][j] = n(alpha_i, alpha_j) = 2(alpha_i|alpha_j)/(alpha_j|alpha_j)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<std::vector<int>>& gram() const { return gram_; }

  const std::vector<RootVector>& positive_roots() const { return positive_; }
  int positive_count() const { return static_cast<int>(positive_.size()); }
  int root_count() const { return 2 * positive_count(); }

  int inner_product(const RootVector& x, const RootVector& y) const;

  // n(x, alpha); alpha must be a root.
  int cartan_integer(const RootVector& x, const RootVector& alpha) const;

  // s_alpha(x) = x - n(x, alpha) * alpha; maps roots to roots.
  RootVector reflect(const RootVector& alpha, const RootVector& x) const;

  // Sum of simple-root coefficients of a positive root.
  int height(const RootVector& beta) const;
  int height_of(int positive_index) const { return heights_[positive_index]; }

  RootVector positive_representative(const RootVector& beta) const;

  bool is_root(const RootVector& v) const;
  bool is_positive_root(const RootVector& v) const;

  // Index into positive_roots() of beta or -beta; throws if not a root.
  int axis_index(const RootVector& beta) const;
  std::optional<int> try_axis_index(const RootVector& beta) const;

  bool is_long(int positive_index) const { return long_[positive_index] != 0; }
  int component_of(int positive_index) const { return component_[positive_index]; }
  int squared_length(int positive_index) const;

  // Axis index of s_{beta_a}(beta_b): the conjugation action on reflections,
  // precomputed for every pair of positive roots.
  int reflect_index(int a, int b) const { return reflect_index_[a][b]; }

  // Axis index of the k-th simple root (global coordinate k).
  int simple_axis(int k) const { return simple_axis_[k]; }

private:
  RootSystemSpec spec_;
  int rank_ = 0;
  std::vector<ComponentInfo> components_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<RootVector> positive_;
  std::vector<int> heights_;
  std::vector<char> long_;
  std::vector<int> component_;
  std::vector<std::vector<int>> reflect_index_;
  std::vector<int> simple_axis_;

  struct VecHash {
    std::size_t operator()(const RootVector& v) const;
  };
  std::unordered_map<RootVector, int, VecHash> positive_index_;
};

RootSystem build_root_system(const RootSystemSpec& spec);

// Total height of a set of reflections given by their positive axes.
int set_height(const RootSystem& rs, std::span<const int> axis_indices);

} // namespace weylbraid::rootsys

#endif
