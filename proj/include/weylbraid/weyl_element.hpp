#ifndef WEYLBRAID_WEYL_ELEMENT_HPP
#define WEYLBRAID_WEYL_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "weylbraid/root_system.hpp"

namespace weylbraid::weyl {

// A Weyl-group element as the integer matrix of its action in simple-root
// coordinates: column j holds the image of the j-th simple root.  Values are
// immutable, compare by matrix entries, and hash cheaply; this is the
// canonical form used everywhere (no word problem machinery).
class WeylElement {
public:
  WeylElement() = default;
  WeylElement(int rank, std::vector<int> row_major);
  static WeylElement identity_of_rank(int rank);

  int rank() const { return rank_; }
  int at(int i, int j) const { return m_[static_cast<std::size_t>(i) * rank_ + j]; }
  const std::vector<int>& data() const { return m_; }

  rootsys::RootVector apply(const rootsys::RootVector& x) const;

  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement inverse() const;
  bool is_identity() const;

  // Determinant; +1 or -1 for any root-permuting matrix.
  int determinant() const;

  std::uint64_t hash() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
  int rank_ = 0;
  std::vector<int> m_;
};

WeylElement multiply(const WeylElement& a, const WeylElement& b);
WeylElement inverse(const WeylElement& a);
int sign(const WeylElement& a);

} // namespace weylbraid::weyl

#endif
