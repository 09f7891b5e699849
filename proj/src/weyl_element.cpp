#include "weylbraid/weyl_element.hpp"

#include "weylbraid/detail/fnv.hpp"
#include "weylbraid/errors.hpp"

namespace weylbraid::weyl {

namespace {

// Bareiss fraction-free elimination; exact for integer matrices of the sizes
// used here (rank <= 8).
long long int_det(std::vector<long long> a, int n) {
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k * n + k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i * n + k] != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
    prev = a[k * n + k];
  }
  return sign * a[(n - 1) * n + (n - 1)];
}

} // namespace

WeylElement::WeylElement(int rank, std::vector<int> row_major)
    : rank_(rank), m_(std::move(row_major)) {
  if (static_cast<int>(m_.size()) != rank_ * rank_)
    throw validation_error("matrix data does not match rank");
}

WeylElement WeylElement::identity_of_rank(int rank) {
  std::vector<int> m(static_cast<std::size_t>(rank) * rank, 0);
  for (int i = 0; i < rank; ++i) m[static_cast<std::size_t>(i) * rank + i] = 1;
  return WeylElement(rank, std::move(m));
}

rootsys::RootVector WeylElement::apply(const rootsys::RootVector& x) const {
  if (static_cast<int>(x.size()) != rank_)
    throw validation_error("vector length does not match element rank");
  rootsys::RootVector y(rank_, 0);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  if (rank_ != rhs.rank_) throw validation_error("rank mismatch in product");
  std::vector<int> m(static_cast<std::size_t>(rank_) * rank_, 0);
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      int v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rank_; ++j)
        m[static_cast<std::size_t>(i) * rank_ + j] += v * rhs.at(k, j);
    }
  return WeylElement(rank_, std::move(m));
}

WeylElement WeylElement::inverse() const {
  const int n = rank_;
  long long det = determinant();
  if (det != 1 && det != -1)
    throw validation_error("matrix is not invertible over the integers");
  // adjugate / det, with each cofactor an exact integer determinant
  std::vector<int> inv(static_cast<std::size_t>(n) * n, 0);
  if (n == 1) {
    inv[0] = static_cast<int>(det);
    return WeylElement(n, std::move(inv));
  }
  std::vector<long long> minor(static_cast<std::size_t>(n - 1) * (n - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int r = 0;
      for (int ii = 0; ii < n; ++ii) {
        if (ii == i) continue;
        int c = 0;
        for (int jj = 0; jj < n; ++jj) {
          if (jj == j) continue;
          minor[static_cast<std::size_t>(r) * (n - 1) + c] = at(ii, jj);
          ++c;
        }
        ++r;
      }
      long long cof = int_det(minor, n - 1);
      if ((i + j) % 2) cof = -cof;
      // adjugate transposes the cofactor matrix
      inv[static_cast<std::size_t>(j) * n + i] = static_cast<int>(cof * det);
    }
  return WeylElement(n, std::move(inv));
}

bool WeylElement::is_identity() const {
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

int WeylElement::determinant() const {
  std::vector<long long> a(m_.begin(), m_.end());
  return static_cast<int>(int_det(std::move(a), rank_));
}

std::uint64_t WeylElement::hash() const {
  std::uint64_t h = detail::kFnvOffset;
  h = detail::fnv1a64_i32(rank_, h);
  for (int v : m_) h = detail::fnv1a64_i32(v, h);
  return h;
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) { return a * b; }
WeylElement inverse(const WeylElement& a) { return a.inverse(); }
int sign(const WeylElement& a) { return a.determinant(); }

} // namespace weylbraid::weyl
