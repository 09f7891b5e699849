#ifndef WEYLBRAID_DETAIL_FNV_HPP
#define WEYLBRAID_DETAIL_FNV_HPP

#include <cstddef>
#include <cstdint>

namespace weylbraid::detail {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
inline constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

inline std::uint64_t fnv1a64(const unsigned char* data, std::size_t len,
                             std::uint64_t h = kFnvOffset) {
  for (std::size_t i = 0; i < len; ++i) {
    h ^= data[i];
    h *= kFnvPrime;
  }
  return h;
}

// Feeds a 32-bit value as little-endian bytes (two's complement for
// negatives), independent of host endianness.
inline std::uint64_t fnv1a64_i32(std::int32_t v, std::uint64_t h) {
  auto u = static_cast<std::uint32_t>(v);
  unsigned char b[4] = {
      static_cast<unsigned char>(u & 0xff),
      static_cast<unsigned char>((u >> 8) & 0xff),
      static_cast<unsigned char>((u >> 16) & 0xff),
      static_cast<unsigned char>((u >> 24) & 0xff),
  };
  return fnv1a64(b, 4, h);
}

} // namespace weylbraid::detail

#endif
