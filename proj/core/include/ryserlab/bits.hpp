#ifndef RYSERLAB_BITS_HPP
#define RYSERLAB_BITS_HPP

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace ryserlab {

// Fixed-width bitset with value semantics, hashing and fast scan, used for
// vertex sets (2 words = 128 vertices) and for edge sets inside the
// deletion/explosion recursion (4 words = 256 edges).  std::bitset lacks a
// hash and word access, hence this small replacement.
template <int Words>
struct BitsW {
  std::array<std::uint64_t, Words> w{};

  static constexpr int capacity() { return Words * 64; }

  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  bool none() const { return !any(); }

  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }

  // First set bit at position >= from, or -1.
  int find_next(int from) const {
    if (from >= capacity()) return -1;
    int word = from >> 6;
    std::uint64_t cur = w[word] & (~std::uint64_t(0) << (from & 63));
    while (true) {
      if (cur) return (word << 6) + std::countr_zero(cur);
      if (++word >= Words) return -1;
      cur = w[word];
    }
  }
  int find_first() const { return find_next(0); }

  // Mask with the first n bits set.
  static BitsW low_bits(int n) {
    BitsW r;
    for (int i = 0; i < Words; ++i) {
      int have = n - i * 64;
      if (have <= 0) break;
      r.w[i] = have >= 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << have) - 1);
    }
    return r;
  }

  friend BitsW operator&(BitsW a, const BitsW& b) {
    for (int i = 0; i < Words; ++i) a.w[i] &= b.w[i];
    return a;
  }
  friend BitsW operator|(BitsW a, const BitsW& b) {
    for (int i = 0; i < Words; ++i) a.w[i] |= b.w[i];
    return a;
  }
  friend BitsW operator^(BitsW a, const BitsW& b) {
    for (int i = 0; i < Words; ++i) a.w[i] ^= b.w[i];
    return a;
  }
  // a & ~b
  friend BitsW and_not(BitsW a, const BitsW& b) {
    for (int i = 0; i < Words; ++i) a.w[i] &= ~b.w[i];
    return a;
  }
  BitsW& operator&=(const BitsW& b) { return *this = *this & b; }
  BitsW& operator|=(const BitsW& b) { return *this = *this | b; }

  bool operator==(const BitsW&) const = default;

  bool is_subset_of(const BitsW& b) const {
    for (int i = 0; i < Words; ++i)
      if (w[i] & ~b.w[i]) return false;
    return true;
  }
  bool intersects(const BitsW& b) const {
    for (int i = 0; i < Words; ++i)
      if (w[i] & b.w[i]) return true;
    return false;
  }

  struct Hash {
    std::size_t operator()(const BitsW& b) const {
      std::uint64_t h = 1469598103934665603ull;  // FNV-1a over words
      for (auto x : b.w) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };
};

using Bits128 = BitsW<2>;
using Bits256 = BitsW<4>;

}  // namespace ryserlab

#endif  // RYSERLAB_BITS_HPP
