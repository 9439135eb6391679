#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace ramsey_forge::detail {

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

inline void set_bit(std::span<std::uint64_t> s, std::size_t i) {
  s[i >> 6] |= std::uint64_t{1} << (i & 63);
}
inline void clear_bit(std::span<std::uint64_t> s, std::size_t i) {
  s[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
}
inline bool test_bit(std::span<const std::uint64_t> s, std::size_t i) {
  return (s[i >> 6] >> (i & 63)) & 1u;
}

inline std::size_t popcount(std::span<const std::uint64_t> s) {
  std::size_t c = 0;
  for (auto w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

// Bits of s at positions >= from.
inline std::size_t popcount_from(std::span<const std::uint64_t> s,
                                 std::size_t from) {
  std::size_t w = from >> 6;
  if (w >= s.size()) return 0;
  std::size_t c = static_cast<std::size_t>(
      std::popcount(s[w] & (~std::uint64_t{0} << (from & 63))));
  for (++w; w < s.size(); ++w) c += static_cast<std::size_t>(std::popcount(s[w]));
  return c;
}

// Calls f(i) for every set bit i >= from, in increasing order.
template <class F>
void for_each_bit(std::span<const std::uint64_t> s, F&& f,
                  std::size_t from = 0) {
  std::size_t w = from >> 6;
  if (w >= s.size()) return;
  std::uint64_t word = s[w] & (~std::uint64_t{0} << (from & 63));
  for (;;) {
    while (word) {
      const int b = std::countr_zero(word);
      word &= word - 1;
      f(w * 64 + static_cast<std::size_t>(b));
    }
    if (++w >= s.size()) return;
    word = s[w];
  }
}

}  // namespace ramsey_forge::detail
