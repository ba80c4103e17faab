#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace dkern::bits {

inline std::size_t words_for(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

inline int popcount(std::span<const std::uint64_t> row) {
  int c = 0;
  for (auto w : row) c += std::popcount(w);
  return c;
}

inline bool test(std::span<const std::uint64_t> row, int v) {
  return (row[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
}

inline void set(std::span<std::uint64_t> row, int v) {
  row[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
}

inline void reset(std::span<std::uint64_t> row, int v) {
  row[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

// First set bit at index >= from, or -1.
inline int next_set(std::span<const std::uint64_t> row, int from) {
  std::size_t wi = static_cast<std::size_t>(from) >> 6;
  if (wi >= row.size()) return -1;
  std::uint64_t w = row[wi] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w) return static_cast<int>(wi * 64) + std::countr_zero(w);
    if (++wi == row.size()) return -1;
    w = row[wi];
  }
}

// Scratch row used by the witness scans.
class Row {
 public:
  explicit Row(std::size_t words) : w_(words, 0) {}
  std::span<std::uint64_t> span() { return w_; }
  std::span<const std::uint64_t> span() const { return w_; }
  std::uint64_t& operator[](std::size_t i) { return w_[i]; }
  std::size_t size() const { return w_.size(); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }
  int next(int from) const { return next_set(w_, from); }

 private:
  std::vector<std::uint64_t> w_;
};

}  // namespace dkern::bits
