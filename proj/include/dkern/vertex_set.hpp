#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace dkern {

/// Subset of {0..63} stored as a machine word; bit v set iff v is a member.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet of(std::initializer_list<int> members) {
    std::uint64_t b = 0;
    for (int v : members) b |= std::uint64_t{1} << v;
    return VertexSet(b);
  }
  static VertexSet from(std::span<const int> members) {
    std::uint64_t b = 0;
    for (int v : members) b |= std::uint64_t{1} << v;
    return VertexSet(b);
  }
  // {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1u; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int first() const noexcept { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr VertexSet with(int v) const noexcept {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(int v) const noexcept {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  constexpr VertexSet operator&(VertexSet o) const noexcept {
    return VertexSet(bits_ & o.bits_);
  }
  constexpr VertexSet operator|(VertexSet o) const noexcept {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator-(VertexSet o) const noexcept {
    return VertexSet(bits_ & ~o.bits_);
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace dkern
