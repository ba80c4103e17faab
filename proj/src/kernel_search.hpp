#pragma once

#include <array>
#include <bit>
#include <cstdint>

#include "dkern/digraph.hpp"

namespace dkern::detail {

// Branch-and-bound over independent sets of D[W], branching on the least
// undecided vertex with inclusion tried first.
//
// Propagation before every branch:
//  - an undecided vertex that can no longer be absorbed must join the kernel
//    (sinks of D[W] in particular), which excludes its neighbours;
//  - an excluded vertex with no included or undecided out-neighbour kills
//    the branch.
class KernelSearch {
 public:
  KernelSearch(const Digraph& d, std::uint64_t universe) : universe_(universe) {
    for (std::uint64_t b = universe; b; b &= b - 1) {
      const int v = std::countr_zero(b);
      out_[v] = d.out_mask(v) & universe;
      adj_[v] = d.adj_mask(v) & universe;
    }
  }

  // Calls visit(kernel_mask) for each kernel in search order until visit
  // returns true. Returns whether a visit stopped the search.
  template <typename Visit>
  bool run(Visit&& visit) const {
    return dfs(0, 0, visit);
  }

  bool exists() const {
    return run([](std::uint64_t) { return true; });
  }

 private:
  bool propagate(std::uint64_t& in, std::uint64_t& ex) const {
    while (true) {
      const std::uint64_t open = universe_ & ~in & ~ex;
      for (std::uint64_t b = ex; b; b &= b - 1)
        if ((out_[std::countr_zero(b)] & (in | open)) == 0) return false;
      bool forced = false;
      for (std::uint64_t b = open; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        if ((out_[v] & (in | open)) == 0) {
          in |= std::uint64_t{1} << v;
          ex |= adj_[v] & open;
          forced = true;
          break;
        }
      }
      if (!forced) return true;
    }
  }

  template <typename Visit>
  bool dfs(std::uint64_t in, std::uint64_t ex, Visit& visit) const {
    if (!propagate(in, ex)) return false;
    const std::uint64_t open = universe_ & ~in & ~ex;
    if (open == 0) return visit(in);
    const int v = std::countr_zero(open);
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (dfs(in | bit, ex | (adj_[v] & open & ~bit), visit)) return true;
    return dfs(in, ex | bit, visit);
  }

  std::uint64_t universe_;
  std::array<std::uint64_t, 64> out_{};
  std::array<std::uint64_t, 64> adj_{};
};

}  // namespace dkern::detail
