#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dkern/digraph.hpp"

namespace dkern {

/// Directed odd cycle u0 u1 ... u2n u0 (n >= 2) whose diagonals satisfy:
///  (i)   at least one diagonal exists;
///  (ii)  no diagonal ends at u0 or at an odd-indexed vertex;
///  (iii) no diagonal runs from u_{2i-1} to u_{2j} with 0 < i < j <= n.
struct VHCycle {
  std::vector<int> vertices;
  // Arcs of D between cycle vertices that are not cycle arcs, as vertex
  // pairs, sorted.
  std::vector<Arc> diagonals;
};

/// Enumerates directed cycles through u0 by increasing odd length (from 5 up
/// to `length_cap`, default the order), lexicographic within a length, and
/// returns the first one meeting all three conditions.
std::optional<VHCycle> find_vh_cycle(const Digraph& d, int u0, int length_cap = -1);

/// Empty when `c` is a valid VH cycle of `d`, else a description of the
/// first broken invariant. Checks the structure from scratch.
std::optional<std::string> check_vh_cycle(const Digraph& d, const VHCycle& c);

}  // namespace dkern
