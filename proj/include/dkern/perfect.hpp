#pragma once

#include <optional>
#include <string_view>

#include "dkern/digraph.hpp"
#include "dkern/vertex_set.hpp"

namespace dkern {

inline constexpr int kDefaultPerfectCap = 14;
inline constexpr int kDefaultCliqueCap = 20;

struct PerfectnessVerdict {
  enum class Kind { Perfect, OddHole, OddAntihole };

  Kind kind = Kind::Perfect;
  VertexSet witness;
  // Witness vertices in cycle order (of the graph for a hole, of the
  // complement for an antihole).
  std::vector<int> cycle;

  bool perfect() const noexcept { return kind == Kind::Perfect; }
};

std::string_view perfectness_name(PerfectnessVerdict::Kind k);

/// Odd hole (>= 5) search in the graph, then odd antihole (>= 7) search as
/// an odd hole in the complement. Both grow induced paths depth-first from
/// the least vertex of the prospective cycle.
PerfectnessVerdict is_perfect(const Graph& g, int cap = kDefaultPerfectCap);

/// Chordless cycle of odd length >= min_length, in cycle order, if any.
std::optional<std::vector<int>> find_odd_hole(const Graph& g, int min_length);

struct SinkOrientation {
  // Minimum-cardinality clique of the underlying graph with no absorbing
  // vertex (first in lexicographic order among those), if any.
  std::optional<VertexSet> violating_clique;

  bool by_sinks() const noexcept { return !violating_clique.has_value(); }
};

SinkOrientation is_orientation_by_sinks(const Digraph& d, int cap = kDefaultCliqueCap);

}  // namespace dkern
