#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "dkern/digraph.hpp"
#include "dkern/families.hpp"

namespace dkern {

inline constexpr int kExhaustiveCap = 6;
inline constexpr int kBiorientationEdgeCap = 12;
inline constexpr int kDefaultRetryCap = 100'000;

/// Conjunctive filter: asymmetry first, then family membership.
struct GenFilter {
  std::optional<Family> family;
  bool asymmetric_only = false;

  bool accepts(const Digraph& d) const;
};

// Pair order is (0,1), (0,2), ..., (0,n-1), (1,2), ...; the first pair is
// the most significant digit. Pair states: 0 none, 1 u->v, 2 v->u, 3 both
// (u < v). Asymmetric enumeration uses only the first three.
std::uint64_t state_count(int n, bool asymmetric_only);
Digraph digraph_from_state(int n, std::uint64_t index, bool asymmetric_only);

/// Visits every labeled digraph on n vertices accepted by the filter, in
/// increasing state order. `visit` returns false to stop early.
void for_each_digraph(int n, const GenFilter& filter, const std::function<bool(const Digraph&)>& visit);
std::vector<Digraph> enumerate_digraphs(int n, const GenFilter& filter = {});

// Graphs on n vertices: bit i of the index (most significant = first pair)
// says whether the i-th pair is an edge.
std::uint64_t graph_count(int n);
Graph graph_from_state(int n, std::uint64_t index);

// Each edge of G, in edge_list() order (first edge most significant), takes
// one of u->v, v->u, both.
std::uint64_t biorientation_count(const Graph& g);
Digraph biorientation_from_state(const Graph& g, std::uint64_t index);
std::vector<Digraph> enumerate_biorientations(const Graph& g);

/// Pair states drawn independently with probabilities {none, ->, <-, both}
/// from mt19937_64(seed), rejection-sampled until the filter accepts.
Digraph random_digraph(int n, const std::array<double, 4>& probs, std::uint64_t seed,
                       const GenFilter& filter = {}, int retry_cap = kDefaultRetryCap);
Graph random_graph(int n, double edge_probability, std::uint64_t seed);

inline constexpr std::array<double, 4> kUniformPairStates{0.25, 0.25, 0.25, 0.25};

}  // namespace dkern
