#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dkern/vertex_set.hpp"

namespace dkern {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>;

inline constexpr int kMaskCap = 64;
// Upper bound for the large-graph mode (circulant construction, cycle shape,
// full-circulant recognition and the polynomial family checks).
inline constexpr int kLargeCap = 1 << 14;

/// Loop-free digraph on vertices 0..n-1 stored as bit rows.
///
/// Values are immutable once built; use DigraphBuilder or build_digraph().
/// Routines that index vertex subsets with VertexSet require order() <= 64.
class Digraph {
 public:
  Digraph() = default;

  int order() const noexcept { return n_; }
  bool mask_addressable() const noexcept { return n_ <= kMaskCap; }

  bool arc(int u, int v) const noexcept {
    return (out_[row(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  bool adjacent(int u, int v) const noexcept { return arc(u, v) || arc(v, u); }
  bool symmetric(int u, int v) const noexcept { return arc(u, v) && arc(v, u); }

  std::span<const std::uint64_t> out_row(int v) const noexcept {
    return {out_.data() + row(v), words_};
  }
  std::span<const std::uint64_t> in_row(int v) const noexcept {
    return {in_.data() + row(v), words_};
  }
  std::size_t words() const noexcept { return words_; }

  // Single-word views; valid only when mask_addressable().
  std::uint64_t out_mask(int v) const noexcept { return words_ ? out_[row(v)] : 0; }
  std::uint64_t in_mask(int v) const noexcept { return words_ ? in_[row(v)] : 0; }
  std::uint64_t adj_mask(int v) const noexcept { return out_mask(v) | in_mask(v); }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  int out_degree(int v) const noexcept;
  int in_degree(int v) const noexcept;
  std::size_t arc_count() const noexcept;
  // Sorted lexicographically.
  std::vector<Arc> arc_list() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  friend class DigraphBuilder;
  std::size_t row(int v) const noexcept {
    return static_cast<std::size_t>(v) * words_;
  }

  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

class DigraphBuilder {
 public:
  explicit DigraphBuilder(int n, int cap = kMaskCap);

  // Throws InvalidArgument on loops or out-of-range endpoints; duplicates
  // collapse.
  DigraphBuilder& add_arc(int u, int v);
  DigraphBuilder& remove_arc(int u, int v);
  bool has_arc(int u, int v) const noexcept { return d_.arc(u, v); }
  int order() const noexcept { return d_.order(); }

  Digraph build() const& { return d_; }
  Digraph build() && { return std::move(d_); }

 private:
  void check(int u, int v) const;
  Digraph d_;
};

Digraph build_digraph(int n, std::span<const Arc> arcs, int cap = kMaskCap);

/// Simple undirected graph on 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, int cap = kMaskCap);

  int order() const noexcept { return n_; }
  bool edge(int u, int v) const noexcept {
    return (adj_[row(u) + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const std::uint64_t> adj_row(int v) const noexcept {
    return {adj_.data() + row(v), words_};
  }
  std::uint64_t adj_mask(int v) const noexcept { return words_ ? adj_[row(v)] : 0; }
  int degree(int v) const noexcept;
  std::size_t edge_count() const noexcept;
  std::vector<Edge> edge_list() const;

  void add_edge(int u, int v);

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t row(int v) const noexcept {
    return static_cast<std::size_t>(v) * words_;
  }
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges, int cap = kMaskCap);

enum class View { Underlying, ComplementUnderlying, AsymmetricPart, SymmetricPart, Converse };

Graph underlying(const Digraph& d);
Graph complement(const Graph& g);
Digraph asymmetric_part(const Digraph& d);
Digraph symmetric_part(const Digraph& d);
Digraph converse(const Digraph& d);
std::variant<Graph, Digraph> derive_view(const Digraph& d, View view);

// Relabel by increasing original index. Requires a mask-addressable digraph.
Digraph induced(const Digraph& d, VertexSet w);
Graph induced(const Graph& g, VertexSet w);

// Vertex v of `d` becomes perm[v] in the result.
Digraph relabel(const Digraph& d, std::span<const int> perm);

/// Order m plus a nonempty connection set J of residues in 1..m-1.
class CirculantSpec {
 public:
  CirculantSpec(int m, std::vector<int> residues);
  // Offsets may be negative; they are reduced mod m. Rejects |j| >= m and
  // offsets congruent to 0.
  static CirculantSpec from_offsets(int m, std::span<const int> offsets);

  int order() const noexcept { return m_; }
  const std::vector<int>& residues() const noexcept { return residues_; }
  CirculantSpec negated() const;

  friend bool operator==(const CirculantSpec&, const CirculantSpec&) = default;

 private:
  int m_;
  std::vector<int> residues_;
};

Digraph construct_circulant(const CirculantSpec& spec);
Digraph directed_cycle(int n);
// C_n(1, ±2, ..., ±floor(n/2)), n >= 4.
Digraph full_circulant(int n);
// C_7(1, 2)
Digraph c7_12();
// C_{2n+1}(2, -3, 4, -5, ..., (-1)^n n), n >= 2.
Digraph lemma_circulant(int n);
Digraph transitive_tournament(int n);

struct CycleShape {
  enum class Violation { None, Empty, OutDegree, InDegree, Disconnected, SymmetricPair };

  Violation violation = Violation::Empty;
  int length = 0;
  // Offending vertex and its degree for degree violations; first vertex of
  // the pair for SymmetricPair.
  int vertex = -1;
  int degree = 0;

  bool is_directed_cycle() const noexcept { return violation == Violation::None; }
  bool is_odd_cycle() const noexcept { return is_directed_cycle() && length % 2 == 1; }
  std::string describe() const;
};

CycleShape cycle_shape(const Digraph& d);

inline constexpr int kDefaultIsoCap = 12;

/// Lexicographically least bijection f with arc(u,v) <=> arc(f(u),f(v)).
/// Throws CapExceeded when the order is above `cap`.
std::optional<std::vector<int>> is_isomorphic(const Digraph& a, const Digraph& b,
                                              int cap = kDefaultIsoCap);

}  // namespace dkern
