#include "dkern/digraph.hpp"

#include <algorithm>
#include <bit>

#include "bits.hpp"
#include "dkern/errors.hpp"

namespace dkern {
namespace {

using bits::next_set;

void check_order(int n, int cap, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": negative order");
  if (n > cap) throw CapExceeded(what, static_cast<std::size_t>(n), static_cast<std::size_t>(cap));
}

}  // namespace

int Digraph::out_degree(int v) const noexcept { return bits::popcount(out_row(v)); }
int Digraph::in_degree(int v) const noexcept { return bits::popcount(in_row(v)); }

std::size_t Digraph::arc_count() const noexcept {
  std::size_t c = 0;
  for (auto w : out_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<Arc> Digraph::arc_list() const {
  std::vector<Arc> arcs;
  arcs.reserve(arc_count());
  for (int u = 0; u < n_; ++u)
    for (int v = next_set(out_row(u), 0); v >= 0; v = next_set(out_row(u), v + 1))
      arcs.emplace_back(u, v);
  return arcs;
}

DigraphBuilder::DigraphBuilder(int n, int cap) {
  check_order(n, cap, "digraph");
  d_.n_ = n;
  d_.words_ = bits::words_for(n);
  d_.out_.assign(static_cast<std::size_t>(n) * d_.words_, 0);
  d_.in_.assign(static_cast<std::size_t>(n) * d_.words_, 0);
}

void DigraphBuilder::check(int u, int v) const {
  const int n = d_.n_;
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidArgument("arc (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for order " + std::to_string(n));
  if (u == v) throw InvalidArgument("loop (" + std::to_string(u) + "," + std::to_string(v) + ")");
}

DigraphBuilder& DigraphBuilder::add_arc(int u, int v) {
  check(u, v);
  d_.out_[d_.row(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  d_.in_[d_.row(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  return *this;
}

DigraphBuilder& DigraphBuilder::remove_arc(int u, int v) {
  check(u, v);
  d_.out_[d_.row(u) + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  d_.in_[d_.row(v) + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  return *this;
}

Digraph build_digraph(int n, std::span<const Arc> arcs, int cap) {
  DigraphBuilder b(n, cap);
  for (auto [u, v] : arcs) b.add_arc(u, v);
  return std::move(b).build();
}

Graph::Graph(int n, int cap) {
  check_order(n, cap, "graph");
  n_ = n;
  words_ = bits::words_for(n);
  adj_.assign(static_cast<std::size_t>(n) * words_, 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} out of range for order " + std::to_string(n_));
  if (u == v) throw InvalidArgument("loop {" + std::to_string(u) + "}");
  adj_[row(u) + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  adj_[row(v) + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

int Graph::degree(int v) const noexcept { return bits::popcount(adj_row(v)); }

std::size_t Graph::edge_count() const noexcept {
  std::size_t c = 0;
  for (auto w : adj_) c += static_cast<std::size_t>(std::popcount(w));
  return c / 2;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u)
    for (int v = next_set(adj_row(u), u + 1); v >= 0; v = next_set(adj_row(u), v + 1))
      edges.emplace_back(u, v);
  return edges;
}

Graph build_graph(int n, std::span<const Edge> edges, int cap) {
  Graph g(n, cap);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph underlying(const Digraph& d) {
  Graph g(d.order(), kLargeCap);
  for (auto [u, v] : d.arc_list()) g.add_edge(u, v);
  return g;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph c(n, kLargeCap);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.edge(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

template <typename Keep>
Digraph filter_arcs(const Digraph& d, Keep keep) {
  DigraphBuilder b(d.order(), kLargeCap);
  for (auto [u, v] : d.arc_list())
    if (keep(u, v)) b.add_arc(u, v);
  return std::move(b).build();
}

}  // namespace

Digraph asymmetric_part(const Digraph& d) {
  return filter_arcs(d, [&](int u, int v) { return !d.arc(v, u); });
}

Digraph symmetric_part(const Digraph& d) {
  return filter_arcs(d, [&](int u, int v) { return d.arc(v, u); });
}

Digraph converse(const Digraph& d) {
  DigraphBuilder b(d.order(), kLargeCap);
  for (auto [u, v] : d.arc_list()) b.add_arc(v, u);
  return std::move(b).build();
}

std::variant<Graph, Digraph> derive_view(const Digraph& d, View view) {
  switch (view) {
    case View::Underlying: return underlying(d);
    case View::ComplementUnderlying: return complement(underlying(d));
    case View::AsymmetricPart: return asymmetric_part(d);
    case View::SymmetricPart: return symmetric_part(d);
    case View::Converse: return converse(d);
  }
  throw InvalidArgument("unknown view");
}

Digraph induced(const Digraph& d, VertexSet w) {
  if (!d.mask_addressable())
    throw CapExceeded("induced", static_cast<std::size_t>(d.order()), kMaskCap);
  if (!w.subset_of(d.vertices())) throw InvalidArgument("induced: vertex set out of range");
  const auto members = w.members();
  std::vector<int> index(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
  DigraphBuilder b(static_cast<int>(members.size()));
  for (int u : members)
    for (std::uint64_t o = d.out_mask(u) & w.bits(); o; o &= o - 1)
      b.add_arc(index[static_cast<std::size_t>(u)], index[static_cast<std::size_t>(std::countr_zero(o))]);
  return std::move(b).build();
}

Graph induced(const Graph& g, VertexSet w) {
  if (g.order() > kMaskCap)
    throw CapExceeded("induced", static_cast<std::size_t>(g.order()), kMaskCap);
  if (!w.subset_of(VertexSet::range(g.order())))
    throw InvalidArgument("induced: vertex set out of range");
  const auto members = w.members();
  Graph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.edge(members[i], members[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

Digraph relabel(const Digraph& d, std::span<const int> perm) {
  const int n = d.order();
  if (perm.size() != static_cast<std::size_t>(n)) throw InvalidArgument("relabel: size mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw InvalidArgument("relabel: not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  DigraphBuilder b(n, kLargeCap);
  for (auto [u, v] : d.arc_list()) b.add_arc(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return std::move(b).build();
}

std::string CycleShape::describe() const {
  switch (violation) {
    case Violation::None:
      return "directed cycle of length " + std::to_string(length) +
             (length % 2 ? " (odd)" : " (even)");
    case Violation::Empty: return "empty digraph";
    case Violation::OutDegree:
      return "out-degree " + std::to_string(degree) + " at vertex " + std::to_string(vertex);
    case Violation::InDegree:
      return "in-degree " + std::to_string(degree) + " at vertex " + std::to_string(vertex);
    case Violation::Disconnected:
      return "not a single cycle: vertex 0 lies on a cycle of length " + std::to_string(length);
    case Violation::SymmetricPair:
      return "symmetric pair at vertex " + std::to_string(vertex);
  }
  return {};
}

CycleShape cycle_shape(const Digraph& d) {
  CycleShape s;
  const int n = d.order();
  if (n == 0) return s;
  for (int v = 0; v < n; ++v) {
    if (int k = d.out_degree(v); k != 1) {
      s.violation = CycleShape::Violation::OutDegree;
      s.vertex = v;
      s.degree = k;
      return s;
    }
    if (int k = d.in_degree(v); k != 1) {
      s.violation = CycleShape::Violation::InDegree;
      s.vertex = v;
      s.degree = k;
      return s;
    }
  }
  // Every vertex has exactly one successor: the arcs form a permutation.
  int len = 0;
  int v = 0;
  do {
    v = next_set(d.out_row(v), 0);
    ++len;
  } while (v != 0);
  if (len != n) {
    s.violation = CycleShape::Violation::Disconnected;
    s.length = len;
    return s;
  }
  for (int u = 0; u < n; ++u) {
    const int w = next_set(d.out_row(u), 0);
    if (d.arc(w, u)) {
      s.violation = CycleShape::Violation::SymmetricPair;
      s.vertex = u;
      return s;
    }
  }
  s.violation = CycleShape::Violation::None;
  s.length = n;
  return s;
}

}  // namespace dkern
