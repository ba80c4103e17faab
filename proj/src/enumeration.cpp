#include "dkern/enumeration.hpp"

#include <cmath>
#include <random>

#include "dkern/errors.hpp"

namespace dkern {
namespace {

int pair_count(int n) { return n * (n - 1) / 2; }

std::uint64_t power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

void check_exhaustive(int n) {
  if (n < 0) throw InvalidArgument("enumeration: negative order");
  if (n > kExhaustiveCap)
    throw CapExceeded("exhaustive enumeration (use random_digraph above this order)", static_cast<std::size_t>(n),
                      kExhaustiveCap);
}

void apply_state(DigraphBuilder& b, int u, int v, unsigned state) {
  if (state & 1u) b.add_arc(u, v);
  if (state & 2u) b.add_arc(v, u);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

bool GenFilter::accepts(const Digraph& d) const {
  if (asymmetric_only && !in_family(d, Family::Asymmetric).member()) return false;
  if (family && !in_family(d, *family).member()) return false;
  return true;
}

std::uint64_t state_count(int n, bool asymmetric_only) {
  check_exhaustive(n);
  return power(asymmetric_only ? 3 : 4, pair_count(n));
}

Digraph digraph_from_state(int n, std::uint64_t index, bool asymmetric_only) {
  if (index >= state_count(n, asymmetric_only)) throw InvalidArgument("digraph_from_state: index out of range");
  const unsigned base = asymmetric_only ? 3 : 4;
  DigraphBuilder b(n);
  // Peel digits from the least significant end, i.e. the last pair.
  for (int u = n - 2; u >= 0; --u)
    for (int v = n - 1; v > u; --v) {
      apply_state(b, u, v, static_cast<unsigned>(index % base));
      index /= base;
    }
  return std::move(b).build();
}

// Pair states the filter can possibly accept. Dropping the rest keeps the
// visiting order, since the remaining states are still visited in increasing
// order, and makes tournament corpora 2^pairs instead of 4^pairs.
std::vector<unsigned> candidate_states(const GenFilter& filter) {
  const auto f = filter.family;
  const bool asymmetric = filter.asymmetric_only ||
                          (f && (*f == Family::Asymmetric || *f == Family::Tournament ||
                                 *f == Family::BipartiteTournament));
  const bool semicomplete = f && (*f == Family::Tournament || *f == Family::Semicomplete);
  std::vector<unsigned> states;
  for (unsigned s = semicomplete ? 1 : 0; s <= (asymmetric ? 2u : 3u); ++s) states.push_back(s);
  return states;
}

void for_each_digraph(int n, const GenFilter& filter, const std::function<bool(const Digraph&)>& visit) {
  check_exhaustive(n);
  const auto states = candidate_states(filter);
  const int pairs = pair_count(n);
  std::vector<Arc> pair_list;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pair_list.emplace_back(u, v);
  // Odometer over digit positions, last pair fastest.
  std::vector<std::size_t> digit(static_cast<std::size_t>(pairs), 0);
  for (;;) {
    DigraphBuilder b(n);
    for (int p = 0; p < pairs; ++p)
      apply_state(b, pair_list[static_cast<std::size_t>(p)].first, pair_list[static_cast<std::size_t>(p)].second,
                  states[digit[static_cast<std::size_t>(p)]]);
    Digraph d = std::move(b).build();
    if (filter.accepts(d) && !visit(d)) return;
    int p = pairs - 1;
    while (p >= 0 && ++digit[static_cast<std::size_t>(p)] == states.size()) digit[static_cast<std::size_t>(p--)] = 0;
    if (p < 0) return;
  }
}

std::vector<Digraph> enumerate_digraphs(int n, const GenFilter& filter) {
  std::vector<Digraph> out;
  for_each_digraph(n, filter, [&](const Digraph& d) {
    out.push_back(d);
    return true;
  });
  return out;
}

std::uint64_t graph_count(int n) {
  check_exhaustive(n);
  return std::uint64_t{1} << pair_count(n);
}

Graph graph_from_state(int n, std::uint64_t index) {
  if (index >= graph_count(n)) throw InvalidArgument("graph_from_state: index out of range");
  Graph g(n);
  for (int u = n - 2; u >= 0; --u)
    for (int v = n - 1; v > u; --v) {
      if (index & 1u) g.add_edge(u, v);
      index >>= 1;
    }
  return g;
}

std::uint64_t biorientation_count(const Graph& g) {
  const auto e = g.edge_count();
  if (e > static_cast<std::size_t>(kBiorientationEdgeCap))
    throw CapExceeded("enumerate_biorientations", e, kBiorientationEdgeCap);
  return power(3, static_cast<int>(e));
}

Digraph biorientation_from_state(const Graph& g, std::uint64_t index) {
  if (index >= biorientation_count(g)) throw InvalidArgument("biorientation_from_state: index out of range");
  const auto edges = g.edge_list();
  DigraphBuilder b(g.order());
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    apply_state(b, it->first, it->second, static_cast<unsigned>(index % 3) + 1);
    index /= 3;
  }
  return std::move(b).build();
}

std::vector<Digraph> enumerate_biorientations(const Graph& g) {
  const std::uint64_t total = biorientation_count(g);
  std::vector<Digraph> out;
  out.reserve(total);
  for (std::uint64_t i = 0; i < total; ++i) out.push_back(biorientation_from_state(g, i));
  return out;
}

Digraph random_digraph(int n, const std::array<double, 4>& probs, std::uint64_t seed, const GenFilter& filter,
                       int retry_cap) {
  if (n < 0 || n > kMaskCap) throw InvalidArgument("random_digraph: order must be in 0..64");
  double sum = 0;
  for (double p : probs) {
    if (!(p >= 0)) throw InvalidArgument("random_digraph: negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw InvalidArgument("random_digraph: probabilities must sum to 1");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < retry_cap; ++attempt) {
    DigraphBuilder b(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        const double x = uniform01(rng);
        unsigned state = 0;
        double acc = probs[0];
        while (state < 3 && x >= acc) acc += probs[++state];
        apply_state(b, u, v, state);
      }
    Digraph d = std::move(b).build();
    if (filter.accepts(d)) return d;
  }
  throw Error("random_digraph: retry cap of " + std::to_string(retry_cap) + " exhausted");
}

Graph random_graph(int n, double edge_probability, std::uint64_t seed) {
  if (n < 0 || n > kMaskCap) throw InvalidArgument("random_graph: order must be in 0..64");
  if (!(edge_probability >= 0 && edge_probability <= 1)) throw InvalidArgument("random_graph: probability out of range");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < edge_probability) g.add_edge(u, v);
  return g;
}

}  // namespace dkern
