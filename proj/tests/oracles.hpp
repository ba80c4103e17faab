#pragma once

// Brute-force reference implementations used only by the tests. Each one is
// a literal expansion of a definition over all subsets, tuples or
// permutations, and touches the library only through Digraph/Graph accessors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "dkern/digraph.hpp"

namespace oracle {

using dkern::Digraph;
using dkern::Graph;
using Mask = std::uint64_t;

inline bool in(Mask m, int v) { return (m >> v) & 1u; }

inline std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; v < 64; ++v)
    if (in(m, v)) out.push_back(v);
  return out;
}

inline bool is_kernel(const Digraph& d, Mask universe, Mask s) {
  for (int u = 0; u < d.order(); ++u) {
    if (!in(universe, u)) continue;
    for (int v = 0; v < d.order(); ++v)
      if (in(s, u) && in(s, v) && d.arc(u, v)) return false;
    if (in(s, u)) continue;
    bool absorbed = false;
    for (int v = 0; v < d.order(); ++v) absorbed = absorbed || (in(s, v) && d.arc(u, v));
    if (!absorbed) return false;
  }
  return true;
}

// Kernels of D[universe] in increasing mask order.
inline std::vector<Mask> kernels(const Digraph& d, Mask universe) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << d.order()); ++s)
    if ((s & ~universe) == 0 && is_kernel(d, universe, s)) out.push_back(s);
  return out;
}

inline std::vector<Mask> kernels(const Digraph& d) { return kernels(d, (Mask{1} << d.order()) - 1); }

inline bool has_kernel(const Digraph& d, Mask universe) { return !kernels(d, universe).empty(); }

enum class Status { KernelPerfect, Critical, NeitherWithKernel, NeitherWithoutKernel };

struct StatusResult {
  Status status;
  std::optional<Mask> witness;
};

inline StatusResult status(const Digraph& d) {
  const Mask full = (Mask{1} << d.order()) - 1;
  std::optional<Mask> witness;
  for (Mask w = 0; w < full; ++w)
    if (!has_kernel(d, w) && (!witness || std::popcount(w) < std::popcount(*witness))) witness = w;
  const bool whole = has_kernel(d, full);
  if (!witness) return {whole ? Status::KernelPerfect : Status::Critical, std::nullopt};
  return {whole ? Status::NeitherWithKernel : Status::NeitherWithoutKernel, witness};
}

// ---- families, by definition -------------------------------------------

inline bool adj(const Digraph& d, int u, int v) { return d.arc(u, v) || d.arc(v, u); }

inline bool asymmetric(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    for (int v = 0; v < d.order(); ++v)
      if (d.arc(u, v) && d.arc(v, u)) return false;
  return true;
}

inline bool semicomplete(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u)
    for (int v = u + 1; v < d.order(); ++v)
      if (!adj(d, u, v)) return false;
  return true;
}

inline bool tournament(const Digraph& d) { return semicomplete(d) && asymmetric(d); }

// Some assignment of at most `parts` colours makes adjacency equal to
// "different colour".
inline bool complete_multipartite(const Digraph& d, int parts) {
  const int n = d.order();
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = adj(d, u, v) == (colour[u] != colour[v]);
    if (ok) return true;
    int i = 0;
    while (i < n && ++colour[i] == parts) colour[i++] = 0;
    if (i == n) return false;
  }
}

inline bool quasi_transitive(const Digraph& d) {
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        if (u != v && v != w && u != w && d.arc(u, v) && d.arc(v, w) && !adj(d, u, w)) return false;
  return true;
}

inline bool locally(const Digraph& d, bool in_side) {
  const int n = d.order();
  for (int v = 0; v < n; ++v)
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        const bool both = in_side ? d.arc(x, v) && d.arc(y, v) : d.arc(v, x) && d.arc(v, y);
        if (x != v && y != v && both && !adj(d, x, y)) return false;
      }
  return true;
}

// Direction of each step of a 4-vertex path: true = forward (a -> b).
inline bool has_h_path(const Digraph& d, bool s1, bool s2, bool s3) {
  const int n = d.order();
  auto step = [&](int a, int b, bool fwd) { return fwd ? d.arc(a, b) : d.arc(b, a); };
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      for (int w = 0; w < n; ++w)
        for (int x = 0; x < n; ++x) {
          if (u == v || u == w || u == x || v == w || v == x || w == x) continue;
          if (step(u, v, s1) && step(v, w, s2) && step(w, x, s3) && !adj(d, u, x)) return true;
        }
  return false;
}

inline bool arc_locally_in(const Digraph& d) { return !has_h_path(d, true, false, false); }   // u->v<-w<-x
inline bool arc_locally_out(const Digraph& d) { return !has_h_path(d, false, false, true); }  // u<-v<-w->x
inline bool three_qt(const Digraph& d) { return !has_h_path(d, true, true, true); }
inline bool three_anti_qt(const Digraph& d) {
  return !has_h_path(d, true, false, true) && !has_h_path(d, false, true, false);
}

inline bool tt3_free(const Digraph& d) {
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (a != b && b != c && a != c && d.arc(a, b) && d.arc(b, c) && d.arc(a, c) && !d.arc(b, a) &&
            !d.arc(c, b) && !d.arc(c, a))
          return false;
  return true;
}

// ---- graphs ---------------------------------------------------------------

inline bool induces_cycle(const Graph& g, Mask s) {
  const auto vs = members(s);
  if (vs.size() < 3) return false;
  for (int v : vs) {
    int deg = 0;
    for (int w : vs) deg += g.edge(v, w);
    if (deg != 2) return false;
  }
  // Connected: walk from the first vertex.
  Mask seen = Mask{1} << vs[0];
  std::vector<int> stack{vs[0]};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : vs)
      if (g.edge(v, w) && !in(seen, w)) {
        seen |= Mask{1} << w;
        stack.push_back(w);
      }
  }
  return seen == s;
}

inline Graph complement_of(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.edge(u, v)) c.add_edge(u, v);
  return c;
}

inline bool has_odd_hole(const Graph& g, int min_length) {
  for (Mask s = 0; s < (Mask{1} << g.order()); ++s) {
    const int k = std::popcount(s);
    if (k >= min_length && k % 2 == 1 && induces_cycle(g, s)) return true;
  }
  return false;
}

inline bool perfect(const Graph& g) { return !has_odd_hole(g, 5) && !has_odd_hole(complement_of(g), 7); }

// Smallest clique of the underlying graph without an absorbing vertex,
// lexicographically first by sorted member list among those.
inline std::optional<Mask> sink_violation(const Digraph& d) {
  std::optional<Mask> best;
  for (Mask s = 0; s < (Mask{1} << d.order()); ++s) {
    const auto vs = members(s);
    if (vs.size() < 2) continue;
    bool clique = true;
    for (int u : vs)
      for (int v : vs) clique = clique && (u == v || adj(d, u, v));
    if (!clique) continue;
    bool absorbed = false;
    for (int v : vs) {
      bool all = true;
      for (int u : vs) all = all && (u == v || d.arc(u, v));
      absorbed = absorbed || all;
    }
    if (absorbed) continue;
    if (!best || std::popcount(s) < std::popcount(*best) ||
        (std::popcount(s) == std::popcount(*best) && vs < members(*best)))
      best = s;
  }
  return best;
}

// ---- directed structure ----------------------------------------------------

// D[s] is a single directed cycle through all of s, with no other arcs.
inline bool induces_directed_cycle(const Digraph& d, Mask s) {
  const auto vs = members(s);
  if (vs.size() < 2) return false;
  for (int v : vs) {
    int out = 0, inn = 0;
    for (int w : vs) {
      out += d.arc(v, w);
      inn += d.arc(w, v);
      if (d.arc(v, w) && d.arc(w, v)) return false;
    }
    if (out != 1 || inn != 1) return false;
  }
  int len = 0, v = vs[0];
  do {
    for (int w : vs)
      if (d.arc(v, w)) {
        v = w;
        break;
      }
    ++len;
  } while (v != vs[0]);
  return len == static_cast<int>(vs.size());
}

inline bool induces_full_circulant(const Digraph& d, Mask s) {
  const auto vs = members(s);
  const int k = static_cast<int>(vs.size());
  if (k < 4) return false;
  // Try every cyclic order starting at the least member.
  std::vector<int> rest(vs.begin() + 1, vs.end());
  do {
    std::vector<int> cyc{vs[0]};
    cyc.insert(cyc.end(), rest.begin(), rest.end());
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = 0; j < k && ok; ++j) {
        if (i == j) continue;
        const bool want = (j - i + k) % k != k - 1;  // every arc except i+1 -> i
        ok = d.arc(cyc[i], cyc[j]) == want;
      }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Lexicographically least isomorphism a -> b by trying every permutation.
inline std::optional<std::vector<int>> isomorphism(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> f(static_cast<std::size_t>(a.order()));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = 0; v < a.order() && ok; ++v) ok = u == v || a.arc(u, v) == b.arc(f[u], f[v]);
    if (ok) return f;
  } while (std::next_permutation(f.begin(), f.end()));
  return std::nullopt;
}

// VH cycle conditions on an explicit vertex sequence.
inline bool vh_valid(const Digraph& d, const std::vector<int>& c) {
  const int L = static_cast<int>(c.size());
  if (L < 5 || L % 2 == 0) return false;
  for (int i = 0; i < L; ++i)
    if (!d.arc(c[i], c[(i + 1) % L])) return false;
  int diagonals = 0;
  for (int i = 0; i < L; ++i)
    for (int j = 0; j < L; ++j) {
      if (i == j || (i + 1) % L == j || !d.arc(c[i], c[j])) continue;
      ++diagonals;
      if (j == 0 || j % 2 == 1) return false;
      if (i % 2 == 1 && i < j) return false;
    }
  return diagonals > 0;
}

// First valid sequence by (length, lexicographic order).
inline std::optional<std::vector<int>> vh_cycle(const Digraph& d, int u0) {
  const int n = d.order();
  for (int L = 5; L <= n; L += 2) {
    std::optional<std::vector<int>> best;
    std::vector<int> others;
    for (int v = 0; v < n; ++v)
      if (v != u0) others.push_back(v);
    // All ordered selections of L-1 distinct vertices, via subsets and permutations.
    for (Mask s = 0; s < (Mask{1} << others.size()); ++s) {
      if (std::popcount(s) != L - 1) continue;
      std::vector<int> pick;
      for (std::size_t i = 0; i < others.size(); ++i)
        if (in(s, static_cast<int>(i))) pick.push_back(others[i]);
      do {
        std::vector<int> c{u0};
        c.insert(c.end(), pick.begin(), pick.end());
        if (vh_valid(d, c) && (!best || c < *best)) best = c;
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace oracle
