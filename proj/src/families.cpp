#include "dkern/families.hpp"

#include <algorithm>
#include <bit>
#include <initializer_list>

#include "bits.hpp"

namespace dkern {
namespace {

using Row = std::span<const std::uint64_t>;

constexpr std::array<std::string_view, 14> kFamilyNames{
    "tournament",
    "semicomplete",
    "bipartite-tournament",
    "multipartite-tournament",
    "quasi-transitive",
    "locally-in-semicomplete",
    "locally-out-semicomplete",
    "locally-semicomplete",
    "arc-locally-in-semicomplete",
    "arc-locally-out-semicomplete",
    "3-quasi-transitive",
    "3-anti-quasi-transitive",
    "tt3-free",
    "asymmetric",
};

// Iterates the set bits of a row in increasing order.
template <typename Fn>
bool each(Row row, Fn&& fn, int from = 0) {
  for (int x = bits::next_set(row, from); x >= 0; x = bits::next_set(row, x + 1))
    if (fn(x)) return true;
  return false;
}

// Smallest x >= from with x set in `cand`, x not adjacent to u, x != u and x
// not in `skip`; -1 if none.
int first_nonadjacent(const Digraph& d, Row cand, int u, std::initializer_list<int> skip, int from = 0) {
  const Row out = d.out_row(u), in = d.in_row(u);
  for (std::size_t i = static_cast<std::size_t>(from) >> 6; i < cand.size(); ++i) {
    std::uint64_t w = cand[i] & ~out[i] & ~in[i];
    if (i == (static_cast<std::size_t>(from) >> 6)) w &= ~std::uint64_t{0} << (from & 63);
    for (; w; w &= w - 1) {
      const int x = static_cast<int>(i * 64) + std::countr_zero(w);
      if (x == u || std::find(skip.begin(), skip.end(), x) != skip.end()) continue;
      return x;
    }
  }
  return -1;
}

Violation make(ViolationKind k, std::initializer_list<int> vs) { return {k, std::vector<int>(vs)}; }

FamilyVerdict yes() { return {}; }
FamilyVerdict no(Violation v) { return {std::move(v)}; }

bits::Row all_vertices(int n) {
  bits::Row r(bits::words_for(n));
  for (int v = 0; v < n; ++v) bits::set(r.span(), v);
  return r;
}

std::optional<Violation> nonadjacent_pair(const Digraph& d) {
  const auto all = all_vertices(d.order());
  for (int u = 0; u < d.order(); ++u)
    if (int v = first_nonadjacent(d, all.span(), u, {}, u + 1); v >= 0)
      return make(ViolationKind::NonAdjacentPair, {u, v});
  return std::nullopt;
}

std::optional<Violation> symmetric_pair(const Digraph& d) {
  for (int u = 0; u < d.order(); ++u) {
    int sym = -1;
    each(d.out_row(u), [&](int v) {
      if (!d.arc(v, u)) return false;
      sym = v;
      return true;
    }, u + 1);
    if (sym >= 0) return make(ViolationKind::SymmetricPair, {u, sym});
  }
  return std::nullopt;
}

std::optional<Violation> tournament(const Digraph& d) {
  const auto all = all_vertices(d.order());
  for (int u = 0; u < d.order(); ++u) {
    const int gap = first_nonadjacent(d, all.span(), u, {}, u + 1);
    int sym = -1;
    each(d.out_row(u), [&](int v) {
      if (v > u && d.arc(v, u)) {
        sym = v;
        return true;
      }
      return false;
    }, u + 1);
    if (gap < 0 && sym < 0) continue;
    if (sym < 0 || (gap >= 0 && gap < sym)) return make(ViolationKind::NonAdjacentPair, {u, gap});
    return make(ViolationKind::SymmetricPair, {u, sym});
  }
  return std::nullopt;
}

std::optional<Violation> local_neighbors(const Digraph& d, int v, bool in) {
  const Row nb = in ? d.in_row(v) : d.out_row(v);
  std::optional<Violation> found;
  each(nb, [&](int x) {
    if (int y = first_nonadjacent(d, nb, x, {}, x + 1); y >= 0) {
      found = make(in ? ViolationKind::NonAdjacentInNeighbors : ViolationKind::NonAdjacentOutNeighbors,
                   {v, x, y});
      return true;
    }
    return false;
  });
  return found;
}

std::optional<Violation> locally(const Digraph& d, bool check_in, bool check_out) {
  for (int v = 0; v < d.order(); ++v) {
    if (check_in)
      if (auto w = local_neighbors(d, v, true)) return w;
    if (check_out)
      if (auto w = local_neighbors(d, v, false)) return w;
  }
  return std::nullopt;
}

std::optional<Violation> quasi_transitive(const Digraph& d) {
  std::optional<Violation> found;
  for (int u = 0; u < d.order() && !found; ++u)
    each(d.out_row(u), [&](int v) {
      if (int w = first_nonadjacent(d, d.out_row(v), u, {}); w >= 0) {
        found = make(ViolationKind::OpenDirectedPath, {u, v, w});
        return true;
      }
      return false;
    });
  return found;
}

std::optional<Violation> non_transitive_nonadjacency(const Digraph& d) {
  const int n = d.order();
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (v == u || d.adjacent(u, v)) continue;
      // w adjacent to u but not to v
      const Row ou = d.out_row(u), iu = d.in_row(u);
      const Row ov = d.out_row(v), iv = d.in_row(v);
      for (std::size_t i = 0; i < ou.size(); ++i) {
        std::uint64_t w = (ou[i] | iu[i]) & ~(ov[i] | iv[i]);
        if (w) return make(ViolationKind::NonTransitiveNonAdjacency, {u, v, static_cast<int>(i * 64) + std::countr_zero(w)});
      }
    }
  return std::nullopt;
}

std::optional<Violation> triangle(const Digraph& d) {
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!d.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c)
        if (d.adjacent(a, c) && d.adjacent(b, c)) return make(ViolationKind::Triangle, {a, b, c});
    }
  return std::nullopt;
}

enum class Dir { Out, In };

Row step(const Digraph& d, int v, Dir dir) { return dir == Dir::Out ? d.out_row(v) : d.in_row(v); }

// First (u, v, w, x) in lexicographic order with v in step1(u), w in step2(v),
// x in step3(w), all distinct, u and x non-adjacent.
std::optional<Violation> h_path(const Digraph& d, Dir s1, Dir s2, Dir s3, ViolationKind kind) {
  std::optional<Violation> found;
  for (int u = 0; u < d.order() && !found; ++u)
    each(step(d, u, s1), [&](int v) {
      return each(step(d, v, s2), [&](int w) {
        if (w == u) return false;
        if (int x = first_nonadjacent(d, step(d, w, s3), u, {v, w}); x >= 0) {
          found = make(kind, {u, v, w, x});
          return true;
        }
        return false;
      });
    });
  return found;
}

// Anti-directed 4-paths in both orientation classes:
//   A: u->v<-w->x    B: u<-v->w<-x
std::optional<Violation> h4_path(const Digraph& d) {
  const int n = d.order();
  bits::Row cand(d.words());
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (v == u || !d.adjacent(u, v)) continue;
      for (int w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        const bool a = d.arc(u, v) && d.arc(w, v);
        const bool b = d.arc(v, u) && d.arc(v, w);
        if (!a && !b) continue;
        cand.clear();
        const Row out = d.out_row(w), in = d.in_row(w);
        for (std::size_t i = 0; i < cand.size(); ++i) cand[i] = (a ? out[i] : 0) | (b ? in[i] : 0);
        if (int x = first_nonadjacent(d, cand.span(), u, {v, w}); x >= 0)
          return make(ViolationKind::H4Path, {u, v, w, x});
      }
    }
  return std::nullopt;
}

bool asym_arc(const Digraph& d, int u, int v) { return d.arc(u, v) && !d.arc(v, u); }

bool is_induced_tt3(const Digraph& d, int a, int b, int c) {
  const int t[3] = {a, b, c};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!d.adjacent(t[i], t[j]) || d.symmetric(t[i], t[j])) return false;
  const bool cyclic = (d.arc(a, b) && d.arc(b, c) && d.arc(c, a)) ||
                      (d.arc(a, c) && d.arc(c, b) && d.arc(b, a));
  return !cyclic;
}

std::optional<Violation> induced_tt3(const Digraph& d) {
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (!asym_arc(d, a, b) && !asym_arc(d, b, a)) continue;
      for (int c = b + 1; c < n; ++c)
        if (is_induced_tt3(d, a, b, c)) return make(ViolationKind::InducedTT3, {a, b, c});
    }
  return std::nullopt;
}

std::optional<Violation> find_violation(const Digraph& d, Family f) {
  switch (f) {
    case Family::Tournament: return tournament(d);
    case Family::Semicomplete: return nonadjacent_pair(d);
    case Family::BipartiteTournament:
      if (auto v = non_transitive_nonadjacency(d)) return v;
      if (auto v = triangle(d)) return v;
      return symmetric_pair(d);
    case Family::MultipartiteTournament: return non_transitive_nonadjacency(d);
    case Family::QuasiTransitive: return quasi_transitive(d);
    case Family::LocallyInSemicomplete: return locally(d, true, false);
    case Family::LocallyOutSemicomplete: return locally(d, false, true);
    case Family::LocallySemicomplete: return locally(d, true, true);
    case Family::ArcLocallyInSemicomplete:
      return h_path(d, Dir::Out, Dir::In, Dir::In, ViolationKind::H1Path);
    case Family::ArcLocallyOutSemicomplete:
      return h_path(d, Dir::In, Dir::In, Dir::Out, ViolationKind::H2Path);
    case Family::ThreeQuasiTransitive:
      return h_path(d, Dir::Out, Dir::Out, Dir::Out, ViolationKind::H3Path);
    case Family::ThreeAntiQuasiTransitive: return h4_path(d);
    case Family::TT3Free: return induced_tt3(d);
    case Family::Asymmetric: return symmetric_pair(d);
  }
  return std::nullopt;
}

bool kind_allowed(Family f, ViolationKind k) {
  using K = ViolationKind;
  switch (f) {
    case Family::Tournament: return k == K::NonAdjacentPair || k == K::SymmetricPair;
    case Family::Semicomplete: return k == K::NonAdjacentPair;
    case Family::BipartiteTournament:
      return k == K::NonTransitiveNonAdjacency || k == K::Triangle || k == K::SymmetricPair;
    case Family::MultipartiteTournament: return k == K::NonTransitiveNonAdjacency;
    case Family::QuasiTransitive: return k == K::OpenDirectedPath;
    case Family::LocallyInSemicomplete: return k == K::NonAdjacentInNeighbors;
    case Family::LocallyOutSemicomplete: return k == K::NonAdjacentOutNeighbors;
    case Family::LocallySemicomplete:
      return k == K::NonAdjacentInNeighbors || k == K::NonAdjacentOutNeighbors;
    case Family::ArcLocallyInSemicomplete: return k == K::H1Path;
    case Family::ArcLocallyOutSemicomplete: return k == K::H2Path;
    case Family::ThreeQuasiTransitive: return k == K::H3Path;
    case Family::ThreeAntiQuasiTransitive: return k == K::H4Path;
    case Family::TT3Free: return k == K::InducedTT3;
    case Family::Asymmetric: return k == K::SymmetricPair;
  }
  return false;
}

std::size_t arity(ViolationKind k) {
  using K = ViolationKind;
  switch (k) {
    case K::NonAdjacentPair:
    case K::SymmetricPair: return 2;
    case K::H1Path:
    case K::H2Path:
    case K::H3Path:
    case K::H4Path: return 4;
    default: return 3;
  }
}

}  // namespace

std::string_view family_name(Family f) { return kFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<Family> parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i)
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  return std::nullopt;
}

std::string_view violation_kind_name(ViolationKind k) {
  using K = ViolationKind;
  switch (k) {
    case K::NonAdjacentPair: return "non-adjacent-pair";
    case K::SymmetricPair: return "symmetric-pair";
    case K::NonAdjacentInNeighbors: return "non-adjacent-in-neighbors";
    case K::NonAdjacentOutNeighbors: return "non-adjacent-out-neighbors";
    case K::OpenDirectedPath: return "open-directed-path";
    case K::NonTransitiveNonAdjacency: return "non-transitive-non-adjacency";
    case K::Triangle: return "triangle";
    case K::H1Path: return "h1-path";
    case K::H2Path: return "h2-path";
    case K::H3Path: return "h3-path";
    case K::H4Path: return "h4-path";
    case K::InducedTT3: return "induced-tt3";
  }
  return "unknown";
}

FamilyVerdict in_family(const Digraph& d, Family f) {
  if (auto v = find_violation(d, f)) return no(std::move(*v));
  return yes();
}

bool witnesses_violation(const Digraph& d, Family f, const Violation& w) {
  if (!kind_allowed(f, w.kind) || w.vertices.size() != arity(w.kind)) return false;
  const auto& t = w.vertices;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= d.order()) return false;
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] == t[j]) return false;
  }
  auto arc = [&](std::size_t i, std::size_t j) { return d.arc(t[i], t[j]); };
  auto adj = [&](std::size_t i, std::size_t j) { return d.adjacent(t[i], t[j]); };
  using K = ViolationKind;
  switch (w.kind) {
    case K::NonAdjacentPair: return !adj(0, 1);
    case K::SymmetricPair: return arc(0, 1) && arc(1, 0);
    case K::NonAdjacentInNeighbors: return arc(1, 0) && arc(2, 0) && !adj(1, 2);
    case K::NonAdjacentOutNeighbors: return arc(0, 1) && arc(0, 2) && !adj(1, 2);
    case K::OpenDirectedPath: return arc(0, 1) && arc(1, 2) && !adj(0, 2);
    case K::NonTransitiveNonAdjacency: return !adj(0, 1) && !adj(1, 2) && adj(0, 2);
    case K::Triangle: return adj(0, 1) && adj(0, 2) && adj(1, 2);
    case K::H1Path: return arc(0, 1) && arc(2, 1) && arc(3, 2) && !adj(0, 3);
    case K::H2Path: return arc(1, 0) && arc(2, 1) && arc(2, 3) && !adj(0, 3);
    case K::H3Path: return arc(0, 1) && arc(1, 2) && arc(2, 3) && !adj(0, 3);
    case K::H4Path:
      return ((arc(0, 1) && arc(2, 1) && arc(2, 3)) || (arc(1, 0) && arc(1, 2) && arc(3, 2))) &&
             !adj(0, 3);
    case K::InducedTT3: return is_induced_tt3(d, t[0], t[1], t[2]);
  }
  return false;
}

FamilyReport classify_families(const Digraph& d) {
  FamilyReport report;
  for (Family f : kAllFamilies) report.emplace(f, in_family(d, f));
  return report;
}

}  // namespace dkern
