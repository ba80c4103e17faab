#pragma once

#include <array>
#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "dkern/digraph.hpp"

namespace dkern {

enum class Family {
  Tournament,
  Semicomplete,
  BipartiteTournament,
  MultipartiteTournament,  // underlying graph complete multipartite
  QuasiTransitive,
  LocallyInSemicomplete,
  LocallyOutSemicomplete,
  LocallySemicomplete,
  ArcLocallyInSemicomplete,   // H1-free
  ArcLocallyOutSemicomplete,  // H2-free
  ThreeQuasiTransitive,       // H3-free
  ThreeAntiQuasiTransitive,   // H4-free
  TT3Free,
  Asymmetric,
};

inline constexpr std::array<Family, 14> kAllFamilies{
    Family::Tournament,
    Family::Semicomplete,
    Family::BipartiteTournament,
    Family::MultipartiteTournament,
    Family::QuasiTransitive,
    Family::LocallyInSemicomplete,
    Family::LocallyOutSemicomplete,
    Family::LocallySemicomplete,
    Family::ArcLocallyInSemicomplete,
    Family::ArcLocallyOutSemicomplete,
    Family::ThreeQuasiTransitive,
    Family::ThreeAntiQuasiTransitive,
    Family::TT3Free,
    Family::Asymmetric,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Shape of a membership counterexample. Vertex order in Violation::vertices
// follows the comment on each kind.
enum class ViolationKind {
  NonAdjacentPair,           // (u, v)
  SymmetricPair,             // (u, v)
  NonAdjacentInNeighbors,    // (v, x, y): x, y in N-(v), x and y non-adjacent
  NonAdjacentOutNeighbors,   // (v, x, y): x, y in N+(v)
  OpenDirectedPath,          // (u, v, w): u->v->w, u and w non-adjacent
  NonTransitiveNonAdjacency, // (u, v, w): u~/~v, v~/~w, u~w
  Triangle,                  // (a, b, c) pairwise adjacent
  H1Path,                    // (u, v, w, x): u->v<-w<-x, u and x non-adjacent
  H2Path,                    // u<-v<-w->x
  H3Path,                    // u->v->w->x
  H4Path,                    // anti-directed, either orientation class
  InducedTT3,                // (a, b, c) inducing a transitive tournament
};

std::string_view violation_kind_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::vector<int> vertices;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FamilyVerdict {
  std::optional<Violation> violation;

  bool member() const noexcept { return !violation.has_value(); }
  explicit operator bool() const noexcept { return member(); }
};

/// Decides membership by direct quantifier expansion. A "no" carries the
/// first violating tuple in lexicographic scan order. Works on digraphs of
/// any order (bit-row scans), not only mask-addressable ones.
FamilyVerdict in_family(const Digraph& d, Family f);

/// Re-checks a witness against the family's defining condition,
/// independently of the scan that produced it.
bool witnesses_violation(const Digraph& d, Family f, const Violation& v);

using FamilyReport = std::map<Family, FamilyVerdict>;

FamilyReport classify_families(const Digraph& d);

}  // namespace dkern
