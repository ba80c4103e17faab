#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dkern/digraph.hpp"
#include "dkern/vertex_set.hpp"

namespace dkern {

/// Families with a polynomial CKI characterization.
enum class CkiFamily {
  PerfectUnderlying,
  Semicomplete,
  QuasiTransitive,
  SemicompleteMultipartite,
  LocallyInSemicomplete,
  LocallyOutSemicomplete,
  LocallySemicomplete,
  AsymThreeQuasiTransitive,
  AsymArcLocallyIn,
  AsymArcLocallyOut,
  AsymThreeAntiQuasiTransitiveTT3Free,
};

inline constexpr std::array<CkiFamily, 11> kAllCkiFamilies{
    CkiFamily::PerfectUnderlying,
    CkiFamily::Semicomplete,
    CkiFamily::QuasiTransitive,
    CkiFamily::SemicompleteMultipartite,
    CkiFamily::LocallyInSemicomplete,
    CkiFamily::LocallyOutSemicomplete,
    CkiFamily::LocallySemicomplete,
    CkiFamily::AsymThreeQuasiTransitive,
    CkiFamily::AsymArcLocallyIn,
    CkiFamily::AsymArcLocallyOut,
    CkiFamily::AsymThreeAntiQuasiTransitiveTT3Free,
};

std::string_view cki_family_name(CkiFamily f);
std::optional<CkiFamily> parse_cki_family(std::string_view name);

/// Throws PreconditionError (carrying the family witness) when `d` is not
/// in the family. PerfectUnderlying uses the capped odd-hole search.
void require_family(const Digraph& d, CkiFamily f);
bool satisfies_family(const Digraph& d, CkiFamily f);

/// Labeling v -> position on the asymmetric Hamiltonian cycle (vertex 0 at
/// position 0) when d is C_n(1, ±2, ..., ±floor(n/2)) for some n >= 4.
/// O(n^2 / 64); works in large-graph mode.
std::optional<std::vector<int>> is_full_circulant(const Digraph& d);

/// Isomorphism d -> C_7(1,2) if one exists.
std::optional<std::vector<int>> is_c7_12(const Digraph& d);

// The shape a fast decision matched, or would need to match.
enum class CkiShape { None, C3, OddCycle, C7_12, FullCirculant };

std::string_view cki_shape_name(CkiShape s);

struct CkiDecision {
  bool cki = false;
  CkiShape shape = CkiShape::None;
  std::string reason;
};

CkiDecision decide_cki_fast(const Digraph& d, CkiFamily f);

inline constexpr long kDefaultKpBudget = 5'000'000;

struct KpDecision {
  enum class Verdict { Kp, NotKp, Inconclusive };

  Verdict verdict = Verdict::Kp;
  // Vertex set of the forbidden induced subdigraph for NotKp.
  std::optional<VertexSet> witness;
  CkiShape shape = CkiShape::None;
  std::string reason;
};

std::string_view kp_verdict_name(KpDecision::Verdict v);

/// Forbidden induced subdigraph search. `budget` bounds the number of search
/// nodes; running out without a conclusion yields Inconclusive.
KpDecision decide_kp_fast(const Digraph& d, CkiFamily f, long budget = kDefaultKpBudget);

// Forbidden-pattern searches, exposed for testing. Each returns the vertex
// set of the first induced copy found, nullopt when none exists, and sets
// `exhausted` when the budget ran out first.
struct SearchBudget {
  long remaining;
  bool exhausted = false;
  bool spend() {
    if (remaining-- > 0) return true;
    exhausted = true;
    return false;
  }
};

std::optional<VertexSet> find_induced_c3(const Digraph& d);
std::optional<VertexSet> find_induced_odd_cycle(const Digraph& d, SearchBudget& budget);
std::optional<VertexSet> find_induced_full_circulant(const Digraph& d, SearchBudget& budget);
std::optional<VertexSet> find_induced_copy(const Digraph& d, const Digraph& pattern, SearchBudget& budget);

}  // namespace dkern
