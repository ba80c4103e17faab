#include "dkern/characterizations.hpp"

#include <bit>

#include "bits.hpp"
#include "dkern/errors.hpp"
#include "dkern/families.hpp"
#include "dkern/perfect.hpp"

namespace dkern {
namespace {

constexpr std::array<std::string_view, 11> kCkiFamilyNames{
    "perfect-underlying",
    "semicomplete",
    "quasi-transitive",
    "semicomplete-multipartite",
    "locally-in-semicomplete",
    "locally-out-semicomplete",
    "locally-semicomplete",
    "asym-3-quasi-transitive",
    "asym-arc-locally-in-semicomplete",
    "asym-arc-locally-out-semicomplete",
    "asym-3-anti-quasi-transitive-tt3-free",
};

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Families whose conjunction defines each CKI family (PerfectUnderlying is
// handled separately).
std::vector<Family> defining_families(CkiFamily f) {
  switch (f) {
    case CkiFamily::PerfectUnderlying: return {};
    case CkiFamily::Semicomplete: return {Family::Semicomplete};
    case CkiFamily::QuasiTransitive: return {Family::QuasiTransitive};
    case CkiFamily::SemicompleteMultipartite: return {Family::MultipartiteTournament};
    case CkiFamily::LocallyInSemicomplete: return {Family::LocallyInSemicomplete};
    case CkiFamily::LocallyOutSemicomplete: return {Family::LocallyOutSemicomplete};
    case CkiFamily::LocallySemicomplete: return {Family::LocallySemicomplete};
    case CkiFamily::AsymThreeQuasiTransitive: return {Family::Asymmetric, Family::ThreeQuasiTransitive};
    case CkiFamily::AsymArcLocallyIn: return {Family::Asymmetric, Family::ArcLocallyInSemicomplete};
    case CkiFamily::AsymArcLocallyOut: return {Family::Asymmetric, Family::ArcLocallyOutSemicomplete};
    case CkiFamily::AsymThreeAntiQuasiTransitiveTT3Free:
      return {Family::Asymmetric, Family::ThreeAntiQuasiTransitive, Family::TT3Free};
  }
  return {};
}

enum class Rule { PerfectType, Locally, OnlyC3, OddCycles };

Rule rule_for(CkiFamily f) {
  switch (f) {
    case CkiFamily::PerfectUnderlying:
    case CkiFamily::Semicomplete:
    case CkiFamily::QuasiTransitive:
    case CkiFamily::SemicompleteMultipartite: return Rule::PerfectType;
    case CkiFamily::LocallyInSemicomplete:
    case CkiFamily::LocallyOutSemicomplete:
    case CkiFamily::LocallySemicomplete: return Rule::Locally;
    case CkiFamily::AsymThreeQuasiTransitive: return Rule::OnlyC3;
    default: return Rule::OddCycles;
  }
}

std::optional<PreconditionError> precondition_failure(const Digraph& d, CkiFamily f) {
  const std::string name(cki_family_name(f));
  if (f == CkiFamily::PerfectUnderlying) {
    const auto v = is_perfect(underlying(d));
    if (v.perfect()) return std::nullopt;
    return PreconditionError(name, std::string("underlying graph has an ") + std::string(perfectness_name(v.kind)), v.cycle);
  }
  for (Family g : defining_families(f)) {
    auto verdict = in_family(d, g);
    if (verdict.member()) continue;
    return PreconditionError(name,
                             "not " + std::string(family_name(g)) + " (" +
                                 std::string(violation_kind_name(verdict.violation->kind)) + ")",
                             verdict.violation->vertices);
  }
  return std::nullopt;
}

bool is_c3(const Digraph& d) { return d.order() == 3 && cycle_shape(d).is_directed_cycle(); }

}  // namespace

std::string_view cki_family_name(CkiFamily f) { return kCkiFamilyNames[static_cast<std::size_t>(f)]; }

std::optional<CkiFamily> parse_cki_family(std::string_view name) {
  for (CkiFamily f : kAllCkiFamilies)
    if (cki_family_name(f) == name) return f;
  return std::nullopt;
}

void require_family(const Digraph& d, CkiFamily f) {
  if (auto e = precondition_failure(d, f)) throw *e;
}

bool satisfies_family(const Digraph& d, CkiFamily f) { return !precondition_failure(d, f).has_value(); }

std::optional<std::vector<int>> is_full_circulant(const Digraph& d) {
  const int n = d.order();
  if (n < 4) return std::nullopt;
  const std::size_t words = d.words();
  std::vector<int> succ(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const auto out = d.out_row(v), in = d.in_row(v);
    int adjacent = 0;
    int asym_count = 0;
    for (std::size_t i = 0; i < words; ++i) {
      adjacent += std::popcount(out[i] | in[i]);
      const std::uint64_t asym = out[i] & ~in[i];
      asym_count += std::popcount(asym);
      if (asym) succ[static_cast<std::size_t>(v)] = static_cast<int>(i * 64) + std::countr_zero(asym);
    }
    if (adjacent != n - 1 || asym_count != 1) return std::nullopt;
  }
  // Every vertex has one asymmetric out-arc; the asymmetric part is a
  // Hamiltonian cycle iff walking successors from 0 visits all n vertices.
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  int v = 0;
  for (int pos = 0; pos < n; ++pos) {
    if (label[static_cast<std::size_t>(v)] >= 0) return std::nullopt;
    label[static_cast<std::size_t>(v)] = pos;
    v = succ[static_cast<std::size_t>(v)];
  }
  if (v != 0) return std::nullopt;
  return label;
}

std::optional<std::vector<int>> is_c7_12(const Digraph& d) {
  if (d.order() != 7) return std::nullopt;
  for (int v = 0; v < 7; ++v) {
    if (d.out_degree(v) != 2 || d.in_degree(v) != 2) return std::nullopt;
    if (d.out_mask(v) & d.in_mask(v)) return std::nullopt;
  }
  return is_isomorphic(d, c7_12());
}

std::string_view cki_shape_name(CkiShape s) {
  switch (s) {
    case CkiShape::None: return "none";
    case CkiShape::C3: return "directed-3-cycle";
    case CkiShape::OddCycle: return "directed-odd-cycle";
    case CkiShape::C7_12: return "c7-1-2";
    case CkiShape::FullCirculant: return "full-circulant";
  }
  return "unknown";
}

CkiDecision decide_cki_fast(const Digraph& d, CkiFamily f) {
  require_family(d, f);
  const int n = d.order();
  const auto yes = [](CkiShape s, std::string why) { return CkiDecision{true, s, std::move(why)}; };
  switch (rule_for(f)) {
    case Rule::PerfectType:
      if (is_c3(d)) return yes(CkiShape::C3, "directed 3-cycle");
      if (is_full_circulant(d)) return yes(CkiShape::FullCirculant, "full circulant on " + std::to_string(n) + " vertices");
      return {false, CkiShape::None, "neither a directed 3-cycle nor a full circulant"};
    case Rule::Locally: {
      const auto shape = cycle_shape(d);
      if (shape.is_odd_cycle()) return yes(CkiShape::OddCycle, shape.describe());
      if (is_c7_12(d)) return yes(CkiShape::C7_12, "isomorphic to C7(1,2)");
      if (is_full_circulant(d)) return yes(CkiShape::FullCirculant, "full circulant on " + std::to_string(n) + " vertices");
      return {false, CkiShape::None, "not a directed odd cycle, C7(1,2) or a full circulant: " + shape.describe()};
    }
    case Rule::OnlyC3:
      if (is_c3(d)) return yes(CkiShape::C3, "directed 3-cycle");
      return {false, CkiShape::None, "not a directed 3-cycle"};
    case Rule::OddCycles: {
      const auto shape = cycle_shape(d);
      if (shape.is_odd_cycle()) return yes(CkiShape::OddCycle, shape.describe());
      return {false, CkiShape::None, "not a directed odd cycle: " + shape.describe()};
    }
  }
  return {};
}

std::string_view kp_verdict_name(KpDecision::Verdict v) {
  switch (v) {
    case KpDecision::Verdict::Kp: return "kp";
    case KpDecision::Verdict::NotKp: return "not-kp";
    case KpDecision::Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::optional<VertexSet> find_induced_c3(const Digraph& d) {
  const int n = d.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      if (d.symmetric(a, b) || !d.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (d.symmetric(a, c) || d.symmetric(b, c)) continue;
        const bool forward = d.arc(a, b) && d.arc(b, c) && d.arc(c, a);
        const bool backward = d.arc(b, a) && d.arc(c, b) && d.arc(a, c);
        if (forward || backward) return VertexSet::of({a, b, c});
      }
    }
  return std::nullopt;
}

namespace {

// Induced directed cycles through their least vertex s: each new vertex is
// an out-neighbour of the last, larger than s, and non-adjacent to every
// path vertex except the last (and s, when it closes the cycle).
class OddCycleSearch {
 public:
  OddCycleSearch(const Digraph& d, SearchBudget& budget) : d_(d), budget_(budget) {}

  std::optional<VertexSet> run() {
    for (int s = 0; s < d_.order(); ++s) {
      start_ = s;
      if (extend(bit(s), s, 1)) return found_;
      if (budget_.exhausted) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  bool extend(std::uint64_t path, int last, int len) {
    if (!budget_.spend()) return false;
    const std::uint64_t interior = path & ~bit(start_) & ~bit(last);
    for (std::uint64_t c = d_.out_mask(last) & ~path; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      if (w < start_ || d_.arc(w, last)) continue;
      if (d_.adj_mask(w) & interior) continue;
      if (len >= 2 && d_.adjacent(w, start_)) {
        if (d_.arc(w, start_) && !d_.arc(start_, w) && (len + 1) % 2 == 1) {
          found_ = VertexSet(path | bit(w));
          return true;
        }
        continue;
      }
      if (extend(path | bit(w), w, len + 1)) return true;
      if (budget_.exhausted) return false;
    }
    return false;
  }

  const Digraph& d_;
  SearchBudget& budget_;
  int start_ = 0;
  VertexSet found_;
};

// Induced full circulants on >= 4 vertices: a directed path v0 -> v1 -> ...
// of asymmetric arcs whose non-consecutive pairs are all symmetric, closed by
// an asymmetric arc back to its least vertex v0.
class FullCirculantSearch {
 public:
  FullCirculantSearch(const Digraph& d, SearchBudget& budget) : d_(d), budget_(budget) {}

  std::optional<VertexSet> run() {
    for (int s = 0; s < d_.order(); ++s) {
      start_ = s;
      if (extend(bit(s), s, 1)) return found_;
      if (budget_.exhausted) return std::nullopt;
    }
    return std::nullopt;
  }

 private:
  std::uint64_t sym(int v) const { return d_.out_mask(v) & d_.in_mask(v); }

  bool extend(std::uint64_t path, int last, int len) {
    if (!budget_.spend()) return false;
    const std::uint64_t interior = path & ~bit(start_) & ~bit(last);
    const std::uint64_t asym_out = d_.out_mask(last) & ~d_.in_mask(last);
    for (std::uint64_t c = asym_out & ~path; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      if (w < start_) continue;
      if (interior & ~sym(w)) continue;
      if (len >= 2 && d_.arc(w, start_) && !d_.arc(start_, w)) {
        if (len + 1 >= 4) {
          found_ = VertexSet(path | bit(w));
          return true;
        }
        continue;
      }
      if (len >= 2 && !d_.symmetric(w, start_)) continue;
      if (extend(path | bit(w), w, len + 1)) return true;
      if (budget_.exhausted) return false;
    }
    return false;
  }

  const Digraph& d_;
  SearchBudget& budget_;
  int start_ = 0;
  VertexSet found_;
};

class CopySearch {
 public:
  CopySearch(const Digraph& d, const Digraph& p, SearchBudget& budget)
      : d_(d), p_(p), budget_(budget), image_(static_cast<std::size_t>(p.order()), -1) {}

  std::optional<VertexSet> run() {
    if (p_.order() > d_.order()) return std::nullopt;
    if (assign(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  bool assign(int i, std::uint64_t used) {
    if (i == p_.order()) {
      found_ = VertexSet(used);
      return true;
    }
    if (!budget_.spend()) return false;
    const int lo = i == 0 ? 0 : image_[0] + 1;
    for (int x = lo; x < d_.order(); ++x) {
      if (used & bit(x)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        const int y = image_[static_cast<std::size_t>(j)];
        ok = p_.arc(i, j) == d_.arc(x, y) && p_.arc(j, i) == d_.arc(y, x);
      }
      if (!ok) continue;
      image_[static_cast<std::size_t>(i)] = x;
      if (assign(i + 1, used | bit(x))) return true;
      if (budget_.exhausted) return false;
    }
    return false;
  }

  const Digraph& d_;
  const Digraph& p_;
  SearchBudget& budget_;
  std::vector<int> image_;
  VertexSet found_;
};

void check_mask(const Digraph& d, const char* what) {
  if (!d.mask_addressable()) throw CapExceeded(what, static_cast<std::size_t>(d.order()), kMaskCap);
}

}  // namespace

std::optional<VertexSet> find_induced_odd_cycle(const Digraph& d, SearchBudget& budget) {
  check_mask(d, "find_induced_odd_cycle");
  return OddCycleSearch(d, budget).run();
}

std::optional<VertexSet> find_induced_full_circulant(const Digraph& d, SearchBudget& budget) {
  check_mask(d, "find_induced_full_circulant");
  return FullCirculantSearch(d, budget).run();
}

std::optional<VertexSet> find_induced_copy(const Digraph& d, const Digraph& pattern, SearchBudget& budget) {
  check_mask(d, "find_induced_copy");
  return CopySearch(d, pattern, budget).run();
}

KpDecision decide_kp_fast(const Digraph& d, CkiFamily f, long budget) {
  require_family(d, f);
  check_mask(d, "decide_kp_fast");
  SearchBudget b{budget};
  KpDecision r;
  const auto hit = [&](std::optional<VertexSet> w, CkiShape s, const char* what) {
    if (!w) return false;
    r.verdict = KpDecision::Verdict::NotKp;
    r.witness = w;
    r.shape = s;
    r.reason = std::string("induced ") + what;
    return true;
  };
  bool done = false;
  switch (rule_for(f)) {
    case Rule::PerfectType:
      done = hit(find_induced_c3(d), CkiShape::C3, "directed 3-cycle") ||
             hit(find_induced_full_circulant(d, b), CkiShape::FullCirculant, "full circulant");
      break;
    case Rule::Locally:
      done = hit(find_induced_odd_cycle(d, b), CkiShape::OddCycle, "directed odd cycle") ||
             (d.order() >= 7 && hit(find_induced_copy(d, c7_12(), b), CkiShape::C7_12, "copy of C7(1,2)")) ||
             hit(find_induced_full_circulant(d, b), CkiShape::FullCirculant, "full circulant");
      break;
    case Rule::OnlyC3:
      done = hit(find_induced_c3(d), CkiShape::C3, "directed 3-cycle");
      break;
    case Rule::OddCycles:
      done = hit(find_induced_odd_cycle(d, b), CkiShape::OddCycle, "directed odd cycle");
      break;
  }
  if (done) return r;
  if (b.exhausted) {
    r.verdict = KpDecision::Verdict::Inconclusive;
    r.reason = "search budget of " + std::to_string(budget) + " nodes exhausted";
    return r;
  }
  r.reason = "no forbidden induced subdigraph";
  return r;
}

}  // namespace dkern
