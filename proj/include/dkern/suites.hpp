#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dkern {

enum class SuiteKind { LemmaCycle, FastVsOracle, SpgtOrientations, VhExistence, T1Asymmetric };

inline constexpr std::array<SuiteKind, 5> kAllSuites{
    SuiteKind::LemmaCycle, SuiteKind::FastVsOracle, SuiteKind::SpgtOrientations,
    SuiteKind::VhExistence, SuiteKind::T1Asymmetric,
};

std::string_view suite_name(SuiteKind s);
std::optional<SuiteKind> parse_suite(std::string_view name);

struct SuiteParams {
  // lemma-cycle: cycle lengths k_min..k_max.
  int k_min = 4;
  int k_max = 9;
  // fast-vs-oracle: all digraphs up to general_n vertices and all
  // asymmetric digraphs up to asym_n vertices. t1-asymmetric uses asym_n.
  int general_n = 4;
  int asym_n = 5;
  // spgt-orientations: every graph up to 4 vertices plus `samples` random
  // 5-vertex graphs, or every 5-vertex graph when `exhaustive` is set.
  int samples = 200;
  bool exhaustive = false;
  std::uint64_t seed = 1;
  bool parallel = true;
};

/// Parses "key=value" items separated by commas or spaces. Keys: k (a..b or
/// a single value), n, asym-n, samples, exhaustive (0/1), seed, parallel
/// (0/1). Throws InvalidArgument on anything else.
SuiteParams parse_suite_params(std::string_view text, SuiteParams base = {});

struct SuiteViolation {
  std::string digraph;  // edge-list rendering
  std::string context;
  std::string expected;
  std::string got;

  friend auto operator<=>(const SuiteViolation&, const SuiteViolation&) = default;
};

struct SuiteReport {
  std::string name;
  std::uint64_t instances = 0;
  std::vector<SuiteViolation> violations;  // sorted
  double elapsed_seconds = 0;

  bool passed() const noexcept { return violations.empty(); }
};

SuiteReport run_suite(SuiteKind suite, const SuiteParams& params = {});

/// Re-runs the check behind one violation from its serialized digraph and
/// context alone; true when it still fails.
bool replay_violation(SuiteKind suite, const SuiteViolation& v);

}  // namespace dkern
