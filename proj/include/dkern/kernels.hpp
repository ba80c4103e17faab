#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dkern/digraph.hpp"
#include "dkern/vertex_set.hpp"

namespace dkern {

inline constexpr int kDefaultSearchCap = 20;
inline constexpr int kDefaultStatusCap = 15;
// Memory bound for the 2^n subset table.
inline constexpr int kMaxStatusCap = 26;

struct KernelCheck {
  enum class Kind { Kernel, NotIndependent, NotAbsorbent };

  Kind kind = Kind::Kernel;
  int u = -1;  // NotIndependent: pair (u, v), u < v. NotAbsorbent: vertex u.
  int v = -1;

  bool is_kernel() const noexcept { return kind == Kind::Kernel; }
};

/// Independence is checked first, then absorbency; the first violation in
/// lexicographic order is reported.
KernelCheck check_kernel(const Digraph& d, VertexSet s);

/// Kernel of D[w], in the labels of `d`. Branches on the least undecided
/// vertex, include before exclude, so the result is the kernel whose sorted
/// vertex list is lexicographically least.
std::optional<VertexSet> find_kernel_within(const Digraph& d, VertexSet w);

std::optional<VertexSet> find_kernel(const Digraph& d, int cap = kDefaultSearchCap);

/// Every kernel, in increasing bit-mask order.
std::vector<VertexSet> all_kernels(const Digraph& d, int cap = kDefaultSearchCap);

struct KernelStatus {
  enum class Verdict { KernelPerfect, CriticalKernelImperfect, NeitherWithKernel, NeitherWithoutKernel };

  Verdict verdict = Verdict::KernelPerfect;
  // Minimum-cardinality kernel-free proper induced vertex set (least mask
  // among those), present for the two Neither verdicts.
  std::optional<VertexSet> witness;

  bool kernel_perfect() const noexcept { return verdict == Verdict::KernelPerfect; }
  bool critical() const noexcept { return verdict == Verdict::CriticalKernelImperfect; }
};

std::string_view verdict_name(KernelStatus::Verdict v);

/// has-kernel flag for every vertex subset, indexed by mask.
using KernelTable = std::vector<std::uint8_t>;

KernelTable kernel_table_serial(const Digraph& d);
KernelTable kernel_table_parallel(const Digraph& d);
KernelStatus status_from_table(int n, std::span<const std::uint8_t> table);

/// Lazily memoized has-kernel over induced subdigraphs of one digraph.
class KernelOracle {
 public:
  explicit KernelOracle(const Digraph& d, int cap = kDefaultStatusCap);

  bool has_kernel(VertexSet w);
  // Fills the whole table (in parallel when built with OpenMP).
  KernelStatus status();
  const Digraph& digraph() const noexcept { return d_; }

 private:
  const Digraph& d_;
  std::vector<std::int8_t> memo_;  // -1 unknown, 0 no, 1 yes
};

KernelStatus kernel_status(const Digraph& d, int cap = kDefaultStatusCap);
KernelStatus kernel_status_serial(const Digraph& d, int cap = kDefaultStatusCap);

}  // namespace dkern
