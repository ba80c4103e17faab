#include "dkern/kernels.hpp"

#include <algorithm>
#include <bit>

#include "dkern/errors.hpp"
#include "kernel_search.hpp"

namespace dkern {

KernelCheck check_kernel(const Digraph& d, VertexSet s) {
  if (!d.mask_addressable()) throw CapExceeded("check_kernel", static_cast<std::size_t>(d.order()), kMaskCap);
  if (!s.subset_of(d.vertices())) throw InvalidArgument("check_kernel: vertex set out of range");
  KernelCheck r;
  for (int u : s.members()) {
    const std::uint64_t clash = d.adj_mask(u) & s.bits() & ~((std::uint64_t{2} << u) - 1);
    if (clash) {
      r.kind = KernelCheck::Kind::NotIndependent;
      r.u = u;
      r.v = std::countr_zero(clash);
      return r;
    }
  }
  for (int u = 0; u < d.order(); ++u) {
    if (s.contains(u)) continue;
    if ((d.out_mask(u) & s.bits()) == 0) {
      r.kind = KernelCheck::Kind::NotAbsorbent;
      r.u = u;
      return r;
    }
  }
  return r;
}

std::optional<VertexSet> find_kernel_within(const Digraph& d, VertexSet w) {
  if (!d.mask_addressable()) throw CapExceeded("find_kernel", static_cast<std::size_t>(d.order()), kMaskCap);
  if (!w.subset_of(d.vertices())) throw InvalidArgument("find_kernel: vertex set out of range");
  detail::KernelSearch search(d, w.bits());
  std::optional<VertexSet> found;
  search.run([&](std::uint64_t k) {
    found = VertexSet(k);
    return true;
  });
  return found;
}

namespace {

void check_search_cap(const Digraph& d, int cap, const char* what) {
  if (d.order() > std::min(cap, kMaskCap))
    throw CapExceeded(what, static_cast<std::size_t>(d.order()), static_cast<std::size_t>(std::min(cap, kMaskCap)));
}

void check_status_cap(const Digraph& d, int cap) {
  const int limit = std::min(cap, kMaxStatusCap);
  if (d.order() > limit) throw CapExceeded("kernel_status", static_cast<std::size_t>(d.order()), static_cast<std::size_t>(limit));
}

}  // namespace

std::optional<VertexSet> find_kernel(const Digraph& d, int cap) {
  check_search_cap(d, cap, "find_kernel");
  return find_kernel_within(d, d.vertices());
}

std::vector<VertexSet> all_kernels(const Digraph& d, int cap) {
  check_search_cap(d, cap, "all_kernels");
  detail::KernelSearch search(d, d.vertices().bits());
  std::vector<VertexSet> out;
  search.run([&](std::uint64_t k) {
    out.emplace_back(k);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::string_view verdict_name(KernelStatus::Verdict v) {
  switch (v) {
    case KernelStatus::Verdict::KernelPerfect: return "kernel-perfect";
    case KernelStatus::Verdict::CriticalKernelImperfect: return "critical-kernel-imperfect";
    case KernelStatus::Verdict::NeitherWithKernel: return "neither-with-kernel";
    case KernelStatus::Verdict::NeitherWithoutKernel: return "neither-without-kernel";
  }
  return "unknown";
}

KernelTable kernel_table_serial(const Digraph& d) {
  const std::uint64_t count = std::uint64_t{1} << d.order();
  KernelTable table(count);
  for (std::uint64_t w = 0; w < count; ++w)
    table[w] = detail::KernelSearch(d, w).exists() ? 1 : 0;
  return table;
}

KernelStatus status_from_table(int n, std::span<const std::uint8_t> table) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::optional<std::uint64_t> best;
  for (std::uint64_t w = 0; w < full; ++w) {
    if (table[w]) continue;
    if (!best || std::popcount(w) < std::popcount(*best)) best = w;
  }
  KernelStatus s;
  const bool whole = table[full] != 0;
  using V = KernelStatus::Verdict;
  if (!best) {
    s.verdict = whole ? V::KernelPerfect : V::CriticalKernelImperfect;
  } else {
    s.verdict = whole ? V::NeitherWithKernel : V::NeitherWithoutKernel;
    s.witness = VertexSet(*best);
  }
  return s;
}

KernelOracle::KernelOracle(const Digraph& d, int cap) : d_(d) {
  check_status_cap(d, cap);
  memo_.assign(std::size_t{1} << d.order(), -1);
}

bool KernelOracle::has_kernel(VertexSet w) {
  if (!w.subset_of(d_.vertices())) throw InvalidArgument("has_kernel: vertex set out of range");
  auto& slot = memo_[w.bits()];
  if (slot < 0) slot = detail::KernelSearch(d_, w.bits()).exists() ? 1 : 0;
  return slot == 1;
}

KernelStatus KernelOracle::status() {
  const KernelTable table = kernel_table_parallel(d_);
  for (std::size_t w = 0; w < table.size(); ++w) memo_[w] = static_cast<std::int8_t>(table[w]);
  return status_from_table(d_.order(), table);
}

KernelStatus kernel_status(const Digraph& d, int cap) {
  check_status_cap(d, cap);
  return status_from_table(d.order(), kernel_table_parallel(d));
}

KernelStatus kernel_status_serial(const Digraph& d, int cap) {
  check_status_cap(d, cap);
  return status_from_table(d.order(), kernel_table_serial(d));
}

}  // namespace dkern
