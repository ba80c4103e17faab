#include <cstdint>

#include "dkern/kernels.hpp"
#include "kernel_search.hpp"

namespace dkern {

// Every subset is independent of the others, so the table is filled with a
// plain parallel loop; entries are written once and the result does not
// depend on the schedule.
KernelTable kernel_table_parallel(const Digraph& d) {
  const std::int64_t count = std::int64_t{1} << d.order();
  KernelTable table(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 256) if (count >= 4096)
  for (std::int64_t w = 0; w < count; ++w)
    table[static_cast<std::size_t>(w)] =
        detail::KernelSearch(d, static_cast<std::uint64_t>(w)).exists() ? 1 : 0;
  return table;
}

}  // namespace dkern
