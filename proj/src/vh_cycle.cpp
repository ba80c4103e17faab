#include "dkern/vh_cycle.hpp"

#include <algorithm>
#include <set>

#include "dkern/errors.hpp"

namespace dkern {
namespace {

// Builds cycles u0 u1 ... u_{L-1} of a fixed odd length L in lexicographic
// order. Diagonal rules are enforced as each vertex is placed, using only
// indices: an arc u_a -> u_k (a < k - 1) needs a and k even; an arc
// u_k -> u_a (a < k) needs a even and nonzero, except the closing arc.
class VHSearch {
 public:
  VHSearch(const Digraph& d, int u0, int length) : d_(d), length_(length) {
    cycle_.reserve(static_cast<std::size_t>(length));
    cycle_.push_back(u0);
  }

  bool run() { return place(1, std::uint64_t{1} << cycle_[0], 0); }
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  bool place(int k, std::uint64_t used, int diagonals) {
    if (k == length_) return diagonals > 0;
    const int prev = cycle_.back();
    for (std::uint64_t c = d_.out_mask(prev) & ~used; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      const bool closing = k == length_ - 1;
      if (closing && !d_.arc(w, cycle_[0])) continue;
      int added = 0;
      bool ok = true;
      for (int a = 0; a < k && ok; ++a) {
        const int ua = cycle_[static_cast<std::size_t>(a)];
        if (a < k - 1 && d_.arc(ua, w)) {
          ok = a % 2 == 0 && k % 2 == 0;
          ++added;
        }
        if (d_.arc(w, ua) && !(closing && a == 0)) {
          ok = ok && a % 2 == 0 && a != 0;
          ++added;
        }
      }
      if (!ok) continue;
      cycle_.push_back(w);
      if (place(k + 1, used | (std::uint64_t{1} << w), diagonals + added)) return true;
      cycle_.pop_back();
    }
    return false;
  }

  const Digraph& d_;
  int length_;
  std::vector<int> cycle_;
};

std::vector<Arc> diagonals_of(const Digraph& d, const std::vector<int>& cyc) {
  const auto len = cyc.size();
  std::set<Arc> cycle_arcs;
  for (std::size_t i = 0; i < len; ++i) cycle_arcs.emplace(cyc[i], cyc[(i + 1) % len]);
  std::vector<Arc> out;
  for (int u : cyc)
    for (int v : cyc)
      if (u != v && d.arc(u, v) && !cycle_arcs.count({u, v})) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<VHCycle> find_vh_cycle(const Digraph& d, int u0, int length_cap) {
  if (u0 < 0 || u0 >= d.order())
    throw InvalidArgument("find_vh_cycle: start vertex " + std::to_string(u0) + " out of range");
  if (!d.mask_addressable()) throw CapExceeded("find_vh_cycle", static_cast<std::size_t>(d.order()), kMaskCap);
  const int cap = length_cap < 0 ? d.order() : std::min(length_cap, d.order());
  for (int len = 5; len <= cap; len += 2) {
    VHSearch search(d, u0, len);
    if (search.run()) return VHCycle{search.cycle(), diagonals_of(d, search.cycle())};
  }
  return std::nullopt;
}

std::optional<std::string> check_vh_cycle(const Digraph& d, const VHCycle& c) {
  const auto& u = c.vertices;
  const auto len = u.size();
  if (len < 5 || len % 2 == 0) return "cycle length " + std::to_string(len) + " is not odd and at least 5";
  std::vector<int> index(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < len; ++i) {
    if (u[i] < 0 || u[i] >= d.order()) return "vertex " + std::to_string(u[i]) + " out of range";
    if (index[static_cast<std::size_t>(u[i])] >= 0) return "vertex " + std::to_string(u[i]) + " repeated";
    index[static_cast<std::size_t>(u[i])] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < len; ++i)
    if (!d.arc(u[i], u[(i + 1) % len]))
      return "missing cycle arc " + std::to_string(u[i]) + "->" + std::to_string(u[(i + 1) % len]);
  if (diagonals_of(d, u) != c.diagonals) return "diagonal list does not match the digraph";
  if (c.diagonals.empty()) return "no diagonal";
  for (auto [x, y] : c.diagonals) {
    const int i = index[static_cast<std::size_t>(x)];
    const int j = index[static_cast<std::size_t>(y)];
    const std::string arc = "u" + std::to_string(i) + "->u" + std::to_string(j);
    if (j == 0) return "diagonal " + arc + " ends at u0";
    if (j % 2 == 1) return "diagonal " + arc + " ends at an odd position";
    if (i % 2 == 1 && i < j) return "diagonal " + arc + " runs from an odd position to a later even one";
  }
  return std::nullopt;
}

}  // namespace dkern
