#include <algorithm>
#include <tuple>

#include "dkern/digraph.hpp"
#include "dkern/errors.hpp"

namespace dkern {
namespace {

// (out-degree, in-degree, symmetric degree) is invariant under isomorphism.
using Signature = std::tuple<int, int, int>;

std::vector<Signature> signatures(const Digraph& d) {
  std::vector<Signature> sig;
  sig.reserve(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) {
    int sym = 0;
    for (int u = 0; u < d.order(); ++u) sym += (u != v && d.symmetric(u, v));
    sig.emplace_back(d.out_degree(v), d.in_degree(v), sym);
  }
  return sig;
}

class Matcher {
 public:
  Matcher(const Digraph& a, const Digraph& b)
      : a_(a), b_(b), sa_(signatures(a)), sb_(signatures(b)),
        map_(static_cast<std::size_t>(a.order()), -1),
        used_(static_cast<std::size_t>(a.order()), 0) {}

  bool run(int u = 0) {
    const int n = a_.order();
    if (u == n) return true;
    for (int x = 0; x < n; ++x) {
      if (used_[static_cast<std::size_t>(x)] || sa_[static_cast<std::size_t>(u)] != sb_[static_cast<std::size_t>(x)]) continue;
      if (!consistent(u, x)) continue;
      map_[static_cast<std::size_t>(u)] = x;
      used_[static_cast<std::size_t>(x)] = 1;
      if (run(u + 1)) return true;
      used_[static_cast<std::size_t>(x)] = 0;
    }
    map_[static_cast<std::size_t>(u)] = -1;
    return false;
  }

  std::vector<int> mapping() && { return std::move(map_); }

 private:
  bool consistent(int u, int x) const {
    for (int w = 0; w < u; ++w) {
      const int y = map_[static_cast<std::size_t>(w)];
      if (a_.arc(u, w) != b_.arc(x, y) || a_.arc(w, u) != b_.arc(y, x)) return false;
    }
    return true;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::vector<Signature> sa_, sb_;
  std::vector<int> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const Digraph& a, const Digraph& b, int cap) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > cap) throw CapExceeded("is_isomorphic", static_cast<std::size_t>(a.order()), static_cast<std::size_t>(cap));
  if (a.arc_count() != b.arc_count()) return std::nullopt;
  auto sa = signatures(a), sb = signatures(b);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  Matcher m(a, b);
  if (!m.run()) return std::nullopt;
  return std::move(m).mapping();
}

}  // namespace dkern
