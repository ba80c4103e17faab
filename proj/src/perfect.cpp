#include "dkern/perfect.hpp"

#include <algorithm>
#include <bit>

#include "dkern/errors.hpp"

namespace dkern {
namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class HoleSearch {
 public:
  HoleSearch(const Graph& g, int min_length) : g_(g), min_length_(min_length) {}

  std::optional<std::vector<int>> run() {
    for (int s = 0; s < g_.order(); ++s) {
      start_ = s;
      path_.assign(1, s);
      if (extend(bit(s))) return path_;
    }
    return std::nullopt;
  }

 private:
  // Grows an induced path whose vertices all exceed start_; a cycle closes
  // when the new vertex is adjacent to the start.
  bool extend(std::uint64_t on_path) {
    const int last = path_.back();
    const std::size_t k = path_.size();
    const std::uint64_t interior = on_path & ~bit(start_) & ~bit(last);
    for (std::uint64_t c = g_.adj_mask(last) & ~on_path; c; c &= c - 1) {
      const int w = std::countr_zero(c);
      if (w <= start_) continue;
      if (g_.adj_mask(w) & interior) continue;
      if (k >= 2 && g_.edge(w, start_)) {
        const auto len = static_cast<int>(k + 1);
        if (len >= min_length_ && len % 2 == 1) {
          path_.push_back(w);
          return true;
        }
        continue;
      }
      path_.push_back(w);
      if (extend(on_path | bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int min_length_;
  int start_ = 0;
  std::vector<int> path_;
};

}  // namespace

std::string_view perfectness_name(PerfectnessVerdict::Kind k) {
  switch (k) {
    case PerfectnessVerdict::Kind::Perfect: return "perfect";
    case PerfectnessVerdict::Kind::OddHole: return "odd-hole";
    case PerfectnessVerdict::Kind::OddAntihole: return "odd-antihole";
  }
  return "unknown";
}

std::optional<std::vector<int>> find_odd_hole(const Graph& g, int min_length) {
  if (g.order() > kMaskCap) throw CapExceeded("find_odd_hole", static_cast<std::size_t>(g.order()), kMaskCap);
  return HoleSearch(g, min_length).run();
}

PerfectnessVerdict is_perfect(const Graph& g, int cap) {
  const int limit = std::min(cap, kMaskCap);
  if (g.order() > limit) throw CapExceeded("is_perfect", static_cast<std::size_t>(g.order()), static_cast<std::size_t>(limit));
  PerfectnessVerdict v;
  if (auto hole = find_odd_hole(g, 5)) {
    v.kind = PerfectnessVerdict::Kind::OddHole;
    v.cycle = std::move(*hole);
  } else if (auto anti = find_odd_hole(complement(g), 7)) {
    v.kind = PerfectnessVerdict::Kind::OddAntihole;
    v.cycle = std::move(*anti);
  } else {
    return v;
  }
  v.witness = VertexSet::from(v.cycle);
  return v;
}

namespace {

class CliqueScan {
 public:
  explicit CliqueScan(const Digraph& d) : d_(d) {}

  std::optional<VertexSet> run() {
    for (int v = 0; v < d_.order(); ++v) extend(bit(v), bit(v), v, 1);
    return best_;
  }

 private:
  // `absorbers`: vertices of the clique that every other member points to.
  void extend(std::uint64_t clique, std::uint64_t absorbers, int last, int size) {
    if (best_ && size + 1 >= best_->size()) return;
    std::uint64_t cand = ~std::uint64_t{0};
    for (std::uint64_t b = clique; b; b &= b - 1) cand &= d_.adj_mask(std::countr_zero(b));
    cand &= ~((bit(last) << 1) - 1);
    for (; cand; cand &= cand - 1) {
      const int w = std::countr_zero(cand);
      std::uint64_t next = absorbers & d_.out_mask(w);
      if ((clique & ~d_.in_mask(w)) == 0) next |= bit(w);
      if (next == 0) {
        best_ = VertexSet(clique | bit(w));
        return;  // any later clique of this size comes after it
      }
      extend(clique | bit(w), next, w, size + 1);
      if (best_ && size + 1 >= best_->size()) return;
    }
  }

  const Digraph& d_;
  std::optional<VertexSet> best_;
};

}  // namespace

SinkOrientation is_orientation_by_sinks(const Digraph& d, int cap) {
  const int limit = std::min(cap, kMaskCap);
  if (d.order() > limit)
    throw CapExceeded("is_orientation_by_sinks", static_cast<std::size_t>(d.order()), static_cast<std::size_t>(limit));
  return {CliqueScan(d).run()};
}

}  // namespace dkern
