#include <algorithm>

#include "dkern/digraph.hpp"
#include "dkern/errors.hpp"

namespace dkern {

CirculantSpec::CirculantSpec(int m, std::vector<int> residues) : m_(m), residues_(std::move(residues)) {
  if (m < 2) throw InvalidArgument("circulant: order must be at least 2");
  if (m > kLargeCap) throw CapExceeded("circulant", static_cast<std::size_t>(m), kLargeCap);
  if (residues_.empty()) throw InvalidArgument("circulant: empty connection set");
  for (int j : residues_)
    if (j <= 0 || j >= m)
      throw InvalidArgument("circulant: residue " + std::to_string(j) + " not in 1.." +
                            std::to_string(m - 1));
  std::sort(residues_.begin(), residues_.end());
  residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
}

CirculantSpec CirculantSpec::from_offsets(int m, std::span<const int> offsets) {
  if (m < 2) throw InvalidArgument("circulant: order must be at least 2");
  std::vector<int> residues;
  residues.reserve(offsets.size());
  for (int j : offsets) {
    if (j <= -m || j >= m)
      throw InvalidArgument("circulant: offset " + std::to_string(j) + " out of range for order " +
                            std::to_string(m));
    const int r = ((j % m) + m) % m;
    if (r == 0) throw InvalidArgument("circulant: offset " + std::to_string(j) + " is 0 mod m");
    residues.push_back(r);
  }
  return CirculantSpec(m, std::move(residues));
}

CirculantSpec CirculantSpec::negated() const {
  std::vector<int> neg;
  neg.reserve(residues_.size());
  for (int j : residues_) neg.push_back(m_ - j);
  return CirculantSpec(m_, std::move(neg));
}

Digraph construct_circulant(const CirculantSpec& spec) {
  const int m = spec.order();
  DigraphBuilder b(m, kLargeCap);
  for (int i = 0; i < m; ++i)
    for (int j : spec.residues()) b.add_arc(i, (i + j) % m);
  return std::move(b).build();
}

Digraph directed_cycle(int n) {
  return construct_circulant(CirculantSpec(n, {1}));
}

Digraph full_circulant(int n) {
  if (n < 4) throw InvalidArgument("full circulant requires n >= 4");
  // 1, ±2, ..., ±floor(n/2) covers every residue except -1.
  std::vector<int> offsets{1};
  for (int k = 2; k <= n / 2; ++k) {
    offsets.push_back(k);
    offsets.push_back(-k);
  }
  return construct_circulant(CirculantSpec::from_offsets(n, offsets));
}

Digraph c7_12() { return construct_circulant(CirculantSpec(7, {1, 2})); }

Digraph lemma_circulant(int n) {
  if (n < 2) throw InvalidArgument("lemma circulant requires n >= 2");
  std::vector<int> offsets;
  for (int k = 2; k <= n; ++k) offsets.push_back(k % 2 == 0 ? k : -k);
  return construct_circulant(CirculantSpec::from_offsets(2 * n + 1, offsets));
}

Digraph transitive_tournament(int n) {
  DigraphBuilder b(n, kLargeCap);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_arc(u, v);
  return std::move(b).build();
}

}  // namespace dkern
