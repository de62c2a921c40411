#include "mgd/orientation.hpp"

#include <numeric>
#include <utility>

namespace mgd {

namespace {

// Union-find whose elements carry a parity bit relative to their root.
class ParityUnionFind {
 public:
  explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Demands parity(a) xor parity(b) == p; false on contradiction.
  bool relate(int a, int b, std::uint8_t p) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return static_cast<std::uint8_t>(pa ^ pb) == p;
    parent_[ra] = rb;
    parity_[ra] = pa ^ pb ^ p;
    return true;
  }

  // Returns (root, parity of x relative to root).
  std::pair<int, std::uint8_t> find(int x) {
    std::uint8_t p = 0;
    int r = x;
    while (parent_[r] != r) {
      p ^= parity_[r];
      r = parent_[r];
    }
    return {r, p};
  }

 private:
  std::vector<int> parent_;
  std::vector<std::uint8_t> parity_;
};

}  // namespace

OrientationResult orientability(const Diagram& d) {
  const int n = d.dart_count();
  ParityUnionFind uf(n);
  bool ok = true;
  for (DartId x = 0; x < n && ok; ++x) {
    if (x < d.alpha(x)) ok = uf.relate(x, d.alpha(x), 1);
  }
  for (int v = 0; v < d.vertex_count() && ok; ++v) {
    const DartId s0 = Diagram::dart(v, 0);
    if (d.kind(v) == VertexKind::kCrossing) {
      ok = ok && uf.relate(s0, s0 + 2, 1) && uf.relate(s0 + 1, s0 + 3, 1);
    } else {
      ok = ok && uf.relate(s0, s0 + 2, 0) && uf.relate(s0 + 1, s0 + 3, 0) &&
           uf.relate(s0, s0 + 1, 1);
    }
  }
  if (!ok) return {false, std::nullopt};

  // Witness: the smallest dart of each class points into its vertex.
  std::vector<std::uint8_t> in(n, 0);
  std::vector<int> anchor(n, -1);  // root -> smallest dart seen
  for (DartId x = 0; x < n; ++x) {
    const int r = uf.find(x).first;
    if (anchor[r] == -1) anchor[r] = x;
  }
  for (DartId x = 0; x < n; ++x) {
    auto [r, p] = uf.find(x);
    const std::uint8_t p0 = uf.find(anchor[r]).second;
    in[x] = static_cast<std::uint8_t>(1 ^ p0 ^ p);
  }
  return {true, std::move(in)};
}

}  // namespace mgd
