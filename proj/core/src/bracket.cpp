#include "mgd/bracket.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "mgd/resolve.hpp"

namespace mgd {

namespace {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("MGD_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) hw = std::min(hw, cap);
  } else {
    hw = 1;  // single-threaded unless asked
  }
  return hw;
}

// Circles left after smoothing every crossing of `d` according to `state`
// (bit v set = B-smoothing at crossing v), plus the diagram's free loops.
int state_loops(const Diagram& d, std::uint32_t state) {
  const int n = d.dart_count();
  // Tiny union-find on the stack-ish; n is at most 4 * kMaxBracketCrossings.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  const auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (DartId x = 0; x < n; ++x) unite(x, d.alpha(x));
  for (int v = 0; v < d.vertex_count(); ++v) {
    const DartId s0 = Diagram::dart(v, 0);
    if (state >> v & 1) {
      unite(s0 + 1, s0 + 2);  // B joins (1,2) and (3,0)
      unite(s0 + 3, s0);
    } else {
      unite(s0, s0 + 1);  // A joins (0,1) and (2,3)
      unite(s0 + 2, s0 + 3);
    }
  }
  int circles = static_cast<int>(d.loops().size());
  for (int x = 0; x < n; ++x) {
    if (find(x) == x) ++circles;
  }
  return circles;
}

LaurentPolynomial sum_range(const Diagram& d, std::uint32_t lo, std::uint32_t hi) {
  const int n = d.vertex_count();
  LaurentPolynomial acc;
  const LaurentPolynomial delta = bracket_delta();
  for (std::uint32_t state = lo; state < hi; ++state) {
    const int b = static_cast<int>(std::popcount(state));
    const int a = n - b;
    acc += LaurentPolynomial::term(1, a - b) * delta.pow(state_loops(d, state) - 1);
  }
  return acc;
}

}  // namespace

LaurentPolynomial kauffman_bracket(const Diagram& d) {
  if (d.marked_count() != 0) {
    throw MgdError("kauffman_bracket: diagram still has marked vertices");
  }
  const int n = d.vertex_count();
  if (n > kMaxBracketCrossings) {
    throw CrossingBudgetError("kauffman_bracket: " + std::to_string(n) +
                              " crossings exceed the cap of " +
                              std::to_string(kMaxBracketCrossings));
  }
  if (n == 0 && d.loops().empty()) return LaurentPolynomial::one();

  const std::uint32_t states = 1u << n;
  const int workers = std::min<int>(worker_count(), 8);
  if (workers == 1 || states < 1024) return sum_range(d, 0, states);

  // Deterministic chunked reduction: fixed chunk boundaries, summed in order.
  const std::uint32_t chunk = (states + workers - 1) / workers;
  std::vector<LaurentPolynomial> partial(workers);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::uint32_t lo = std::min<std::uint32_t>(w * chunk, states);
    const std::uint32_t hi = std::min<std::uint32_t>(lo + chunk, states);
    pool.emplace_back([&, w, lo, hi] { partial[w] = sum_range(d, lo, hi); });
  }
  for (auto& t : pool) t.join();
  LaurentPolynomial acc;
  for (const auto& p : partial) acc += p;
  return acc;
}

namespace {

LaurentPolynomial writhe_factor(int writhe) {
  // (-A^3)^(-w)
  return LaurentPolynomial::term((writhe & 1) ? -1 : 1, -3 * writhe);
}

}  // namespace

LaurentPolynomial jones_from_bracket(const Diagram& d,
                                     const std::vector<std::uint8_t>& dart_in) {
  int writhe = 0;
  for (int v = 0; v < d.vertex_count(); ++v) writhe += crossing_sign(d, v, dart_in);
  return writhe_factor(writhe) * kauffman_bracket(d);
}

LaurentPolynomial jones(const Diagram& d) {
  if (d.vertex_count() == 0) return kauffman_bracket(d);
  return jones_from_bracket(d, canonical_link_orientation(d));
}

std::set<LaurentPolynomial> jones_set(const Diagram& d) {
  std::set<LaurentPolynomial> out;
  if (d.vertex_count() == 0) {
    out.insert(kauffman_bracket(d));
    return out;
  }
  const Components comp = link_components(d);
  const std::vector<std::uint8_t> in = canonical_link_orientation(d);

  // Per crossing: its sign under the base orientation and the two strand
  // components. Reversing a set S of components flips exactly the crossings
  // with one strand inside S.
  struct CrossingInfo {
    int sign, cu, co;
  };
  std::vector<CrossingInfo> info;
  std::vector<int> involved;  // components that appear at crossings
  for (int v = 0; v < d.vertex_count(); ++v) {
    CrossingInfo ci{crossing_sign(d, v, in), comp.of_dart[Diagram::dart(v, 0)],
                    comp.of_dart[Diagram::dart(v, 1)]};
    involved.push_back(ci.cu);
    involved.push_back(ci.co);
    info.push_back(ci);
  }
  std::sort(involved.begin(), involved.end());
  involved.erase(std::unique(involved.begin(), involved.end()), involved.end());
  if (involved.size() > 22) {
    throw CrossingBudgetError("jones_set: too many linked components");
  }
  std::vector<int> slot_of_comp(comp.count, -1);
  for (std::size_t i = 0; i < involved.size(); ++i) slot_of_comp[involved[i]] = static_cast<int>(i);

  const LaurentPolynomial bracket = kauffman_bracket(d);
  const std::uint32_t masks = involved.empty() ? 1 : 1u << involved.size();
  std::set<int> writhes;
  for (std::uint32_t mask = 0; mask < masks; ++mask) {
    int w = 0;
    for (const CrossingInfo& ci : info) {
      const bool fu = mask >> slot_of_comp[ci.cu] & 1;
      const bool fo = mask >> slot_of_comp[ci.co] & 1;
      w += (fu != fo) ? -ci.sign : ci.sign;
    }
    writhes.insert(w);
  }
  for (const int w : writhes) out.insert(writhe_factor(w) * bracket);
  return out;
}

}  // namespace mgd
