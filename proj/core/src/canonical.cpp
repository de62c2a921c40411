#include "mgd/canonical.hpp"

#include <algorithm>
#include <deque>

namespace mgd {

namespace {

void append_u16(std::string& s, int v) {
  s.push_back(static_cast<char>((v >> 8) & 0xff));
  s.push_back(static_cast<char>(v & 0xff));
}

// Kind-and-slot-parity byte. Slot numbering of a vertex is a gauge choice up
// to rotation by two, so only the parity is encoded.
char dart_byte(const Diagram& d, DartId x) {
  const int parity = Diagram::slot_of(x) & 1;
  return static_cast<char>(
      (d.kind(Diagram::vertex_of(x)) == VertexKind::kCrossing ? 0 : 2) + parity);
}

// Breadth-first relabeling from `root`: each popped dart enqueues sigma then
// alpha, and its 5-byte entry (kind byte, sigma id, alpha id) is appended in
// pop order. Codes from different roots are compared lazily: generation stops
// as soon as the prefix exceeds `best` (returns false). Returns true when the
// full code is <= best (or best is empty), with outputs filled.
bool bfs_encode(const Diagram& d, DartId root, const std::string& best,
                std::string& code, std::vector<DartId>& order,
                std::vector<int>& new_id) {
  code.clear();
  order.clear();
  order.push_back(root);
  new_id[root] = 0;
  bool still_equal = !best.empty();
  std::size_t head = 0;  // order doubles as the BFS queue
  while (head < order.size()) {
    const DartId x = order[head++];
    for (const DartId y : {Diagram::sigma(x), d.alpha(x)}) {
      if (new_id[y] == -1) {
        new_id[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
    code.push_back(dart_byte(d, x));
    append_u16(code, new_id[Diagram::sigma(x)]);
    append_u16(code, new_id[d.alpha(x)]);
    if (still_equal) {
      const int cmp = best.compare(code.size() - 5, 5, code, code.size() - 5, 5);
      if (cmp < 0) {  // best stays smaller: this root cannot win
        for (const DartId z : order) new_id[z] = -1;
        return false;
      }
      if (cmp > 0) still_equal = false;
    }
  }
  for (const DartId z : order) new_id[z] = -1;
  return true;
}

struct ComponentCanon {
  std::string code;           // minimal over all roots
  std::string orient_bits;    // tiebreak: witness orientation along the code
  DartId min_dart = -1;       // smallest original dart of the component
  std::vector<DartId> order;  // winning traversal, darts in id order
};

std::string orient_code(const Diagram& d, const std::vector<DartId>& order) {
  std::string s;
  if (!d.orientation()) return s;
  s.reserve(order.size());
  for (const DartId x : order) {
    s.push_back(static_cast<char>('0' + ((*d.orientation())[x] != 0)));
  }
  return s;
}

// Darts grouped into connected components (by sigma and alpha), each listed
// in increasing order; discovery follows the smallest dart.
std::vector<std::vector<DartId>> dart_components(const Diagram& d) {
  std::vector<std::vector<DartId>> comps;
  std::vector<char> seen(d.dart_count(), 0);
  for (DartId start = 0; start < d.dart_count(); ++start) {
    if (seen[start]) continue;
    std::vector<DartId> comp;
    std::vector<DartId> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      const DartId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (const DartId y : {Diagram::sigma(x), d.alpha(x)}) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<ComponentCanon> canon_components_uncached(const Diagram& d) {
  std::vector<ComponentCanon> out;
  std::vector<int> new_id(d.dart_count(), -1);
  std::string code;
  std::vector<DartId> order;
  for (const auto& comp : dart_components(d)) {
    ComponentCanon cc;
    cc.min_dart = comp.front();
    // Only roots whose leading byte is minimal can produce the smallest code;
    // every other root loses on the first byte already.
    char min_byte = dart_byte(d, comp.front());
    for (const DartId root : comp) min_byte = std::min(min_byte, dart_byte(d, root));
    for (const DartId root : comp) {
      if (dart_byte(d, root) != min_byte) continue;
      if (!bfs_encode(d, root, cc.code, code, order, new_id)) continue;
      bool take = cc.order.empty() || code < cc.code;
      if (!take && code == cc.code) {
        // Equal primary codes: prefer the smaller orientation pattern so a
        // directed diagram re-canonicalizes to itself.
        const std::string ob = orient_code(d, order);
        take = ob < cc.orient_bits;
      }
      if (take) {
        cc.code = code;
        cc.order = order;
        cc.orient_bits = orient_code(d, order);
      }
    }
    out.push_back(std::move(cc));
  }
  // Component order: by code, then orientation pattern, ties by smallest dart.
  std::sort(out.begin(), out.end(), [](const ComponentCanon& a, const ComponentCanon& b) {
    if (a.code != b.code) return a.code < b.code;
    if (a.orient_bits != b.orient_bits) return a.orient_bits < b.orient_bits;
    return a.min_dart < b.min_dart;
  });
  return out;
}

// Canonicalization is the inner loop of site enumeration and the certifier's
// breadth-first search, both of which revisit the same few diagrams many
// times in a row. A small most-recently-used ring absorbs those repeats; the
// result is returned by value so ring eviction can never dangle a caller.
std::vector<ComponentCanon> canon_components(const Diagram& d) {
  struct Entry {
    Diagram key;
    std::vector<ComponentCanon> canon;
  };
  thread_local std::vector<Entry> ring;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (ring[i].key == d) {
      if (i != 0) std::rotate(ring.begin(), ring.begin() + i, ring.begin() + i + 1);
      return ring.front().canon;
    }
  }
  ring.insert(ring.begin(), Entry{d, canon_components_uncached(d)});
  if (ring.size() > 4) ring.pop_back();
  return ring.front().canon;
}

}  // namespace

CanonicalCode canonical_code(const Diagram& d) {
  CanonicalCode out;
  for (const auto& cc : canon_components(d)) {
    append_u16(out.bytes, static_cast<int>(cc.order.size()));
    out.bytes += cc.code;
  }
  append_u16(out.bytes, static_cast<int>(d.loops().size()));
  return out;
}

std::vector<int> canonical_rank(const Diagram& d) {
  std::vector<int> rank(d.dart_count(), -1);
  int offset = 0;
  for (const auto& cc : canon_components(d)) {
    for (std::size_t i = 0; i < cc.order.size(); ++i) {
      rank[cc.order[i]] = offset + static_cast<int>(i);
    }
    offset += static_cast<int>(cc.order.size());
  }
  return rank;
}

Diagram canonical_form(const Diagram& d) {
  const std::vector<int> rank = canonical_rank(d);

  // Vertices ordered by their best rank; slot 0 moves to the even slot of
  // smaller rank (rotation by two keeps the vertex meaning intact).
  std::vector<int> order(d.vertex_count());
  std::vector<int> best(d.vertex_count());
  std::vector<int> base_slot(d.vertex_count());
  for (int v = 0; v < d.vertex_count(); ++v) {
    order[v] = v;
    const int r0 = rank[Diagram::dart(v, 0)];
    const int r2 = rank[Diagram::dart(v, 2)];
    base_slot[v] = r0 <= r2 ? 0 : 2;
    best[v] = std::min({rank[Diagram::dart(v, 0)], rank[Diagram::dart(v, 1)],
                        rank[Diagram::dart(v, 2)], rank[Diagram::dart(v, 3)]});
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return best[a] < best[b]; });

  std::vector<DartId> new_pos(d.dart_count());
  std::vector<VertexKind> kinds(d.vertex_count());
  for (int i = 0; i < d.vertex_count(); ++i) {
    const int v = order[i];
    kinds[i] = d.kind(v);
    for (int s = 0; s < 4; ++s) {
      new_pos[Diagram::dart(v, (base_slot[v] + s) & 3)] = Diagram::dart(i, s);
    }
  }

  std::vector<DartId> alpha(d.dart_count(), -1);
  for (DartId x = 0; x < d.dart_count(); ++x) alpha[new_pos[x]] = new_pos[d.alpha(x)];

  std::vector<FreeLoop> loops = d.loops();
  std::sort(loops.begin(), loops.end(),
            [](const FreeLoop& a, const FreeLoop& b) { return a.face_tag < b.face_tag; });

  Diagram out(std::move(kinds), std::move(alpha), std::move(loops));
  if (d.orientation()) {
    std::vector<std::uint8_t> in(d.dart_count(), 0);
    for (DartId x = 0; x < d.dart_count(); ++x) in[new_pos[x]] = (*d.orientation())[x];
    out.set_orientation(std::move(in));
  }
  return out;
}

}  // namespace mgd
