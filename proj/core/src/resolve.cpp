#include "mgd/resolve.hpp"

#include <algorithm>
#include <numeric>

#include "mgd/orientation.hpp"

namespace mgd {

namespace {

// The dart a marked-vertex dart is joined to through the marker.
DartId marker_join(DartId x, Side side) {
  const int s = Diagram::slot_of(x);
  // Minus pairs slots (0,1) and (2,3); plus pairs (1,2) and (3,0).
  int t = 0;
  if (side == Side::kMinus) {
    t = s ^ 1;
  } else {
    t = (s & 1) ? (s + 1) & 3 : (s + 3) & 3;
  }
  return (x & ~3) | t;
}

struct PlainUnionFind {
  std::vector<int> parent;
  explicit PlainUnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

void require_link(const Diagram& d, const char* who) {
  if (d.marked_count() != 0) {
    throw MgdError(std::string(who) + ": diagram still has marked vertices");
  }
}

}  // namespace

Resolution resolve(const Diagram& d, Side side) {
  Resolution r;
  r.carrier_is_loop.assign(d.dart_count(), 0);
  r.carrier.assign(d.dart_count(), -1);
  r.crossing_vertex.assign(d.vertex_count(), -1);

  std::vector<VertexKind> kinds;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.kind(v) == VertexKind::kCrossing) {
      r.crossing_vertex[v] = static_cast<int>(kinds.size());
      kinds.push_back(VertexKind::kCrossing);
    }
  }

  const auto new_dart = [&](DartId x) {
    return Diagram::dart(r.crossing_vertex[Diagram::vertex_of(x)], Diagram::slot_of(x));
  };
  const auto is_marked = [&](DartId x) {
    return d.kind(Diagram::vertex_of(x)) == VertexKind::kMarked;
  };

  std::vector<DartId> alpha(kinds.size() * 4, -1);
  // Original free loops keep their indices; closed marker chains follow.
  std::vector<FreeLoop> loops = d.loops();
  std::vector<char> done(d.dart_count(), 0);

  // Chains that start at a crossing dart end at another crossing dart.
  for (DartId p = 0; p < d.dart_count(); ++p) {
    if (done[p] || is_marked(p)) continue;
    done[p] = 1;
    r.carrier[p] = new_dart(p);
    DartId q = d.alpha(p);
    while (is_marked(q)) {
      done[q] = 1;
      r.carrier[q] = new_dart(p);
      q = marker_join(q, side);
      done[q] = 1;
      r.carrier[q] = new_dart(p);
      q = d.alpha(q);
    }
    done[q] = 1;
    r.carrier[q] = new_dart(q);
    alpha[new_dart(p)] = new_dart(q);
    alpha[new_dart(q)] = new_dart(p);
  }

  // Leftover cycles run purely through markers: each becomes a free loop.
  for (DartId p = 0; p < d.dart_count(); ++p) {
    if (done[p]) continue;
    const int loop_index = static_cast<int>(loops.size());
    DartId q = p;
    while (!done[q]) {
      done[q] = 1;
      r.carrier_is_loop[q] = 1;
      r.carrier[q] = loop_index;
      DartId j = marker_join(q, side);
      done[j] = 1;
      r.carrier_is_loop[j] = 1;
      r.carrier[j] = loop_index;
      q = d.alpha(j);
    }
    loops.push_back(FreeLoop{0});
  }

  r.diagram = Diagram(std::move(kinds), std::move(alpha), std::move(loops));
  return r;
}

Components link_components(const Diagram& d) {
  require_link(d, "link_components");
  Components c;
  PlainUnionFind uf(d.dart_count());
  for (DartId x = 0; x < d.dart_count(); ++x) uf.unite(x, d.alpha(x));
  for (int v = 0; v < d.vertex_count(); ++v) {
    uf.unite(Diagram::dart(v, 0), Diagram::dart(v, 2));
    uf.unite(Diagram::dart(v, 1), Diagram::dart(v, 3));
  }
  c.of_dart.assign(d.dart_count(), -1);
  for (DartId x = 0; x < d.dart_count(); ++x) {
    const int root = uf.find(x);
    if (c.of_dart[root] == -1) c.of_dart[root] = c.count++;
    c.of_dart[x] = c.of_dart[root];
  }
  c.of_loop.resize(d.loops().size());
  for (std::size_t i = 0; i < d.loops().size(); ++i) {
    c.of_loop[i] = c.count++;
  }
  return c;
}

SplitParts split_parts(const Diagram& d) {
  SplitParts sp;
  PlainUnionFind uf(std::max(1, d.vertex_count()));
  for (DartId x = 0; x < d.dart_count(); ++x) {
    uf.unite(Diagram::vertex_of(x), Diagram::vertex_of(d.alpha(x)));
  }
  sp.of_vertex.assign(d.vertex_count(), -1);
  for (int v = 0; v < d.vertex_count(); ++v) {
    const int root = uf.find(v);
    if (sp.of_vertex[root] == -1) sp.of_vertex[root] = sp.count++;
    sp.of_vertex[v] = sp.of_vertex[root];
  }
  sp.of_loop.resize(d.loops().size());
  for (std::size_t i = 0; i < d.loops().size(); ++i) {
    sp.of_loop[i] = sp.count++;
  }
  return sp;
}

Diagram extract_split_part(const Diagram& d, int part) {
  const SplitParts sp = split_parts(d);
  std::vector<VertexKind> kinds;
  std::vector<int> new_index(d.vertex_count(), -1);
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (sp.of_vertex[v] == part) {
      new_index[v] = static_cast<int>(kinds.size());
      kinds.push_back(d.kind(v));
    }
  }
  std::vector<DartId> alpha(kinds.size() * 4, -1);
  for (DartId x = 0; x < d.dart_count(); ++x) {
    const int v = Diagram::vertex_of(x);
    if (new_index[v] == -1) continue;
    const DartId y = d.alpha(x);
    alpha[Diagram::dart(new_index[v], Diagram::slot_of(x))] =
        Diagram::dart(new_index[Diagram::vertex_of(y)], Diagram::slot_of(y));
  }
  std::vector<FreeLoop> loops;
  for (std::size_t i = 0; i < d.loops().size(); ++i) {
    if (sp.of_loop[i] == part) loops.push_back(d.loops()[i]);
  }
  if (kinds.empty() && loops.empty()) {
    throw MgdError("extract_split_part: no such part " + std::to_string(part));
  }
  return Diagram(std::move(kinds), std::move(alpha), std::move(loops));
}

std::vector<std::uint8_t> canonical_link_orientation(const Diagram& d) {
  require_link(d, "canonical_link_orientation");
  OrientationResult o = orientability(d);
  if (!o.orientable) throw InternalError("link diagram failed to orient");
  return std::move(*o.dart_in);
}

int crossing_sign(const Diagram& d, int vertex,
                  const std::vector<std::uint8_t>& dart_in) {
  if (d.kind(vertex) != VertexKind::kCrossing) {
    throw MgdError("crossing_sign: vertex is not a crossing");
  }
  const int under_in = dart_in[Diagram::dart(vertex, 0)] ? 0 : 2;
  const int over_in = dart_in[Diagram::dart(vertex, 1)] ? 1 : 3;
  // Positive when the over-strand enters one slot clockwise of the
  // under-strand entry.
  return over_in == ((under_in + 3) & 3) ? 1 : -1;
}

LinkInvariants link_invariants(const Diagram& d) {
  require_link(d, "link_invariants");
  LinkInvariants inv;
  const Components comp = link_components(d);
  inv.components = comp.count;
  inv.split_parts = split_parts(d).count;
  inv.linking_abs.assign(comp.count, std::vector<int>(comp.count, 0));
  inv.linking_signed = inv.linking_abs;
  if (d.vertex_count() == 0) return inv;

  const std::vector<std::uint8_t> in = canonical_link_orientation(d);
  std::vector<std::vector<int>> twice(comp.count, std::vector<int>(comp.count, 0));
  for (int v = 0; v < d.vertex_count(); ++v) {
    const int sign = crossing_sign(d, v, in);
    inv.writhe += sign;
    const int cu = comp.of_dart[Diagram::dart(v, 0)];
    const int co = comp.of_dart[Diagram::dart(v, 1)];
    if (cu != co) {
      twice[cu][co] += sign;
      twice[co][cu] += sign;
    }
  }
  for (int i = 0; i < comp.count; ++i) {
    for (int j = 0; j < comp.count; ++j) {
      inv.linking_signed[i][j] = twice[i][j] / 2;
      inv.linking_abs[i][j] = std::abs(inv.linking_signed[i][j]);
    }
  }
  return inv;
}

}  // namespace mgd
