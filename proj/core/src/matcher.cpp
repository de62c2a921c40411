#include <algorithm>
#include <functional>
#include <map>
#include <optional>

#include "mgd/canonical.hpp"
#include "mgd/moves.hpp"
#include "mgd/validate.hpp"
#include "moves_internal.hpp"
#include "planarity_internal.hpp"

namespace mgd {

namespace {

// ---- Pattern matching ----------------------------------------------------

// Attempts the unique structure-preserving map of `t` into `d` that sends
// pattern vertex 0 to host vertex hv with the given (even) slot offset.
// Pattern internal edges must land on host edges; distinct pattern vertices
// land on distinct host vertices. Returns the per-dart image on success.
std::optional<std::vector<DartId>> try_match(const Diagram& d, const Tangle& t,
                                             int hv, int off) {
  const int pv_count = static_cast<int>(t.kinds.size());
  std::vector<int> vimg(pv_count, -1), voff(pv_count, -1);
  std::vector<char> hused(d.vertex_count(), 0);
  std::vector<int> stack;
  const auto assign = [&](int pv, int h, int o) {
    if (vimg[pv] != -1) return vimg[pv] == h && voff[pv] == o;
    if (hused[h] || t.kinds[pv] != d.kind(h)) return false;
    vimg[pv] = h;
    voff[pv] = o;
    hused[h] = 1;
    stack.push_back(pv);
    return true;
  };
  if (!assign(0, hv, off)) return std::nullopt;
  while (!stack.empty()) {
    const int pv = stack.back();
    stack.pop_back();
    for (int s = 0; s < 4; ++s) {
      const DartId pa = t.alpha[Diagram::dart(pv, s)];
      if (pa == -1) continue;  // boundary leg
      const DartId ha = d.alpha(Diagram::dart(vimg[pv], (s + voff[pv]) & 3));
      const int o2 = (Diagram::slot_of(ha) - Diagram::slot_of(pa)) & 3;
      if (o2 & 1) return std::nullopt;  // would flip over/under or the marker
      if (!assign(Diagram::vertex_of(pa), Diagram::vertex_of(ha), o2)) {
        return std::nullopt;
      }
    }
  }
  std::vector<DartId> image(t.alpha.size());
  for (int pv = 0; pv < pv_count; ++pv) {
    for (int s = 0; s < 4; ++s) {
      image[Diagram::dart(pv, s)] = Diagram::dart(vimg[pv], (s + voff[pv]) & 3);
    }
  }
  return image;
}

std::vector<MoveSite> enumerate_matched(const Diagram& d, int rule, MoveDir dir) {
  const MoveRule& r = move_table()[rule];
  const Tangle& pat = pattern_side(r, dir);
  const RuleAutomorphisms& auts = rule_automorphism_table()[rule];
  const std::vector<std::vector<DartId>>& side_auts =
      dir == MoveDir::kForward ? auts.lhs : auts.rhs;
  const std::vector<int> rank = canonical_rank(d);

  // Candidate matches, deduplicated by rule automorphisms through the
  // smallest rank vector they induce.
  std::map<std::vector<int>, std::vector<DartId>> by_key;
  for (int hv = 0; hv < d.vertex_count(); ++hv) {
    for (int off = 0; off < 4; off += 2) {
      auto image = try_match(d, pat, hv, off);
      if (!image) continue;
      std::vector<int> key;
      if (side_auts.size() > 1) {
        for (const auto& aut : side_auts) {
          std::vector<int> cand(image->size());
          for (std::size_t x = 0; x < image->size(); ++x) {
            cand[x] = rank[(*image)[aut[x]]];
          }
          if (key.empty() || cand < key) key = std::move(cand);
        }
      } else {
        key.resize(image->size());
        for (std::size_t x = 0; x < image->size(); ++x) key[x] = rank[(*image)[x]];
      }
      by_key.emplace(std::move(key), std::move(*image));
    }
  }

  std::vector<MoveSite> sites;
  for (auto& [key, image] : by_key) {
    MoveSite s;
    s.rule = rule;
    s.dir = dir;
    s.index = static_cast<int>(sites.size());
    s.image = std::move(image);
    sites.push_back(std::move(s));
  }
  return sites;
}

// ---- Splicing a matched site ---------------------------------------------

ApplyResult apply_matched(const Diagram& d, const MoveSite& site) {
  const MoveRule& r = move_table()[site.rule];
  const Tangle& pat = pattern_side(r, site.dir);
  const Tangle& rep = replacement_side(r, site.dir);
  const std::vector<DartId>& image = site.image;
  const int k = static_cast<int>(pat.legs.size());

  std::vector<char> removed(d.vertex_count(), 0);
  for (std::size_t pv = 0; pv < pat.kinds.size(); ++pv) {
    removed[Diagram::vertex_of(image[Diagram::dart(static_cast<int>(pv), 0)])] = 1;
  }
  std::vector<int> new_index(d.vertex_count(), -1);
  std::vector<VertexKind> kinds;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (!removed[v]) {
      new_index[v] = static_cast<int>(kinds.size());
      kinds.push_back(d.kind(v));
    }
  }
  const int inst_base = static_cast<int>(kinds.size());
  for (const VertexKind kk : rep.kinds) kinds.push_back(kk);

  const auto nd = [&](DartId x) {  // surviving host dart -> result dart
    return Diagram::dart(new_index[Diagram::vertex_of(x)], Diagram::slot_of(x));
  };
  const auto ni = [&](DartId y) {  // replacement-instance dart -> result dart
    return Diagram::dart(inst_base + Diagram::vertex_of(y), Diagram::slot_of(y));
  };

  std::vector<DartId> alpha(kinds.size() * 4, -1);
  for (DartId x = 0; x < d.dart_count(); ++x) {
    const DartId y = d.alpha(x);
    if (!removed[Diagram::vertex_of(x)] && !removed[Diagram::vertex_of(y)]) {
      alpha[nd(x)] = nd(y);
    }
  }
  for (DartId y = 0; y < static_cast<DartId>(rep.alpha.size()); ++y) {
    if (rep.alpha[y] != -1) alpha[ni(y)] = ni(rep.alpha[y]);
  }

  // Boundary bookkeeping. Each boundary position has an outer attachment (a
  // surviving host stub, or a host edge linking it to another position) and
  // an inner attachment (a replacement leg dart, or a bare replacement arc
  // linking two positions).
  std::vector<DartId> outer_stub(k, -1), inner_dart(k, -1);
  std::vector<int> out_link(k, -1), in_link(k, -1);
  std::map<DartId, int> pos_of_leg_image;
  for (int i = 0; i < k; ++i) pos_of_leg_image[image[pat.legs[i]]] = i;
  for (int i = 0; i < k; ++i) {
    const DartId o = d.alpha(image[pat.legs[i]]);
    if (!removed[Diagram::vertex_of(o)]) {
      outer_stub[i] = o;
    } else {
      const auto it = pos_of_leg_image.find(o);
      if (it == pos_of_leg_image.end()) {
        throw InternalError("matched boundary does not close");
      }
      out_link[i] = it->second;
    }
  }
  for (int i = 0; i < k; ++i) {
    if (rep.legs[i] != -1) inner_dart[i] = ni(rep.legs[i]);
  }
  for (const auto& [i, j] : rep.leg_arcs) {
    in_link[i] = j;
    in_link[j] = i;
  }

  // Chase each strand through the boundary: entering a position from outside
  // exits through its inner attachment and vice versa.
  std::vector<char> seen(k, 0);
  struct End {
    DartId dart;
    bool is_stub;
  };
  const std::function<End(int, bool)> chase = [&](int pos, bool from_outer) -> End {
    seen[pos] = 1;
    if (from_outer) {
      if (inner_dart[pos] != -1) return {inner_dart[pos], false};
      const int j = in_link[pos];
      seen[j] = 1;
      if (outer_stub[j] != -1) return {outer_stub[j], true};
      return chase(out_link[j], true);
    }
    if (outer_stub[pos] != -1) return {outer_stub[pos], true};
    const int j = out_link[pos];
    seen[j] = 1;
    if (inner_dart[j] != -1) return {inner_dart[j], false};
    return chase(in_link[j], false);
  };
  for (int i = 0; i < k; ++i) {
    if (outer_stub[i] != -1) {
      const End e = chase(i, true);
      const DartId a = nd(outer_stub[i]);
      const DartId b = e.is_stub ? nd(e.dart) : e.dart;
      alpha[a] = b;
      alpha[b] = a;
    }
    if (inner_dart[i] != -1) {
      const End e = chase(i, false);
      const DartId a = inner_dart[i];
      const DartId b = e.is_stub ? nd(e.dart) : e.dart;
      alpha[a] = b;
      alpha[b] = a;
    }
  }

  // Boundary cycles touched by no stub or leg close into free circles.
  std::vector<FreeLoop> loops(d.loops().size(), FreeLoop{0});
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int p = i;
    while (!seen[p]) {
      seen[p] = 1;
      seen[in_link[p]] = 1;
      p = out_link[in_link[p]];
    }
    loops.push_back(FreeLoop{0});
  }

  ApplyResult out{Diagram(std::move(kinds), std::move(alpha), std::move(loops)),
                  {},
                  {}};
  for (std::size_t v = 0; v < rep.kinds.size(); ++v) {
    out.inserted_vertices.push_back(inst_base + static_cast<int>(v));
  }
  out.inserted_leg_darts.assign(inner_dart.begin(), inner_dart.end());
  if (!planar_quick(out.diagram)) {
    throw InternalError("rule " + r.name + ": splice produced a non-planar map");
  }
  return out;
}

// ---- Arc insertion (reverse of the arc-sided rules) ----------------------

struct CarrierCut {
  int arc = -1;       // which bare arc of the pattern this anchor serves
  ArcAnchor anchor;
};

ApplyResult apply_insertion(const Diagram& d, const MoveSite& site) {
  const MoveRule& r = move_table()[site.rule];
  const Tangle& pat = pattern_side(r, site.dir);   // bare arcs
  const Tangle& rep = replacement_side(r, site.dir);

  std::vector<VertexKind> kinds(d.kinds());
  const int inst_base = d.vertex_count();
  for (const VertexKind kk : rep.kinds) kinds.push_back(kk);
  const auto ni = [&](DartId y) {
    return Diagram::dart(inst_base + Diagram::vertex_of(y), Diagram::slot_of(y));
  };

  std::vector<DartId> alpha(kinds.size() * 4, -1);
  for (DartId x = 0; x < d.dart_count(); ++x) alpha[x] = d.alpha(x);
  for (DartId y = 0; y < static_cast<DartId>(rep.alpha.size()); ++y) {
    if (rep.alpha[y] != -1) alpha[ni(y)] = ni(rep.alpha[y]);
  }

  // Instance legs for each cut: pattern arc (i, j) puts leg i on the far
  // port and leg j on the near port of its anchor.
  const auto far_leg = [&](int arc) { return ni(rep.legs[pat.leg_arcs[arc].first]); };
  const auto near_leg = [&](int arc) { return ni(rep.legs[pat.leg_arcs[arc].second]); };

  // Group cuts by carrier (host edge or free loop).
  std::map<std::pair<int, int>, std::vector<CarrierCut>> by_carrier;
  for (std::size_t a = 0; a < site.arc_anchors.size(); ++a) {
    const ArcAnchor& an = site.arc_anchors[a];
    const std::pair<int, int> key =
        an.on_loop ? std::make_pair(1, an.loop)
                   : std::make_pair(0, static_cast<int>(std::min(an.dart, d.alpha(an.dart))));
    by_carrier[key].push_back({static_cast<int>(a), an});
  }

  std::vector<char> loop_consumed(d.loops().size(), 0);
  const auto connect = [&](DartId a, DartId b) {
    alpha[a] = b;
    alpha[b] = a;
  };

  for (const auto& [key, cuts] : by_carrier) {
    if (key.first == 0) {
      // Edge carrier: order the cuts along u -> alpha(u); each cut's near
      // port faces its anchor dart.
      const DartId u = key.second;
      const DartId ub = d.alpha(u);
      std::vector<std::pair<DartId, DartId>> ports;  // (before, after) per cut
      for (const CarrierCut& c : cuts) {
        if (c.anchor.dart == u) {
          ports.emplace_back(near_leg(c.arc), far_leg(c.arc));
        }
      }
      for (auto it = cuts.rbegin(); it != cuts.rend(); ++it) {
        if (it->anchor.dart == ub && ub != u) {
          ports.emplace_back(far_leg(it->arc), near_leg(it->arc));
        }
      }
      DartId prev = u;
      for (const auto& [before, after] : ports) {
        connect(prev, before);
        prev = after;
      }
      connect(prev, ub);
    } else {
      // Loop carrier: the cuts sit around the circle in listed order; side 1
      // swaps a cut's (before, after) ports.
      loop_consumed[key.second] = 1;
      std::vector<std::pair<DartId, DartId>> ports;
      for (const CarrierCut& c : cuts) {
        if (c.anchor.loop_side == 0) {
          ports.emplace_back(near_leg(c.arc), far_leg(c.arc));
        } else {
          ports.emplace_back(far_leg(c.arc), near_leg(c.arc));
        }
      }
      for (std::size_t i = 0; i < ports.size(); ++i) {
        connect(ports[i].second, ports[(i + 1) % ports.size()].first);
      }
    }
  }

  std::vector<FreeLoop> loops;
  for (std::size_t i = 0; i < d.loops().size(); ++i) {
    if (!loop_consumed[i]) loops.push_back(FreeLoop{0});
  }

  ApplyResult out{Diagram(std::move(kinds), std::move(alpha), std::move(loops)),
                  {},
                  {}};
  for (std::size_t v = 0; v < rep.kinds.size(); ++v) {
    out.inserted_vertices.push_back(inst_base + static_cast<int>(v));
  }
  out.inserted_leg_darts.resize(rep.legs.size(), -1);
  for (std::size_t i = 0; i < rep.legs.size(); ++i) {
    if (rep.legs[i] != -1) out.inserted_leg_darts[i] = ni(rep.legs[i]);
  }
  return out;
}

std::vector<SiteExpansion> enumerate_insertion_expansions(const Diagram& d, int rule,
                                                          MoveDir dir) {
  const MoveRule& r = move_table()[rule];
  const Tangle& pat = pattern_side(r, dir);
  const int arcs = static_cast<int>(pat.leg_arcs.size());
  const std::vector<int> rank = canonical_rank(d);
  const FaceIndex faces = face_orbits(d);

  std::vector<ArcAnchor> anchors;
  for (DartId x = 0; x < d.dart_count(); ++x) {
    anchors.push_back(ArcAnchor{false, x, -1, 0});
  }
  for (int l = 0; l < static_cast<int>(d.loops().size()); ++l) {
    for (int side = 0; side < 2; ++side) {
      anchors.push_back(ArcAnchor{true, -1, l, side});
    }
  }
  const auto key_of = [&](const ArcAnchor& a) {
    return a.on_loop ? std::make_tuple(1, a.loop, a.loop_side)
                     : std::make_tuple(0, rank[a.dart], 0);
  };
  std::vector<int> order(anchors.size());
  for (std::size_t i = 0; i < anchors.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return key_of(anchors[a]) < key_of(anchors[b]); });

  const auto same_face = [&](const ArcAnchor& a, const ArcAnchor& b) {
    if (a.on_loop || b.on_loop) return true;  // loop placement is free
    return faces.face_of_dart[a.dart] == faces.face_of_dart[b.dart];
  };

  std::vector<SiteExpansion> sites;
  const auto consider = [&](std::vector<ArcAnchor> chosen) {
    MoveSite s;
    s.rule = rule;
    s.dir = dir;
    s.arc_anchors = std::move(chosen);
    try {
      ApplyResult res = apply_insertion(d, s);
      if (!planar_quick(res.diagram)) return;
      s.index = static_cast<int>(sites.size());
      sites.push_back(SiteExpansion{std::move(s), std::move(res.diagram)});
    } catch (const MgdError&) {
      return;
    }
  };
  if (arcs == 1) {
    for (const int i : order) consider({anchors[i]});
  } else {
    for (const int i : order) {
      for (const int j : order) {
        if (!same_face(anchors[i], anchors[j])) continue;
        consider({anchors[i], anchors[j]});
      }
    }
  }
  return sites;
}

}  // namespace

std::vector<MoveSite> enumerate_sites_structural(const Diagram& d, int rule,
                                                 MoveDir dir) {
  if (rule < 0 || rule >= static_cast<int>(move_table().size())) {
    throw MgdError("no such rule index " + std::to_string(rule));
  }
  const Tangle& pat = pattern_side(move_table()[rule], dir);
  if (!pat.kinds.empty()) return enumerate_matched(d, rule, dir);
  std::vector<MoveSite> sites;
  for (SiteExpansion& e : enumerate_insertion_expansions(d, rule, dir)) {
    sites.push_back(std::move(e.site));
  }
  return sites;
}

std::vector<SiteExpansion> enumerate_expansions_structural(const Diagram& d, int rule,
                                                           MoveDir dir) {
  if (rule < 0 || rule >= static_cast<int>(move_table().size())) {
    throw MgdError("no such rule index " + std::to_string(rule));
  }
  const Tangle& pat = pattern_side(move_table()[rule], dir);
  if (pat.kinds.empty()) return enumerate_insertion_expansions(d, rule, dir);
  std::vector<SiteExpansion> out;
  std::vector<MoveSite> sites = enumerate_matched(d, rule, dir);
  out.reserve(sites.size());
  for (MoveSite& s : sites) {
    Diagram next = apply_matched(d, s).diagram;
    out.push_back(SiteExpansion{std::move(s), std::move(next)});
  }
  return out;
}

Diagram apply_site_structural(const Diagram& d, const MoveSite& site) {
  return apply_site_structural_ex(d, site).diagram;
}

ApplyResult apply_site_structural_ex(const Diagram& d, const MoveSite& site) {
  if (site.rule < 0 || site.rule >= static_cast<int>(move_table().size())) {
    throw MgdError("no such rule index " + std::to_string(site.rule));
  }
  const Tangle& pat = pattern_side(move_table()[site.rule], site.dir);
  ApplyResult res = pat.kinds.empty() ? apply_insertion(d, site)
                                      : apply_matched(d, site);
  return res;
}

}  // namespace mgd
