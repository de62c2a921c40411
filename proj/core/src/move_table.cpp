#include <algorithm>
#include <map>
#include <string>

#include "mgd/moves.hpp"
#include "mgd/validate.hpp"
#include "moves_internal.hpp"

// The rewrite-rule table. Each side of a rule is a disk tangle given by its
// vertices (slot labels listed ccw; a label appearing twice is an internal
// edge, once is a boundary leg) plus the ccw order of the boundary legs.
// Mirrors are generated mechanically and deduplicated when a rule equals its
// own reflection up to a relabeling and a rotation of the boundary.

namespace mgd {

namespace {

struct SpecVertex {
  VertexKind kind;
  std::array<const char*, 4> labels;
};

struct TangleSpec {
  std::vector<SpecVertex> vertices;
  std::vector<const char*> legs;                 // ccw boundary order
  std::vector<std::pair<int, int>> arcs;         // for bare-arc sides
};

SpecVertex X(const char* a, const char* b, const char* c, const char* d) {
  return {VertexKind::kCrossing, {a, b, c, d}};
}
SpecVertex M(const char* a, const char* b, const char* c, const char* d) {
  return {VertexKind::kMarked, {a, b, c, d}};
}

Tangle build_tangle(const TangleSpec& spec) {
  Tangle t;
  t.leg_arcs = spec.arcs;
  if (spec.vertices.empty()) {
    t.legs.assign(2 * spec.arcs.size(), -1);
    return t;
  }
  std::map<std::string, std::vector<DartId>> occ;
  for (std::size_t v = 0; v < spec.vertices.size(); ++v) {
    t.kinds.push_back(spec.vertices[v].kind);
    for (int s = 0; s < 4; ++s) {
      occ[spec.vertices[v].labels[s]].push_back(Diagram::dart(static_cast<int>(v), s));
    }
  }
  t.alpha.assign(t.kinds.size() * 4, -1);
  for (const auto& [label, darts] : occ) {
    if (darts.size() == 2) {
      t.alpha[darts[0]] = darts[1];
      t.alpha[darts[1]] = darts[0];
    } else if (darts.size() != 1) {
      throw InternalError("rule label '" + label + "' occurs " +
                          std::to_string(darts.size()) + " times");
    }
  }
  for (const char* leg : spec.legs) {
    const auto it = occ.find(leg);
    if (it == occ.end() || it->second.size() != 1) {
      throw InternalError(std::string("rule leg '") + leg + "' is not a free end");
    }
    t.legs.push_back(it->second.front());
  }
  for (DartId x = 0; x < static_cast<DartId>(t.alpha.size()); ++x) {
    if (t.alpha[x] == -1 &&
        std::find(t.legs.begin(), t.legs.end(), x) == t.legs.end()) {
      throw InternalError("rule has an unlisted free end");
    }
  }
  return t;
}

// Walks the tangle boundary ccw starting at `leg` and returns the next leg.
DartId next_leg_ccw(const Tangle& t, DartId leg) {
  DartId y = Diagram::sigma(leg);
  while (t.alpha[y] != -1) y = Diagram::sigma(t.alpha[y]);
  return y;
}

void check_boundary_order(const Tangle& t, const std::string& rule) {
  if (t.kinds.empty()) return;
  const int k = static_cast<int>(t.legs.size());
  for (int i = 0; i < k; ++i) {
    if (next_leg_ccw(t, t.legs[i]) != t.legs[(i + 1) % k]) {
      throw InternalError("rule " + rule + ": boundary legs are not in ccw order");
    }
  }
}

// Closes the tangle with non-crossing boundary arcs (pairing legs i and i+1
// starting from `shift`) and checks the closure is a planar map.
void check_disk_closure(const Tangle& t, int shift, const std::string& rule) {
  if (t.kinds.empty()) return;
  const int k = static_cast<int>(t.legs.size());
  std::vector<DartId> alpha = t.alpha;
  for (int i = 0; i < k; i += 2) {
    const DartId a = t.legs[(i + shift) % k];
    const DartId b = t.legs[(i + 1 + shift) % k];
    alpha[a] = b;
    alpha[b] = a;
  }
  const Diagram closed(t.kinds, std::move(alpha), {});
  if (!validate(closed).planar) {
    throw InternalError("rule " + rule + ": tangle does not close to a sphere");
  }
}

void verify_side(const Tangle& t, const std::string& rule) {
  check_boundary_order(t, rule);
  check_disk_closure(t, 0, rule);
  check_disk_closure(t, 1, rule);
}

// ---- Reflection ----------------------------------------------------------

// Reflects one tangle: crossings keep slot 0 (over stays on odd slots),
// marked vertices map slot s to 3-s (marker pairs intact); the boundary
// reverses while leg 0 stays put.
Tangle mirror_tangle(const Tangle& t) {
  Tangle m;
  m.kinds = t.kinds;
  const int k = static_cast<int>(t.legs.size());
  if (t.kinds.empty()) {
    m.legs.assign(t.legs.size(), -1);
    for (const auto& [i, j] : t.leg_arcs) {
      const int mi = i == 0 ? 0 : k - i;
      const int mj = j == 0 ? 0 : k - j;
      m.leg_arcs.emplace_back(std::min(mi, mj), std::max(mi, mj));
    }
    std::sort(m.leg_arcs.begin(), m.leg_arcs.end());
    return m;
  }
  std::vector<DartId> new_pos(t.alpha.size());
  for (int v = 0; v < static_cast<int>(t.kinds.size()); ++v) {
    for (int s = 0; s < 4; ++s) {
      const int ns = t.kinds[v] == VertexKind::kCrossing ? ((4 - s) & 3) : (3 - s);
      new_pos[Diagram::dart(v, s)] = Diagram::dart(v, ns);
    }
  }
  m.alpha.assign(t.alpha.size(), -1);
  for (DartId x = 0; x < static_cast<DartId>(t.alpha.size()); ++x) {
    if (t.alpha[x] != -1) m.alpha[new_pos[x]] = new_pos[t.alpha[x]];
  }
  m.legs.resize(k);
  for (int i = 0; i < k; ++i) {
    m.legs[i == 0 ? 0 : k - i] = new_pos[t.legs[i]];
  }
  return m;
}

// ---- Tangle isomorphism (for mirror deduplication) -----------------------

// Tests whether a maps onto b as a tangle, sending leg i to leg (i+r) mod k.
// Vertex slots may shift by two (the usual gauge freedom).
bool tangle_iso_with_rotation(const Tangle& a, const Tangle& b, int r) {
  const int k = static_cast<int>(a.legs.size());
  if (a.kinds.size() != b.kinds.size() || b.legs.size() != a.legs.size()) return false;
  if (a.kinds.empty()) {
    // Bare-arc sides: the arc pairings must agree after rotation.
    auto norm = [k](std::vector<std::pair<int, int>> arcs, int rot) {
      for (auto& [i, j] : arcs) {
        i = (i + rot) % k;
        j = (j + rot) % k;
        if (i > j) std::swap(i, j);
      }
      std::sort(arcs.begin(), arcs.end());
      return arcs;
    };
    return norm(a.leg_arcs, r) == norm(b.leg_arcs, 0);
  }
  const int darts = static_cast<int>(a.alpha.size());
  std::vector<DartId> image(darts, -1);
  std::vector<char> used(darts, 0);
  // Seed: leg 0 of a must land on leg r of b; propagate over sigma and alpha.
  std::vector<DartId> stack;
  const auto assign = [&](DartId x, DartId y) {
    // Maps the whole vertex of x onto the vertex of y with a fixed offset.
    const int vx = Diagram::vertex_of(x), vy = Diagram::vertex_of(y);
    if (a.kinds[vx] != b.kinds[vy]) return false;
    const int off = (Diagram::slot_of(y) - Diagram::slot_of(x)) & 3;
    if (off & 1) return false;
    for (int s = 0; s < 4; ++s) {
      const DartId xs = Diagram::dart(vx, s);
      const DartId ys = Diagram::dart(vy, (s + off) & 3);
      if (image[xs] == -1) {
        if (used[ys]) return false;
        image[xs] = ys;
        used[ys] = 1;
        stack.push_back(xs);
      } else if (image[xs] != ys) {
        return false;
      }
    }
    return true;
  };
  if (!assign(a.legs[0], b.legs[r % k])) return false;
  bool ok = true;
  while (ok && !stack.empty()) {
    const DartId x = stack.back();
    stack.pop_back();
    const DartId ax = a.alpha[x];
    const DartId bx = b.alpha[image[x]];
    if (ax == -1 || bx == -1) {
      ok = (ax == -1) == (bx == -1);
      continue;
    }
    ok = assign(ax, bx);
  }
  if (!ok) return false;
  for (DartId x = 0; x < darts; ++x) {
    if (image[x] == -1) return false;  // disconnected tangle side
  }
  for (int i = 0; i < k; ++i) {
    if (image[a.legs[i]] != b.legs[(i + r) % k]) return false;
  }
  return true;
}

bool rules_equivalent(const MoveRule& a, const MoveRule& b) {
  const int k = static_cast<int>(a.lhs.legs.size());
  if (b.lhs.legs.size() != a.lhs.legs.size()) return false;
  for (int r = 0; r < k; ++r) {
    if (!tangle_iso_with_rotation(a.lhs, b.lhs, r)) continue;
    if (!tangle_iso_with_rotation(a.rhs, b.rhs, r)) continue;
    if (a.leg_l >= 0 && (a.leg_l + r) % k != b.leg_l) continue;
    return true;
  }
  return false;
}

// ---- The rules -----------------------------------------------------------

MoveRule make_rule(std::string name, std::string display, MoveType type,
                   ConditionClass cond, const TangleSpec& lhs,
                   const TangleSpec& rhs, int leg_l = -1, int p_rhs_vertex = -1) {
  MoveRule r;
  r.name = std::move(name);
  r.display_name = std::move(display);
  r.type = type;
  r.condition = cond;
  r.lhs = build_tangle(lhs);
  r.rhs = build_tangle(rhs);
  r.leg_l = leg_l;
  r.p_rhs_vertex = p_rhs_vertex;
  if (r.lhs.legs.size() != r.rhs.legs.size()) {
    throw InternalError("rule " + r.name + ": sides disagree on the boundary");
  }
  verify_side(r.lhs, r.name);
  verify_side(r.rhs, r.name);
  return r;
}

std::vector<MoveRule> build_table() {
  std::vector<MoveRule> base;

  base.push_back(make_rule(
      "omega1", "Ω1", MoveType::kTypeI, ConditionClass::kNone,
      {{X("x", "y", "e", "e")}, {"x", "y"}, {}},
      {{}, {"x", "y"}, {{0, 1}}}));

  base.push_back(make_rule(
      "omega2", "Ω2", MoveType::kTypeI, ConditionClass::kNone,
      {{X("e2", "e1", "c", "a"), X("e2", "b", "d", "e1")},
       {"a", "b", "d", "c"},
       {}},
      {{}, {"a", "b", "d", "c"}, {{0, 1}, {2, 3}}}));

  base.push_back(make_rule(
      "omega3", "Ω3", MoveType::kTypeI, ConditionClass::kNone,
      {{X("p", "ed", "ebc", "w"), X("eac", "ed", "q", "e"), X("ebc", "eac", "r", "s")},
       {"w", "p", "q", "e", "r", "s"},
       {}},
      {{X("s", "w", "evc", "ed2"), X("euc", "e", "r", "ed2"), X("p", "q", "euc", "evc")},
       {"w", "p", "q", "e", "r", "s"},
       {}}));

  base.push_back(make_rule(
      "omega4", "Ω4", MoveType::kTypeII, ConditionClass::kNone,
      {{M("e2", "n", "s", "e1"), X("e1", "w", "m", "d"), X("e2", "d", "t", "e")},
       {"w", "m", "t", "e", "n", "s"},
       {}},
      {{M("t", "e3", "e4", "m"), X("s", "w", "e4", "d2"), X("e3", "e", "n", "d2")},
       {"w", "m", "t", "e", "n", "s"},
       {}}));

  base.push_back(make_rule(
      "omega5", "Ω5", MoveType::kTypeII, ConditionClass::kNone,
      {{X("a", "b", "q", "p"), M("d", "c", "p", "q")}, {"a", "b", "d", "c"}, {}},
      {{M("q2", "p2", "a", "b"), X("p2", "q2", "d", "c")}, {"a", "b", "d", "c"}, {}}));

  base.push_back(make_rule(
      "omega6", "Ω6", MoveType::kTypeII, ConditionClass::kNone,
      {{M("e", "x", "y", "e")}, {"x", "y"}, {}},
      {{}, {"x", "y"}, {{0, 1}}}));

  base.push_back(make_rule(
      "omega6p", "Ω6′", MoveType::kTypeII, ConditionClass::kNone,
      {{M("e", "e", "x", "y")}, {"x", "y"}, {}},
      {{}, {"x", "y"}, {{0, 1}}}));

  base.push_back(make_rule(
      "omega7", "Ω7", MoveType::kTypeII, ConditionClass::kNone,
      {{M("g", "f", "a", "b"), M("e", "d", "c", "g")},
       {"a", "b", "e", "d", "c", "f"},
       {}},
      {{M("e", "d", "g2", "b"), M("c", "f", "a", "g2")},
       {"a", "b", "e", "d", "c", "f"},
       {}}));

  base.push_back(make_rule(
      "omega8", "Ω8", MoveType::kTypeII, ConditionClass::kNone,
      {{M("g", "f", "x1", "u1"), M("w1", "i", "h", "v1"), X("u1", "v2", "u2", "v1"),
        X("u2", "w2", "d", "w1"), X("x1", "a", "x2", "v2"), X("x2", "b", "c", "w2")},
       {"a", "b", "c", "d", "i", "h", "g", "f"},
       {}},
      {{M("p2", "i", "h", "p1"), M("g", "f", "y1", "y2"), X("q1", "v2", "p1", "y2"),
        X("a", "r2", "q1", "y1"), X("q2", "d", "p2", "v2"), X("b", "c", "q2", "r2")},
       {"a", "b", "c", "d", "i", "h", "g", "f"},
       {}}));

  base.push_back(make_rule(
      "omega9", "Ω9", MoveType::kTypeIII, ConditionClass::kUpperTriple,
      {{M("e2", "l", "bl", "e1"), X("e1", "br", "h2", "xm"), X("xm", "h2", "tr", "e2")},
       {"l", "bl", "br", "tr"},
       {}},
      {{X("b1", "a2", "tr", "l"), X("a2", "b1", "bl", "br")},
       {"l", "bl", "br", "tr"},
       {}},
      /*leg_l=*/0, /*p_rhs_vertex=*/0));

  base.push_back(make_rule(
      "omega9p", "Ω9′", MoveType::kTypeIII, ConditionClass::kLowerTriple,
      {{M("e1", "e2", "l", "bl"), X("e1", "br", "h2", "xm"), X("xm", "h2", "tr", "e2")},
       {"l", "bl", "br", "tr"},
       {}},
      {{X("b1", "a2", "tr", "l"), X("a2", "b1", "bl", "br")},
       {"l", "bl", "br", "tr"},
       {}},
      /*leg_l=*/0, /*p_rhs_vertex=*/0));

  base.push_back(make_rule(
      "omega9s", "Ω9*", MoveType::kTypeIII, ConditionClass::kStarred,
      {{M("b1", "a1", "bl", "d1"), X("tl", "h0", "a1", "h1"), X("d2", "h1", "b1", "h2"),
        X("h2", "d1", "h3", "d2")},
       {"tl", "h0", "bl", "h3"},
       {}},
      {{X("ml", "bl", "mr", "tl")}, {"tl", "ml", "bl", "mr"}, {}}));

  base.push_back(make_rule(
      "omega9ps", "Ω9′*", MoveType::kTypeIII, ConditionClass::kStarred,
      {{M("d1", "b1", "a1", "bl"), X("tl", "h0", "a1", "h1"), X("d2", "h1", "b1", "h2"),
        X("h2", "d1", "h3", "d2")},
       {"tl", "h0", "bl", "h3"},
       {}},
      {{X("ml", "bl", "mr", "tl")}, {"tl", "ml", "bl", "mr"}, {}}));

  base.push_back(make_rule(
      "omega10", "Ω10", MoveType::kTypeIII, ConditionClass::kNone,
      {{M("u3", "f", "g1", "u1"), M("w3", "m1", "n0", "w1"), X("w2", "u1", "w3", "u2"),
        X("u2", "w1", "u3", "w2"), X("m0", "g0", "m1", "g1")},
       {"f", "m0", "g0", "n0"},
       {}},
      {{M("u1", "u3", "f", "g1"), M("w3", "w1", "m1", "n0"), X("u1", "w1", "u2", "w2"),
        X("w2", "u2", "w3", "u3"), X("g0", "m1", "g1", "m0")},
       {"f", "m0", "g0", "n0"},
       {}}));

  std::vector<MoveRule> table;
  for (std::size_t i = 0; i < base.size(); ++i) {
    base[i].partner = static_cast<int>(i);
    table.push_back(base[i]);
  }
  for (std::size_t i = 0; i < base.size(); ++i) {
    MoveRule m = base[i];
    m.lhs = mirror_tangle(base[i].lhs);
    m.rhs = mirror_tangle(base[i].rhs);
    m.name = base[i].name + "_m";
    m.display_name = base[i].display_name + "_m";
    m.is_mirror = true;
    verify_side(m.lhs, m.name);
    verify_side(m.rhs, m.name);
    if (rules_equivalent(m, base[i])) continue;  // reflection-symmetric rule
    m.partner = static_cast<int>(i);
    table[i].partner = static_cast<int>(table.size());
    table.push_back(std::move(m));
  }
  return table;
}

// ---- Rule automorphisms (for site deduplication) -------------------------

// Recovers the dart permutation of a vertexful side under the boundary
// rotation r, which must already have passed the self-isomorphism test.
std::vector<DartId> rotation_dart_map(const Tangle& t, int r) {
  if (t.kinds.empty()) return {};
  const int k = static_cast<int>(t.legs.size());
  std::vector<DartId> image(t.alpha.size(), -1);
  std::vector<DartId> stack;
  const auto assign = [&](DartId x, DartId y) {
    const int off = (Diagram::slot_of(y) - Diagram::slot_of(x)) & 3;
    const int vx = Diagram::vertex_of(x), vy = Diagram::vertex_of(y);
    for (int s = 0; s < 4; ++s) {
      const DartId xs = Diagram::dart(vx, s);
      const DartId ys = Diagram::dart(vy, (s + off) & 3);
      if (image[xs] == -1) {
        image[xs] = ys;
        stack.push_back(xs);
      }
    }
  };
  assign(t.legs[0], t.legs[r % k]);
  while (!stack.empty()) {
    const DartId x = stack.back();
    stack.pop_back();
    if (t.alpha[x] != -1) assign(t.alpha[x], t.alpha[image[x]]);
  }
  return image;
}

// All boundary rotations that leave both sides of the rule fixed. Each yields
// one dart permutation per vertexful side; the two lists stay aligned.
RuleAutomorphisms rule_automorphisms(const MoveRule& rule) {
  RuleAutomorphisms out;
  const int k = static_cast<int>(rule.lhs.legs.size());
  for (int r = 0; r < k; ++r) {
    if (rule.leg_l >= 0 && r != 0) continue;  // conditions pin the boundary
    if (!tangle_iso_with_rotation(rule.lhs, rule.lhs, r)) continue;
    if (!tangle_iso_with_rotation(rule.rhs, rule.rhs, r)) continue;
    out.lhs.push_back(rotation_dart_map(rule.lhs, r));
    out.rhs.push_back(rotation_dart_map(rule.rhs, r));
  }
  return out;
}

}  // namespace

const std::vector<MoveRule>& move_table() {
  static const std::vector<MoveRule> table = build_table();
  return table;
}

const std::vector<RuleAutomorphisms>& rule_automorphism_table() {
  static const std::vector<RuleAutomorphisms> table = [] {
    std::vector<RuleAutomorphisms> t;
    for (const MoveRule& rule : move_table()) t.push_back(rule_automorphisms(rule));
    return t;
  }();
  return table;
}

std::optional<int> rule_index(const std::string& name) {
  static const std::map<std::string, int> index = [] {
    std::map<std::string, int> m;
    const auto& table = move_table();
    for (std::size_t i = 0; i < table.size(); ++i) {
      m[table[i].name] = static_cast<int>(i);
      m[table[i].display_name] = static_cast<int>(i);
      if (table[i].is_mirror) {
        // Unicode alias with the ascii mirror suffix, e.g. "Ω2_m".
        m[table[table[i].partner].display_name + "_m"] = static_cast<int>(i);
      }
    }
    return m;
  }();
  const auto it = index.find(name);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::vector<int> parse_rule_selector(const std::string& selector) {
  const auto& table = move_table();
  std::vector<int> out;
  const auto add = [&](int i) { out.push_back(i); };
  const auto add_type = [&](MoveType t, bool starred) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      const bool is_starred = table[i].condition == ConditionClass::kStarred;
      if (table[i].type == t && is_starred == starred) add(static_cast<int>(i));
    }
  };
  std::size_t pos = 0;
  while (pos <= selector.size()) {
    std::size_t comma = selector.find(',', pos);
    if (comma == std::string::npos) comma = selector.size();
    const std::string item = selector.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    if (item == "all") {
      for (std::size_t i = 0; i < table.size(); ++i) add(static_cast<int>(i));
    } else if (item == "typeI") {
      add_type(MoveType::kTypeI, false);
    } else if (item == "typeII") {
      add_type(MoveType::kTypeII, false);
    } else if (item == "typeIII") {
      add_type(MoveType::kTypeIII, false);
    } else if (item == "starred") {
      add_type(MoveType::kTypeIII, true);
    } else if (auto idx = rule_index(item)) {
      add(*idx);
      if (!table[*idx].is_mirror && table[*idx].partner != *idx &&
          item.find("_m") == std::string::npos) {
        add(table[*idx].partner);  // a base name covers its mirror
      }
    } else {
      throw MgdError("unknown rule selector '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw MgdError("empty rule selector");
  return out;
}

}  // namespace mgd
