#include <string>
#include <utility>

#include "mgd/certify.hpp"
#include "mgd/moves.hpp"
#include "mgd/resolve.hpp"
#include "moves_internal.hpp"

namespace mgd {

namespace {

struct ConditionOutcome {
  bool ok = true;
  bool unknown = false;
  std::string reason;
};

// Surface data governing the starred rules: Euler characteristic from the
// two resolutions and the double-point count from their certificates (valid
// once both resolutions are certified H-trivial).
std::pair<int, int> chi_and_double_points(const Diagram& d,
                                          const HAdmissibility& ha) {
  int marked = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.kind(v) == VertexKind::kMarked) ++marked;
  }
  const int chi = link_components(resolve(d, Side::kMinus).diagram).count +
                  link_components(resolve(d, Side::kPlus).diagram).count - marked;
  const int dp = ha.lower.hopf_count + ha.upper.hopf_count;
  return {chi, dp};
}

ConditionOutcome check_triple(const Diagram& before, const ApplyResult& res,
                              const MoveSite& site, const MoveRule& r,
                              const CertifyBudget& budget, CertCache* cache) {
  const Side side = r.condition == ConditionClass::kUpperTriple ? Side::kPlus
                                                                : Side::kMinus;
  // The side holding the marked vertex supplies the strand end l; the side
  // holding the clasp supplies the distinguished crossing p.
  const Diagram* vertex_side = nullptr;
  const Diagram* clasp_side = nullptr;
  DartId l_dart = -1;
  int p_vertex = -1;
  if (site.dir == MoveDir::kForward) {
    vertex_side = &before;
    clasp_side = &res.diagram;
    l_dart = site.image[r.lhs.legs[r.leg_l]];
    p_vertex = res.inserted_vertices[r.p_rhs_vertex];
  } else {
    vertex_side = &res.diagram;
    clasp_side = &before;
    l_dart = res.inserted_leg_darts[r.leg_l];
    p_vertex = Diagram::vertex_of(site.image[Diagram::dart(r.p_rhs_vertex, 0)]);
  }

  // (1) In the chosen resolution of the vertex side, the strand through l
  // must close into a trivial circle split from the rest of the diagram.
  const Resolution rz = resolve(*vertex_side, side);
  const SplitParts sp = split_parts(rz.diagram);
  const int part = rz.carrier_is_loop[l_dart]
                       ? sp.of_loop[rz.carrier[l_dart]]
                       : sp.of_vertex[Diagram::vertex_of(rz.carrier[l_dart])];
  const Certificate pc =
      certify_h_trivial(extract_split_part(rz.diagram, part), budget, cache);
  if (pc.verdict == Verdict::kUnknown) {
    return {false, true,
            r.name + ": could not decide whether the l-strand resolves to a "
                     "split trivial circle"};
  }
  if (pc.verdict == Verdict::kRefuted || pc.trivial_count != 1 ||
      pc.hopf_count != 0) {
    return {false, false,
            r.name + ": the l-strand does not resolve to a split trivial circle"};
  }

  // (2) On the clasp side, the crossing p must be a singular point of the
  // matching band level.
  const SingularReport sr = singular_points(*clasp_side, side, budget, cache);
  if (sr.marks[p_vertex] == SingularMark::kUnknown) {
    return {false, true,
            r.name + ": could not decide whether crossing p is singular"};
  }
  if (sr.marks[p_vertex] == SingularMark::kNo) {
    return {false, false, r.name + ": crossing p is not a singular point"};
  }
  return {};
}

ConditionOutcome check_conditions(const Diagram& before, const MoveSite& site,
                                  const ApplyResult& res,
                                  const SiteOptions& opts) {
  const MoveRule& r = move_table()[site.rule];
  if (r.type != MoveType::kTypeIII) return {};
  const CertifyBudget budget{opts.cert_depth, opts.cert_nodes};
  CertCache local;
  CertCache* cache = opts.cache != nullptr ? opts.cache : &local;

  const HAdmissibility ha_b = h_admissible(before, budget, cache);
  const HAdmissibility ha_a = h_admissible(res.diagram, budget, cache);
  if (ha_b.verdict == Verdict::kRefuted || ha_a.verdict == Verdict::kRefuted) {
    return {false, false, r.name + ": a side of the move is not H-admissible"};
  }
  if (ha_b.verdict == Verdict::kUnknown || ha_a.verdict == Verdict::kUnknown) {
    return {false, true,
            r.name + ": H-admissibility undecided within the certification budget"};
  }

  switch (r.condition) {
    case ConditionClass::kNone:
      return {};
    case ConditionClass::kStarred: {
      if (chi_and_double_points(before, ha_b) !=
          chi_and_double_points(res.diagram, ha_a)) {
        return {false, false,
                r.name + ": surface invariants differ across the move"};
      }
      return {};
    }
    case ConditionClass::kUpperTriple:
    case ConditionClass::kLowerTriple:
      return check_triple(before, res, site, r, budget, cache);
  }
  throw InternalError("unhandled condition class");
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const Diagram& d, int rule, MoveDir dir,
                                      const SiteOptions& opts) {
  std::vector<MoveSite> all = enumerate_sites_structural(d, rule, dir);
  if (move_table()[rule].type != MoveType::kTypeIII) return all;
  // Sites keep their structural indices so scripts stay meaningful whatever
  // the certification budget was when they were enumerated.
  std::vector<MoveSite> keep;
  for (MoveSite& s : all) {
    const ApplyResult res = apply_site_structural_ex(d, s);
    if (check_conditions(d, s, res, opts).ok) keep.push_back(std::move(s));
  }
  return keep;
}

Diagram apply_move(const Diagram& d, const MoveSite& site,
                   const SiteOptions& opts) {
  if (site.rule < 0 || site.rule >= static_cast<int>(move_table().size())) {
    throw MgdError("no such rule index " + std::to_string(site.rule));
  }
  const std::vector<MoveSite> sites =
      enumerate_sites_structural(d, site.rule, site.dir);
  if (site.index < 0 || site.index >= static_cast<int>(sites.size())) {
    throw MgdError("rule " + move_table()[site.rule].name + ": site " +
                   std::to_string(site.index) + " out of range (" +
                   std::to_string(sites.size()) + " sites)");
  }
  const MoveSite& s = sites[site.index];
  const ApplyResult res = apply_site_structural_ex(d, s);
  const ConditionOutcome c = check_conditions(d, s, res, opts);
  if (!c.ok) throw SideConditionError(c.reason, c.unknown);
  return res.diagram;
}

Diagram replay(const Diagram& d, const std::vector<MoveStep>& steps,
               const SiteOptions& opts) {
  Diagram cur = d;
  for (const MoveStep& st : steps) {
    MoveSite s;
    s.rule = st.rule;
    s.dir = st.dir;
    s.index = st.site_index;
    cur = apply_move(cur, s, opts);
  }
  return cur;
}

}  // namespace mgd
