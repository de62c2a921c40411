#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "mgd/bracket.hpp"
#include "mgd/canonical.hpp"
#include "mgd/certify.hpp"
#include "mgd/laurent.hpp"
#include "mgd/resolve.hpp"
#include "mgd/text_format.hpp"

#include "moves_internal.hpp"

namespace mgd {

namespace {

// Canonical codes of the minimal two-crossing Hopf diagrams, keyed to clasp
// sign. Both handednesses and their reflections are listed.
const std::map<CanonicalCode, bool>& hopf_codes() {
  static const std::map<CanonicalCode, bool> codes = [] {
    std::map<CanonicalCode, bool> m;
    const Diagram pos = parse("X+(1,3,2,4) X+(3,1,4,2)\n");
    const Diagram neg = crossing_change(crossing_change(pos, 0), 1);
    m.emplace(canonical_code(pos), true);
    m.emplace(canonical_code(mirror(neg)), true);
    m.emplace(canonical_code(neg), false);
    m.emplace(canonical_code(mirror(pos)), false);
    return m;
  }();
  return codes;
}

// The two orientation classes of the minimal Hopf diagram give two values of
// the normalized bracket; a split union of Hopf links draws from products of
// these.
const std::set<LaurentPolynomial>& hopf_values() {
  static const std::set<LaurentPolynomial> values =
      jones_set(parse("X+(1,3,2,4) X+(3,1,4,2)\n"));
  return values;
}

struct AcceptCounts {
  int trivial = 0;
  int hopf = 0;
  int hopf_positive = 0;
};

// A diagram is terminal when every split part is a bare circle or a minimal
// Hopf diagram.
std::optional<AcceptCounts> accept_state(const Diagram& d) {
  AcceptCounts c;
  c.trivial = static_cast<int>(d.loops().size());
  if (d.vertex_count() == 0) return c;
  // Every vertex-bearing part must be a two-crossing Hopf diagram, so an odd
  // vertex count can never be terminal.
  if (d.vertex_count() % 2 != 0) return std::nullopt;
  const SplitParts sp = split_parts(d);
  std::vector<int> part_vertices(sp.count, 0);
  for (int v = 0; v < d.vertex_count(); ++v) ++part_vertices[sp.of_vertex[v]];
  for (int p = 0; p < sp.count; ++p) {
    if (part_vertices[p] == 0) continue;
    if (part_vertices[p] != 2) return std::nullopt;
    const auto it = hopf_codes().find(canonical_code(extract_split_part(d, p)));
    if (it == hopf_codes().end()) return std::nullopt;
    ++c.hopf;
    if (it->second) ++c.hopf_positive;
  }
  return c;
}

// Sound rejection tests: anything they refuse is definitely not a split
// union of trivial circles and Hopf links.
std::optional<std::string> refute_part(const Diagram& part) {
  const LinkInvariants inv = link_invariants(part);
  int pairs = 0;
  for (int i = 0; i < inv.components; ++i) {
    int partners = 0;
    for (int j = 0; j < inv.components; ++j) {
      if (j == i || inv.linking_abs[i][j] == 0) continue;
      if (inv.linking_abs[i][j] >= 2) {
        return "a linking number has absolute value >= 2";
      }
      ++partners;
      if (j > i) ++pairs;
    }
    if (partners >= 2) {
      return "a component links more than one other component";
    }
  }
  const int h = pairs;
  const int t = inv.components - 2 * h;
  try {
    std::set<LaurentPolynomial> expect;
    const LaurentPolynomial base = bracket_delta().pow(h + t - 1);
    for (int i = 0; i <= h; ++i) {
      LaurentPolynomial v = base;
      int k = 0;
      for (const LaurentPolynomial& g : hopf_values()) {
        v = v * g.pow(k == 0 ? i : h - i);
        ++k;
      }
      expect.insert(v);
    }
    if (jones_set(part) != expect) {
      return "normalized bracket values do not match any split union of "
             "circles and Hopf links";
    }
  } catch (const CrossingBudgetError&) {
    // Too wide to evaluate; fall through to the search.
  }
  return std::nullopt;
}

const std::vector<int>& simplification_rules() {
  static const std::vector<int> rules =
      parse_rule_selector("omega1,omega2,omega3");
  return rules;
}

PartCertificate certify_part_uncached(const Diagram& part,
                                      const CertifyBudget& budget) {
  PartCertificate out;
  if (const auto acc = accept_state(part)) {
    out.verdict = Verdict::kCertified;
    out.trivial_count = acc->trivial;
    out.hopf_count = acc->hopf;
    out.hopf_positive_count = acc->hopf_positive;
    return out;
  }
  if (const auto reason = refute_part(part)) {
    out.verdict = Verdict::kRefuted;
    out.refutation = *reason;
    return out;
  }

  // Breadth-first simplification by the circle-level moves, allowing the
  // crossing count to rise slightly above the entry diagram.
  const int cap = part.vertex_count() + 2;
  struct Node {
    Diagram d;
    int parent;
    MoveStep step;
    int depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({part, -1, {}, 0});
  std::set<CanonicalCode> seen{canonical_code(part)};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= budget.depth) continue;
    // Indexed loop: nodes may reallocate while we expand.
    for (const int rule : simplification_rules()) {
      const MoveRule& r = move_table()[rule];
      for (const MoveDir dir : {MoveDir::kForward, MoveDir::kBackward}) {
        // Every child of this rule has exactly n + delta vertices, so a
        // whole direction can be skipped when all children would exceed the
        // cap anyway.
        const int delta = static_cast<int>(replacement_side(r, dir).kinds.size()) -
                          static_cast<int>(pattern_side(r, dir).kinds.size());
        if (nodes[head].d.vertex_count() + delta > cap) continue;
        std::vector<SiteExpansion> expansions =
            enumerate_expansions_structural(nodes[head].d, rule, dir);
        for (SiteExpansion& exp : expansions) {
          Diagram next = std::move(exp.result);
          if (next.vertex_count() > cap) continue;
          CanonicalCode code = canonical_code(next);
          if (!seen.insert(std::move(code)).second) continue;
          const MoveStep step{rule, dir, exp.site.index};
          if (const auto acc = accept_state(next)) {
            out.verdict = Verdict::kCertified;
            out.trivial_count = acc->trivial;
            out.hopf_count = acc->hopf;
            out.hopf_positive_count = acc->hopf_positive;
            std::vector<MoveStep> path{step};
            for (int at = static_cast<int>(head); at > 0; at = nodes[at].parent) {
              path.push_back(nodes[at].step);
            }
            out.witness.assign(path.rbegin(), path.rend());
            return out;
          }
          if (static_cast<int>(nodes.size()) >= budget.nodes) {
            out.verdict = Verdict::kUnknown;
            return out;
          }
          nodes.push_back({std::move(next), static_cast<int>(head), step,
                           nodes[head].depth + 1});
        }
      }
    }
  }
  out.verdict = Verdict::kUnknown;
  return out;
}

PartCertificate certify_part(const Diagram& part, const CertifyBudget& budget,
                             CertCache& cache) {
  const CanonicalCode code = canonical_code(part);
  const auto it = cache.parts.find(code);
  if (it != cache.parts.end()) return it->second;
  PartCertificate out = certify_part_uncached(part, budget);
  cache.parts.emplace(code, out);
  return out;
}

}  // namespace

Certificate certify_h_trivial(const Diagram& link, const CertifyBudget& budget,
                              CertCache* cache) {
  for (int v = 0; v < link.vertex_count(); ++v) {
    if (link.kind(v) == VertexKind::kMarked) {
      throw MgdError("certify_h_trivial expects a link diagram without marked "
                     "vertices");
    }
  }
  CertCache local;
  CertCache& c = cache != nullptr ? *cache : local;
  const SplitParts sp = split_parts(link);
  Certificate out;
  out.verdict = Verdict::kCertified;
  for (int p = 0; p < sp.count; ++p) {
    PartCertificate pc = certify_part(extract_split_part(link, p), budget, c);
    if (pc.verdict == Verdict::kRefuted && out.verdict != Verdict::kRefuted) {
      out.verdict = Verdict::kRefuted;
      out.refutation = "part " + std::to_string(p) + ": " + pc.refutation;
    } else if (pc.verdict == Verdict::kUnknown &&
               out.verdict == Verdict::kCertified) {
      out.verdict = Verdict::kUnknown;
    }
    out.trivial_count += pc.trivial_count;
    out.hopf_count += pc.hopf_count;
    out.parts.push_back(std::move(pc));
  }
  if (out.verdict != Verdict::kCertified) {
    out.trivial_count = 0;
    out.hopf_count = 0;
  }
  return out;
}

HAdmissibility h_admissible(const Diagram& d, const CertifyBudget& budget,
                            CertCache* cache) {
  CertCache local;
  CertCache* c = cache != nullptr ? cache : &local;
  HAdmissibility out;
  out.lower = certify_h_trivial(resolve(d, Side::kMinus).diagram, budget, c);
  out.upper = certify_h_trivial(resolve(d, Side::kPlus).diagram, budget, c);
  if (out.lower.verdict == Verdict::kRefuted ||
      out.upper.verdict == Verdict::kRefuted) {
    out.verdict = Verdict::kRefuted;
  } else if (out.lower.verdict == Verdict::kUnknown ||
             out.upper.verdict == Verdict::kUnknown) {
    out.verdict = Verdict::kUnknown;
  } else {
    out.verdict = Verdict::kCertified;
  }
  return out;
}

SingularReport singular_points(const Diagram& d, Side side,
                               const CertifyBudget& budget, CertCache* cache) {
  CertCache local;
  CertCache* c = cache != nullptr ? cache : &local;
  const HAdmissibility ha = h_admissible(d, budget, c);
  if (ha.verdict == Verdict::kRefuted) {
    throw NotHAdmissibleError("singular_points: diagram is not H-admissible");
  }
  SingularReport rep;
  rep.marks.assign(d.vertex_count(), SingularMark::kNo);
  rep.any_unknown = ha.verdict == Verdict::kUnknown;

  const Certificate& cert = side == Side::kPlus ? ha.upper : ha.lower;
  const Resolution rz = resolve(d, side);
  const Components comps = link_components(rz.diagram);
  const LinkInvariants inv = link_invariants(rz.diagram);
  const SplitParts sp = split_parts(rz.diagram);
  std::vector<int> part_rank(rz.diagram.vertex_count(), 0);
  {
    std::vector<int> counters(sp.count, 0);
    for (int v = 0; v < rz.diagram.vertex_count(); ++v) {
      part_rank[v] = counters[sp.of_vertex[v]]++;
    }
  }

  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.kind(v) != VertexKind::kCrossing) continue;
    const int cv = rz.crossing_vertex[v];
    const int c1 = comps.of_dart[Diagram::dart(cv, 0)];
    const int c2 = comps.of_dart[Diagram::dart(cv, 1)];
    if (c1 == c2 || inv.linking_abs[c1][c2] != 1) continue;  // stays kNo
    const int part = sp.of_vertex[cv];
    const PartCertificate& pc = cert.parts[part];
    if (pc.verdict == Verdict::kUnknown) {
      rep.marks[v] = SingularMark::kUnknown;
      rep.any_unknown = true;
      continue;
    }
    const Diagram changed =
        crossing_change(extract_split_part(rz.diagram, part), part_rank[cv]);
    const Certificate cc = certify_h_trivial(changed, budget, c);
    if (cc.verdict == Verdict::kUnknown) {
      rep.marks[v] = SingularMark::kUnknown;
      rep.any_unknown = true;
      continue;
    }
    if (cc.verdict == Verdict::kCertified &&
        cc.hopf_count == pc.hopf_count - 1 &&
        cc.trivial_count == pc.trivial_count + 2) {
      rep.marks[v] = SingularMark::kYes;
      rep.singular_vertices.push_back(v);
    }
  }
  return rep;
}

}  // namespace mgd
