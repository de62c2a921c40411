#include <algorithm>
#include <set>

#include "mgd/bracket.hpp"
#include "mgd/canonical.hpp"
#include "mgd/resolve.hpp"
#include "mgd/search.hpp"

namespace mgd {

namespace {

int euler_characteristic(const Diagram& d) {
  int marked = 0;
  for (int v = 0; v < d.vertex_count(); ++v) {
    if (d.kind(v) == VertexKind::kMarked) ++marked;
  }
  return link_components(resolve(d, Side::kMinus).diagram).count +
         link_components(resolve(d, Side::kPlus).diagram).count - marked;
}

std::pair<int, int> resolution_counts(const Diagram& d) {
  return {link_components(resolve(d, Side::kMinus).diagram).count,
          link_components(resolve(d, Side::kPlus).diagram).count};
}

std::vector<int> linking_multiset(const Diagram& d, Side side) {
  const LinkInvariants inv = link_invariants(resolve(d, side).diagram);
  std::vector<int> out;
  for (int i = 0; i < inv.components; ++i) {
    for (int j = i + 1; j < inv.components; ++j) {
      out.push_back(inv.linking_abs[i][j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

SearchResult search_equivalence(const Diagram& a, const Diagram& b,
                                const std::vector<int>& rules,
                                const SearchBudget& budget,
                                const SiteOptions& opts) {
  for (const int r : rules) {
    if (r < 0 || r >= static_cast<int>(move_table().size())) {
      throw MgdError("search: rule index out of range");
    }
  }
  const bool type3 = std::any_of(rules.begin(), rules.end(), [](int r) {
    return move_table()[r].type == MoveType::kTypeIII;
  });
  const bool type1_only = std::all_of(rules.begin(), rules.end(), [](int r) {
    return move_table()[r].type == MoveType::kTypeI;
  });

  CertCache local_cache;
  SiteOptions site_opts = opts;
  if (site_opts.cache == nullptr) site_opts.cache = &local_cache;

  SearchResult out;
  Distinguisher dist;
  dist.euler_a = euler_characteristic(a);
  dist.euler_b = euler_characteristic(b);

  if (type3) {
    const CertifyBudget cb{site_opts.cert_depth, site_opts.cert_nodes};
    const HAdmissibility ha = h_admissible(a, cb, site_opts.cache);
    const HAdmissibility hb = h_admissible(b, cb, site_opts.cache);
    if (ha.verdict == Verdict::kRefuted || hb.verdict == Verdict::kRefuted) {
      throw NotHAdmissibleError(
          "search: an endpoint is not H-admissible, so type-III moves do not "
          "apply");
    }
    if (ha.verdict == Verdict::kUnknown || hb.verdict == Verdict::kUnknown) {
      out.outcome = SearchOutcome::kPreconditionUnknown;
      return out;
    }
    dist.double_points_a = ha.lower.hopf_count + ha.upper.hopf_count;
    dist.double_points_b = hb.lower.hopf_count + hb.upper.hopf_count;
  }

  if (dist.euler_a != dist.euler_b) {
    dist.invariant = "euler_characteristic";
    out.outcome = SearchOutcome::kDistinguished;
    out.distinguisher = std::move(dist);
    return out;
  }
  if (type3 && dist.double_points_a != dist.double_points_b) {
    dist.invariant = "double_points";
    out.outcome = SearchOutcome::kDistinguished;
    out.distinguisher = std::move(dist);
    return out;
  }
  if (type1_only) {
    dist.resolution_counts_a = resolution_counts(a);
    dist.resolution_counts_b = resolution_counts(b);
    if (dist.resolution_counts_a != dist.resolution_counts_b) {
      dist.invariant = "resolution_counts";
      out.outcome = SearchOutcome::kDistinguished;
      out.distinguisher = std::move(dist);
      return out;
    }
    for (const Side side : {Side::kMinus, Side::kPlus}) {
      dist.linking_abs_a = linking_multiset(a, side);
      dist.linking_abs_b = linking_multiset(b, side);
      if (dist.linking_abs_a != dist.linking_abs_b) {
        dist.invariant = side == Side::kMinus ? "linking_numbers_minus"
                                              : "linking_numbers_plus";
        out.outcome = SearchOutcome::kDistinguished;
        out.distinguisher = std::move(dist);
        return out;
      }
    }
    try {
      dist.jones_minus_a = jones_set(resolve(a, Side::kMinus).diagram);
      dist.jones_minus_b = jones_set(resolve(b, Side::kMinus).diagram);
      dist.jones_plus_a = jones_set(resolve(a, Side::kPlus).diagram);
      dist.jones_plus_b = jones_set(resolve(b, Side::kPlus).diagram);
      if (dist.jones_minus_a != dist.jones_minus_b ||
          dist.jones_plus_a != dist.jones_plus_b) {
        dist.invariant = dist.jones_minus_a != dist.jones_minus_b
                             ? "jones_set_minus"
                             : "jones_set_plus";
        out.outcome = SearchOutcome::kDistinguished;
        out.distinguisher = std::move(dist);
        return out;
      }
    } catch (const CrossingBudgetError&) {
      // Too wide to evaluate; search anyway.
    }
  }

  const CanonicalCode target = canonical_code(b);
  if (canonical_code(a) == target) {
    out.outcome = SearchOutcome::kPath;
    return out;
  }

  struct Node {
    Diagram d;
    int parent;
    MoveStep step;
    int depth;
  };
  std::vector<Node> nodes;
  nodes.push_back({a, -1, {}, 0});
  std::set<CanonicalCode> seen{canonical_code(a)};
  for (std::size_t head = 0; head < nodes.size(); ++head) {
    if (nodes[head].depth >= budget.depth) continue;
    for (const int rule : rules) {
      for (const MoveDir dir : {MoveDir::kForward, MoveDir::kBackward}) {
        const std::vector<MoveSite> sites =
            enumerate_sites(nodes[head].d, rule, dir, site_opts);
        for (const MoveSite& site : sites) {
          Diagram next = apply_site_structural(nodes[head].d, site);
          CanonicalCode code = canonical_code(next);
          const MoveStep step{rule, dir, site.index};
          if (code == target) {
            std::vector<MoveStep> path{step};
            for (int at = static_cast<int>(head); at > 0; at = nodes[at].parent) {
              path.push_back(nodes[at].step);
            }
            out.path.assign(path.rbegin(), path.rend());
            out.outcome = SearchOutcome::kPath;
            out.depth_reached = nodes[head].depth + 1;
            return out;
          }
          if (!seen.insert(std::move(code)).second) continue;
          ++out.nodes_expanded;
          out.depth_reached = std::max(out.depth_reached, nodes[head].depth + 1);
          if (out.nodes_expanded >= budget.nodes) {
            out.outcome = SearchOutcome::kExhausted;
            return out;
          }
          nodes.push_back({std::move(next), static_cast<int>(head), step,
                           nodes[head].depth + 1});
        }
      }
    }
  }
  out.outcome = SearchOutcome::kExhausted;
  return out;
}

}  // namespace mgd
