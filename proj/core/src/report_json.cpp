#include "mgd/report_json.hpp"

namespace mgd {

namespace {

Json jones_values(const std::set<LaurentPolynomial>& values) {
  Json arr = Json::array();
  for (const LaurentPolynomial& p : values) arr.push_back(p.str());
  return arr;
}

Json part_to_json(const PartCertificate& p) {
  Json j;
  j["verdict"] = verdict_name(p.verdict);
  j["trivial_circles"] = p.trivial_count;
  j["hopf_links"] = p.hopf_count;
  j["hopf_positive"] = p.hopf_positive_count;
  if (!p.witness.empty()) j["witness"] = steps_to_json(p.witness);
  if (!p.refutation.empty()) j["refutation"] = p.refutation;
  return j;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kCertified:
      return "certified";
    case Verdict::kRefuted:
      return "refuted";
    case Verdict::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::string outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kPath:
      return "path";
    case SearchOutcome::kExhausted:
      return "exhausted";
    case SearchOutcome::kDistinguished:
      return "distinguished";
    case SearchOutcome::kPreconditionUnknown:
      return "precondition_unknown";
  }
  return "exhausted";
}

Json steps_to_json(const std::vector<MoveStep>& steps) {
  Json arr = Json::array();
  for (const MoveStep& s : steps) {
    Json j;
    j["rule"] = move_table()[s.rule].name;
    j["dir"] = s.dir == MoveDir::kForward ? "forward" : "backward";
    j["site"] = s.site_index;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json to_json(const ValidateReport& r) {
  Json j;
  j["planar"] = r.planar;
  j["vertices"] = r.vertices;
  j["crossings"] = r.crossings;
  j["marked_vertices"] = r.marked_vertices;
  j["edges"] = r.edges;
  j["faces"] = r.faces;
  j["free_loops"] = r.free_loops;
  j["split_parts"] = r.split_parts;
  j["component_genus"] = r.component_genus;
  j["has_orientation"] = r.has_orientation;
  if (r.has_orientation) j["orientation_consistent"] = r.orientation_consistent;
  return j;
}

Json to_json(const LinkInvariants& r) {
  Json j;
  j["components"] = r.components;
  j["split_parts"] = r.split_parts;
  j["writhe"] = r.writhe;
  j["linking_abs"] = r.linking_abs;
  j["linking_signed"] = r.linking_signed;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["verdict"] = verdict_name(c.verdict);
  if (c.verdict == Verdict::kCertified) {
    j["trivial_circles"] = c.trivial_count;
    j["hopf_links"] = c.hopf_count;
  }
  if (!c.refutation.empty()) j["refutation"] = c.refutation;
  Json parts = Json::array();
  for (const PartCertificate& p : c.parts) parts.push_back(part_to_json(p));
  j["parts"] = std::move(parts);
  return j;
}

Json to_json(const HAdmissibility& h) {
  Json j;
  j["verdict"] = verdict_name(h.verdict);
  j["lower"] = to_json(h.lower);
  j["upper"] = to_json(h.upper);
  return j;
}

Json to_json(const SingularReport& s) {
  Json j;
  Json marks = Json::array();
  for (const SingularMark m : s.marks) {
    marks.push_back(m == SingularMark::kYes
                        ? "yes"
                        : (m == SingularMark::kNo ? "no" : "unknown"));
  }
  j["marks"] = std::move(marks);
  j["singular_vertices"] = s.singular_vertices;
  j["any_unknown"] = s.any_unknown;
  return j;
}

Json to_json(const SurfaceResult& s) {
  Json j;
  switch (s.status) {
    case SurfaceStatus::kOk:
      j["status"] = "ok";
      break;
    case SurfaceStatus::kNotAdmissible:
      j["status"] = "not_admissible";
      break;
    case SurfaceStatus::kUnknown:
      j["status"] = "unknown";
      break;
  }
  if (s.status == SurfaceStatus::kOk) {
    Json r;
    r["euler_characteristic"] = s.report.euler_characteristic;
    r["double_points"] = s.report.double_points;
    r["trivial_minus"] = s.report.trivial_minus;
    r["hopf_minus"] = s.report.hopf_minus;
    r["trivial_plus"] = s.report.trivial_plus;
    r["hopf_plus"] = s.report.hopf_plus;
    r["orientable"] = s.report.orientable;
    r["admissible"] = s.report.admissible;
    j["report"] = std::move(r);
  }
  j["admissibility"] = to_json(s.admissibility);
  return j;
}

Json to_json(const MoveSite& site) {
  Json j;
  j["rule"] = move_table()[site.rule].name;
  j["dir"] = site.dir == MoveDir::kForward ? "forward" : "backward";
  j["site"] = site.index;
  if (!site.image.empty()) {
    j["image"] = site.image;
  }
  if (!site.arc_anchors.empty()) {
    Json anchors = Json::array();
    for (const ArcAnchor& a : site.arc_anchors) {
      Json aj;
      if (a.on_loop) {
        aj["loop"] = a.loop;
        aj["side"] = a.loop_side;
      } else {
        aj["dart"] = a.dart;
      }
      anchors.push_back(std::move(aj));
    }
    j["anchors"] = std::move(anchors);
  }
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["outcome"] = outcome_name(r.outcome);
  j["nodes_expanded"] = r.nodes_expanded;
  j["depth_reached"] = r.depth_reached;
  if (r.outcome == SearchOutcome::kPath) j["path"] = steps_to_json(r.path);
  if (r.distinguisher) {
    const Distinguisher& d = *r.distinguisher;
    Json dj;
    dj["invariant"] = d.invariant;
    dj["euler_characteristic"] = Json::array({d.euler_a, d.euler_b});
    if (d.double_points_a && d.double_points_b) {
      dj["double_points"] = Json::array({*d.double_points_a, *d.double_points_b});
    }
    if (d.resolution_counts_a && d.resolution_counts_b) {
      dj["resolution_counts"] = Json::array(
          {Json::array({d.resolution_counts_a->first,
                        d.resolution_counts_a->second}),
           Json::array({d.resolution_counts_b->first,
                        d.resolution_counts_b->second})});
    }
    if (!d.linking_abs_a.empty() || !d.linking_abs_b.empty()) {
      dj["linking_abs"] = Json::array({d.linking_abs_a, d.linking_abs_b});
    }
    if (!d.jones_minus_a.empty() || !d.jones_minus_b.empty()) {
      dj["jones_minus"] =
          Json::array({jones_values(d.jones_minus_a), jones_values(d.jones_minus_b)});
      dj["jones_plus"] =
          Json::array({jones_values(d.jones_plus_a), jones_values(d.jones_plus_b)});
    }
    j["distinguisher"] = std::move(dj);
  }
  return j;
}

}  // namespace mgd
