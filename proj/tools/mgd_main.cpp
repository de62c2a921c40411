// mgd: command-line front end for the marked-graph-diagram calculus.
//
// Exit codes: 0 definite answer (including refutations), 2 undecided within
// budget, 1 error (bad input, non-planar diagram, failed side condition).

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "mgd/bracket.hpp"
#include "mgd/canonical.hpp"
#include "mgd/certify.hpp"
#include "mgd/moves.hpp"
#include "mgd/report_json.hpp"
#include "mgd/resolve.hpp"
#include "mgd/search.hpp"
#include "mgd/surface.hpp"
#include "mgd/text_format.hpp"
#include "mgd/validate.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

mgd::Diagram load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mgd::MgdError("cannot read file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return mgd::parse(buf.str());
}

void emit(const mgd::Json& j) { std::cout << j.dump(2) << "\n"; }

mgd::Side parse_side(const std::string& s) {
  if (s == "minus") return mgd::Side::kMinus;
  if (s == "plus") return mgd::Side::kPlus;
  throw mgd::MgdError("--side must be minus or plus");
}

std::string plural(int n, const char* one, const char* many) {
  return std::to_string(n) + " " + (n == 1 ? one : many);
}

struct CommonOpts {
  std::string format = "json";
  int budget_depth = 8;
  int budget_nodes = 20000;
};

void add_format(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
}

void add_budget(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--budget-depth", o.budget_depth, "Certification move depth")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--budget-nodes", o.budget_nodes, "Certification node budget")
      ->check(CLI::PositiveNumber);
}

int run_validate(const std::string& path, const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  const mgd::ValidateReport r = mgd::validate(d);
  if (o.format == "json") {
    emit(mgd::to_json(r));
  } else if (r.planar) {
    std::cout << "planar, " << plural(r.vertices, "vertex", "vertices") << ", "
              << plural(r.edges, "edge", "edges") << ", "
              << plural(r.faces, "face", "faces") << ", "
              << plural(r.free_loops, "free loop", "free loops") << "\n";
  } else {
    std::cout << "non-planar, component genus [";
    for (std::size_t i = 0; i < r.component_genus.size(); ++i) {
      std::cout << (i ? ", " : "") << r.component_genus[i];
    }
    std::cout << "]\n";
  }
  const bool ok = r.planar && (!r.has_orientation || r.orientation_consistent);
  return ok ? kExitOk : kExitError;
}

int run_resolve(const std::string& path, const std::string& side_name,
                const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const mgd::Side side = parse_side(side_name);
  const mgd::Resolution rz = mgd::resolve(d, side);
  const std::string text = mgd::serialize(rz.diagram);
  if (o.format == "json") {
    mgd::Json j;
    j["side"] = side_name;
    j["diagram"] = text;
    j["components"] = mgd::link_components(rz.diagram).count;
    emit(j);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int run_invariants(const std::string& path, const std::string& side_name,
                   const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const mgd::Side side = parse_side(side_name);
  const mgd::Diagram link = mgd::resolve(d, side).diagram;
  const mgd::LinkInvariants inv = mgd::link_invariants(link);
  const mgd::LaurentPolynomial bracket = mgd::kauffman_bracket(link);
  const mgd::LaurentPolynomial jones = mgd::jones(link);
  const std::set<mgd::LaurentPolynomial> jset = mgd::jones_set(link);
  if (o.format == "json") {
    mgd::Json j = mgd::to_json(inv);
    j["bracket"] = bracket.str();
    j["jones"] = jones.str();
    mgd::Json arr = mgd::Json::array();
    for (const auto& p : jset) arr.push_back(p.str());
    j["jones_set"] = std::move(arr);
    emit(j);
  } else {
    std::cout << "components: " << inv.components << "\n"
              << "writhe: " << inv.writhe << "\n"
              << "bracket: " << bracket.str() << "\n"
              << "jones: " << jones.str() << "\n";
    std::cout << "jones_set:";
    for (const auto& p : jset) std::cout << " " << p.str();
    std::cout << "\n";
  }
  return kExitOk;
}

int run_certify(const std::string& path, bool singular, const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const mgd::CertifyBudget budget{o.budget_depth, o.budget_nodes};
  mgd::CertCache cache;
  const mgd::HAdmissibility ha = mgd::h_admissible(d, budget, &cache);

  mgd::Json j;
  j["minus"] = mgd::to_json(ha.lower);
  j["plus"] = mgd::to_json(ha.upper);
  bool unknown = ha.verdict == mgd::Verdict::kUnknown;
  if (unknown) {
    j["h_admissible"] = nullptr;
    j["admissible"] = nullptr;
  } else {
    const bool adm = ha.verdict == mgd::Verdict::kCertified;
    j["h_admissible"] = adm;
    j["admissible"] =
        adm && ha.lower.hopf_count + ha.upper.hopf_count == 0;
  }
  if (singular && ha.verdict != mgd::Verdict::kRefuted) {
    const mgd::SingularReport lo =
        mgd::singular_points(d, mgd::Side::kMinus, budget, &cache);
    const mgd::SingularReport hi =
        mgd::singular_points(d, mgd::Side::kPlus, budget, &cache);
    j["singular_minus"] = mgd::to_json(lo);
    j["singular_plus"] = mgd::to_json(hi);
    unknown = unknown || lo.any_unknown || hi.any_unknown;
  }

  if (o.format == "json") {
    emit(j);
  } else {
    std::cout << "h-admissible: "
              << (ha.verdict == mgd::Verdict::kCertified
                      ? "yes"
                      : (ha.verdict == mgd::Verdict::kRefuted ? "no" : "unknown"))
              << "\n";
    if (ha.verdict == mgd::Verdict::kCertified) {
      std::cout << "lower: " << ha.lower.trivial_count << " circles, "
                << ha.lower.hopf_count << " hopf\n"
                << "upper: " << ha.upper.trivial_count << " circles, "
                << ha.upper.hopf_count << " hopf\n";
    }
  }
  return unknown ? kExitUnknown : kExitOk;
}

int run_surface(const std::string& path, const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const mgd::CertifyBudget budget{o.budget_depth, o.budget_nodes};
  const mgd::SurfaceResult s = mgd::surface_report(d, budget);
  if (o.format == "json") {
    emit(mgd::to_json(s));
  } else {
    switch (s.status) {
      case mgd::SurfaceStatus::kOk:
        std::cout << "status: ok\n"
                  << "euler_characteristic: " << s.report.euler_characteristic
                  << "\n"
                  << "double_points: " << s.report.double_points << "\n"
                  << "orientable: " << (s.report.orientable ? "yes" : "no")
                  << "\n"
                  << "admissible: " << (s.report.admissible ? "yes" : "no")
                  << "\n";
        break;
      case mgd::SurfaceStatus::kNotAdmissible:
        std::cout << "status: not_admissible\n";
        break;
      case mgd::SurfaceStatus::kUnknown:
        std::cout << "status: unknown\n";
        break;
    }
  }
  return s.status == mgd::SurfaceStatus::kUnknown ? kExitUnknown : kExitOk;
}

int run_sites(const std::string& path, const std::string& selector,
              const std::string& dir_name, const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const std::vector<int> rules = mgd::parse_rule_selector(selector);
  std::vector<mgd::MoveDir> dirs;
  if (dir_name == "forward" || dir_name == "both") {
    dirs.push_back(mgd::MoveDir::kForward);
  }
  if (dir_name == "backward" || dir_name == "both") {
    dirs.push_back(mgd::MoveDir::kBackward);
  }
  if (dirs.empty()) throw mgd::MgdError("--dir must be forward, backward, or both");

  mgd::CertCache cache;
  mgd::SiteOptions opts;
  opts.cert_depth = o.budget_depth;
  opts.cert_nodes = o.budget_nodes;
  opts.cache = &cache;

  mgd::Json arr = mgd::Json::array();
  int count = 0;
  for (const int rule : rules) {
    for (const mgd::MoveDir dir : dirs) {
      for (const mgd::MoveSite& s : mgd::enumerate_sites(d, rule, dir, opts)) {
        arr.push_back(mgd::to_json(s));
        ++count;
        if (o.format == "text") {
          std::cout << mgd::move_table()[s.rule].name << " "
                    << (s.dir == mgd::MoveDir::kForward ? "forward" : "backward")
                    << " " << s.index << "\n";
        }
      }
    }
  }
  if (o.format == "json") {
    mgd::Json j;
    j["count"] = count;
    j["sites"] = std::move(arr);
    emit(j);
  }
  return kExitOk;
}

int run_move(const std::string& path, const std::string& rule_name, int site,
             const std::string& dir_name, const CommonOpts& o) {
  const mgd::Diagram d = load(path);
  mgd::validate_or_throw(d);
  const auto rule = mgd::rule_index(rule_name);
  if (!rule) throw mgd::MgdError("unknown rule: " + rule_name);
  if (dir_name != "forward" && dir_name != "backward") {
    throw mgd::MgdError("--dir must be forward or backward");
  }
  mgd::CertCache cache;
  mgd::SiteOptions opts;
  opts.cert_depth = o.budget_depth;
  opts.cert_nodes = o.budget_nodes;
  opts.cache = &cache;

  mgd::MoveSite s;
  s.rule = *rule;
  s.dir = dir_name == "forward" ? mgd::MoveDir::kForward : mgd::MoveDir::kBackward;
  s.index = site;
  const mgd::Diagram result = mgd::apply_move(d, s, opts);
  const std::string text = mgd::serialize(result);
  if (o.format == "json") {
    mgd::Json j;
    j["rule"] = mgd::move_table()[*rule].name;
    j["dir"] = dir_name;
    j["site"] = site;
    j["diagram"] = text;
    emit(j);
  } else {
    std::cout << text;
  }
  return kExitOk;
}

int run_search(const std::string& path_a, const std::string& path_b,
               const std::string& selector, int depth, long long nodes,
               const CommonOpts& o) {
  const mgd::Diagram a = load(path_a);
  const mgd::Diagram b = load(path_b);
  mgd::validate_or_throw(a);
  mgd::validate_or_throw(b);
  const std::vector<int> rules = mgd::parse_rule_selector(selector);
  mgd::CertCache cache;
  mgd::SiteOptions opts;
  opts.cert_depth = o.budget_depth;
  opts.cert_nodes = o.budget_nodes;
  opts.cache = &cache;
  mgd::SearchBudget budget;
  budget.depth = depth;
  budget.nodes = nodes;
  const mgd::SearchResult r = mgd::search_equivalence(a, b, rules, budget, opts);
  if (o.format == "json") {
    emit(mgd::to_json(r));
  } else {
    std::cout << "outcome: " << mgd::outcome_name(r.outcome) << "\n";
    if (r.outcome == mgd::SearchOutcome::kPath) {
      std::cout << "steps: " << r.path.size() << "\n";
      for (const mgd::MoveStep& st : r.path) {
        std::cout << "  " << mgd::move_table()[st.rule].name << " "
                  << (st.dir == mgd::MoveDir::kForward ? "forward" : "backward")
                  << " " << st.site_index << "\n";
      }
    }
    if (r.distinguisher) {
      std::cout << "invariant: " << r.distinguisher->invariant << "\n";
    }
  }
  switch (r.outcome) {
    case mgd::SearchOutcome::kPath:
    case mgd::SearchOutcome::kDistinguished:
      return kExitOk;
    case mgd::SearchOutcome::kExhausted:
    case mgd::SearchOutcome::kPreconditionUnknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"marked-graph diagram calculus for immersed surface-links"};
  app.require_subcommand(1);

  CommonOpts o;
  std::string file, file_b, side = "minus", rules = "all", dir = "both";
  std::string move_dir = "forward";
  bool singular = false;
  int site = 0, depth = 8;
  long long nodes = 200000;

  CLI::App* validate = app.add_subcommand("validate", "Check planarity and report");
  validate->add_option("file", file)->required();
  add_format(validate, o);

  CLI::App* resolve = app.add_subcommand("resolve", "Smooth markers to one side");
  resolve->add_option("file", file)->required();
  resolve->add_option("--side", side, "minus or plus");
  add_format(resolve, o);

  CLI::App* invariants =
      app.add_subcommand("invariants", "Link invariants of a resolution");
  invariants->add_option("file", file)->required();
  invariants->add_option("--side", side, "minus or plus");
  add_format(invariants, o);

  CLI::App* certify = app.add_subcommand("certify", "H-admissibility certificate");
  certify->add_option("file", file)->required();
  certify->add_flag("--singular", singular, "Also classify singular points");
  add_budget(certify, o);
  add_format(certify, o);

  CLI::App* surface = app.add_subcommand("surface", "Surface invariants");
  surface->add_option("file", file)->required();
  add_budget(surface, o);
  add_format(surface, o);

  CLI::App* sites = app.add_subcommand("sites", "List applicable move sites");
  sites->add_option("file", file)->required();
  sites->add_option("--rules", rules, "Rule selector");
  sites->add_option("--dir", dir, "forward, backward, or both");
  add_budget(sites, o);
  add_format(sites, o);

  CLI::App* move = app.add_subcommand("move", "Apply one move by site index");
  move->add_option("file", file)->required();
  move->add_option("--rule", rules, "Rule name")->required();
  move->add_option("--site", site, "Site index")->required();
  move->add_option("--dir", move_dir, "forward or backward");
  add_budget(move, o);
  add_format(move, o);

  CLI::App* search = app.add_subcommand("search", "Bounded equivalence search");
  search->add_option("a", file)->required();
  search->add_option("b", file_b)->required();
  search->add_option("--rules", rules, "Rule selector");
  search->add_option("--depth", depth, "Search depth")->check(CLI::NonNegativeNumber);
  search->add_option("--nodes", nodes, "Search node budget")
      ->check(CLI::PositiveNumber);
  add_budget(search, o);
  add_format(search, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (validate->parsed()) return run_validate(file, o);
    if (resolve->parsed()) return run_resolve(file, side, o);
    if (invariants->parsed()) return run_invariants(file, side, o);
    if (certify->parsed()) return run_certify(file, singular, o);
    if (surface->parsed()) return run_surface(file, o);
    if (sites->parsed()) return run_sites(file, rules, dir, o);
    if (move->parsed()) return run_move(file, rules, site, move_dir, o);
    if (search->parsed()) return run_search(file, file_b, rules, depth, nodes, o);
  } catch (const mgd::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const mgd::NonPlanarError& e) {
    std::cerr << "non-planar: " << e.what() << "\n";
    return kExitError;
  } catch (const mgd::SideConditionError& e) {
    std::cerr << "side condition: " << e.what() << "\n";
    return e.unknown ? kExitUnknown : kExitError;
  } catch (const mgd::MgdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
