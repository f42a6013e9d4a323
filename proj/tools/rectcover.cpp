#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rectcover/builder.hpp"
#include "rectcover/instances.hpp"
#include "rectcover/io.hpp"
#include "rectcover/solver.hpp"

namespace rc = rectcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;
constexpr int kExitLimit = 3;

rc::CoverTarget parse_target(const std::string& s) {
  if (s == "boundary") return rc::CoverTarget::Boundary;
  if (s == "corner") return rc::CoverTarget::Corner;
  if (s == "interior") return rc::CoverTarget::Interior;
  rc::fail(rc::ErrorCode::ParseError, "unknown target " + s);
}

rc::PolygonFile to_polygon_file(const rc::SimplePolygon& poly, const rc::RectFamily* fam,
                                const std::map<std::string, int64_t>& expected) {
  rc::PolygonFile f;
  for (const rc::Point& p : poly.vertices()) f.vertices.push_back(rc::Point{p.x / 2, p.y / 2});
  if (fam)
    for (const rc::Rect& r : fam->rects)
      f.rects.push_back(rc::Rect{r.x1 / 2, r.y1 / 2, r.x2 / 2, r.y2 / 2});
  f.expected = expected;
  return f;
}

int cmd_enumerate(const std::string& input) {
  rc::PolygonFile f = rc::load_polygon_file(input);
  rc::SimplePolygon poly = rc::polygon_of(f);
  rc::RectFamily fam = rc::enumerate_maximal(poly);
  for (const rc::Rect& r : fam.rects)
    std::cout << "[" << r.x1 / 2 << "," << r.y1 / 2 << "," << r.x2 / 2 << "," << r.y2 / 2
              << "]\n";
  std::cout << "count " << fam.size() << "\n";
  return kExitOk;
}

int cmd_support(const std::string& input, const std::vector<size_t>& subset, bool family_rects,
                bool verify, bool check_planar, const std::string& out,
                const std::string& dot_out, bool verbose) {
  rc::PolygonFile f = rc::load_polygon_file(input);
  rc::SimplePolygon poly = rc::polygon_of(f);
  rc::RectFamily rk = rc::enumerate_maximal(poly);
  rc::BuilderLog log;
  rc::SupportGraph g;
  rc::RectFamily fam;
  if (family_rects) {
    fam = rc::family_of(f);
    g = rc::subfamily_support(poly, fam, &log);
  } else if (!subset.empty()) {
    for (size_t i : subset) {
      if (i >= rk.size()) rc::fail(rc::ErrorCode::ParseError, "subset index out of range");
      fam.rects.push_back(rk[i]);
    }
    g = rc::subfamily_support(poly, fam, &log);
  } else {
    fam = rk;
    g = rc::build_complete_support(poly, &log);
  }
  if (verbose)
    for (const auto& e : log.entries) std::cerr << "note: " << e << "\n";
  rc::GraphFile gf = rc::to_graph_file(g);
  std::string text = rc::serialize_graph_file(gf);
  if (out.empty())
    std::cout << text;
  else
    rc::write_file(out, text);
  if (!dot_out.empty()) rc::write_file(dot_out, rc::graph_to_dot(gf));
  int rcode = kExitOk;
  if (verify) {
    auto viol = rc::verify_support(poly, fam, g, rc::CoverTarget::Boundary);
    if (!viol.empty()) {
      std::cerr << "support verification failed at " << viol.size() << " witnesses\n";
      rcode = kExitVerifyFail;
    }
  }
  if (check_planar && !rc::lr_planarity(g).planar) {
    std::cerr << "graph is not planar\n";
    rcode = kExitVerifyFail;
  }
  return rcode;
}

int cmd_cover(const std::string& input, const std::string& target_s, int k, bool exact,
              uint64_t limit) {
  rc::PolygonFile f = rc::load_polygon_file(input);
  rc::SimplePolygon poly = rc::polygon_of(f);
  rc::CoverTarget target = parse_target(target_s);
  rc::RectFamily rk = rc::enumerate_maximal(poly);
  nlohmann::ordered_json report;
  report["target"] = target_s;
  report["family_size"] = rk.size();
  bool limit_hit = false;
  std::optional<size_t> exact_size, local_size;
  if (exact) {
    rc::ExactCoverResult r = rc::exact_cover(poly, target, limit);
    report["exact"]["size"] = r.solution.chosen.size();
    report["exact"]["optimal"] = r.exact;
    report["exact"]["nodes"] = r.nodes;
    nlohmann::ordered_json ch = nlohmann::ordered_json::array();
    for (size_t i : r.solution.chosen)
      ch.push_back({rk[i].x1 / 2, rk[i].y1 / 2, rk[i].x2 / 2, rk[i].y2 / 2});
    report["exact"]["rects"] = ch;
    exact_size = r.solution.chosen.size();
    limit_hit = !r.exact;
  }
  if (k > 0) {
    rc::CoverSolution s = rc::local_search_cover(poly, target, k);
    report["local_search"]["k"] = k;
    report["local_search"]["size"] = s.chosen.size();
    report["local_search"]["iterations"] = s.iterations;
    nlohmann::ordered_json ch = nlohmann::ordered_json::array();
    for (size_t i : s.chosen)
      ch.push_back({rk[i].x1 / 2, rk[i].y1 / 2, rk[i].x2 / 2, rk[i].y2 / 2});
    report["local_search"]["rects"] = ch;
    local_size = s.chosen.size();
  }
  if (exact_size && local_size && *exact_size > 0)
    report["ratio"] = static_cast<double>(*local_size) / static_cast<double>(*exact_size);
  std::cout << report.dump(2) << "\n";
  return limit_hit ? kExitLimit : kExitOk;
}

int cmd_gen(const std::string& family, int kb, int r, int s, int n, int grid, uint64_t seed,
            const std::string& out) {
  rc::PolygonFile f;
  if (family == "beta") {
    rc::InstanceBundle b = rc::gen_beta(kb);
    f = to_polygon_file(b.polygon, b.family ? &*b.family : nullptr, b.expected);
  } else if (family == "biclique") {
    rc::InstanceBundle b = rc::gen_biclique_boundary();
    f = to_polygon_file(b.polygon, b.family ? &*b.family : nullptr, b.expected);
  } else if (family == "interior-biclique") {
    rc::InstanceBundle b = rc::gen_interior_biclique(r);
    f = to_polygon_file(b.polygon, b.family ? &*b.family : nullptr, b.expected);
  } else if (family == "antirectangle") {
    rc::InstanceBundle b = rc::gen_antirectangle(r, s);
    f = to_polygon_file(b.polygon, nullptr, b.expected);
  } else if (family == "random") {
    rc::SimplePolygon poly = rc::gen_random(n, grid, seed);
    f = to_polygon_file(poly, nullptr, {});
  } else {
    rc::fail(rc::ErrorCode::ParseError, "unknown family " + family);
  }
  std::string text = rc::serialize_polygon_file(f);
  if (out.empty())
    std::cout << text;
  else
    rc::write_file(out, text);
  return kExitOk;
}

int cmd_render(const std::string& input, const std::vector<std::string>& overlays,
               const std::string& target_s, const std::string& out) {
  rc::PolygonFile f = rc::load_polygon_file(input);
  rc::SimplePolygon poly = rc::polygon_of(f);
  rc::RectFamily fam = f.rects.empty() ? rc::enumerate_maximal(poly) : rc::family_of(f);
  rc::RenderOptions opt;
  rc::SupportGraph g;
  for (const std::string& o : overlays) {
    if (o == "family") {
      opt.family = true;
    } else if (o == "cover") {
      rc::CoverTarget target = parse_target(target_s);
      rc::ExactCoverResult rres = rc::exact_cover(poly, target, 2'000'000);
      // The cover indexes the complete family; render against it.
      fam = rc::enumerate_maximal(poly);
      opt.cover = rres.solution.chosen;
    } else if (o == "support") {
      g = rc::subfamily_support(poly, fam);
      opt.support = &g;
      opt.family = true;
    } else if (o == "witnesses") {
      opt.witnesses = true;
      opt.witness_target = parse_target(target_s);
    } else {
      rc::fail(rc::ErrorCode::ParseError, "unknown overlay " + o);
    }
  }
  std::string svg = rc::render_svg(poly, fam, opt);
  if (out.empty())
    std::cout << svg;
  else
    rc::write_file(out, svg);
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& graph_path,
               const std::string& target_s) {
  rc::PolygonFile f = rc::load_polygon_file(input);
  rc::SimplePolygon poly = rc::polygon_of(f);
  rc::GraphFile gf = rc::load_graph_file(graph_path);
  rc::SupportGraph g = rc::to_support_graph(gf);
  // Family: the file's explicit rects when they match the graph, else the
  // complete family.
  rc::RectFamily fam = rc::family_of(f);
  if (fam.size() != g.n) fam = rc::enumerate_maximal(poly);
  if (g.n != fam.size()) {
    std::cerr << "graph has " << g.n << " vertices but the family has " << fam.size() << "\n";
    return kExitInputError;
  }
  auto viol = rc::verify_support(poly, fam, g, parse_target(target_s));
  bool planar = rc::lr_planarity(g).planar;
  bool outer_ok = g.outer.empty() || rc::planar_with_face(g, g.outer);
  std::cout << "support " << (viol.empty() ? "ok" : "FAIL") << "\n";
  std::cout << "planar " << (planar ? "ok" : "FAIL") << "\n";
  if (!g.outer.empty()) std::cout << "outer-face " << (outer_ok ? "ok" : "FAIL") << "\n";
  return (viol.empty() && planar && outer_ok) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"covering simple orthogonal polygons with maximal rectangles"};
  app.require_subcommand(1);

  uint64_t default_seed = 12345;
  if (const char* env = std::getenv("RECTCOVER_SEED")) default_seed = std::strtoull(env, nullptr, 10);

  std::string input, out, dot_out, graph_path;
  std::string target_s = "boundary";
  std::vector<size_t> subset;
  bool family_rects = false, verify = false, check_planar = false, exact = false, verbose = false;
  int k = 0, kb = 2, rr = 3, ss = 3, n = 8, grid = 10;
  uint64_t seed = default_seed;
  uint64_t limit = 5'000'000;
  std::string family = "random";
  std::vector<std::string> overlays;

  auto* enumerate = app.add_subcommand("enumerate", "list all maximal rectangles");
  enumerate->add_option("input", input)->required();

  auto* support = app.add_subcommand("support", "build a planar support graph");
  support->add_option("input", input)->required();
  support->add_option("--subset", subset, "indices into the canonical family");
  support->add_flag("--family-rects", family_rects, "use the file's rects as the subfamily");
  support->add_flag("--verify", verify);
  support->add_flag("--check-planar", check_planar);
  support->add_flag("-v,--verbose", verbose);
  support->add_option("--out", out);
  support->add_option("--dot", dot_out);

  auto* cover = app.add_subcommand("cover", "boundary/corner/interior covering");
  cover->add_option("input", input)->required();
  cover->add_option("--target", target_s)->check(CLI::IsMember({"boundary", "corner", "interior"}));
  cover->add_option("--k", k, "local search parameter (<=5)")->check(CLI::Range(0, 5));
  cover->add_flag("--exact", exact);
  cover->add_option("--limit", limit);

  auto* gen = app.add_subcommand("gen", "generate instance files");
  gen->add_option("--family", family)
      ->check(CLI::IsMember({"beta", "biclique", "interior-biclique", "antirectangle", "random"}));
  gen->add_option("--kb", kb);
  gen->add_option("--r", rr);
  gen->add_option("--s", ss);
  gen->add_option("--n", n);
  gen->add_option("--grid", grid);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out);

  auto* render = app.add_subcommand("render", "render polygon/family/cover/support to SVG");
  render->add_option("input", input)->required();
  render->add_option("--overlay", overlays)
      ->check(CLI::IsMember({"family", "cover", "support", "witnesses"}));
  render->add_option("--target", target_s);
  render->add_option("--out", out);

  auto* verifyc = app.add_subcommand("verify", "check a support graph file");
  verifyc->add_option("input", input)->required();
  verifyc->add_option("--graph", graph_path)->required();
  verifyc->add_option("--target", target_s);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) return cmd_enumerate(input);
    if (support->parsed())
      return cmd_support(input, subset, family_rects, verify, check_planar, out, dot_out, verbose);
    if (cover->parsed()) return cmd_cover(input, target_s, k, exact, limit);
    if (gen->parsed()) return cmd_gen(family, kb, rr, ss, n, grid, seed, out);
    if (render->parsed()) return cmd_render(input, overlays, target_s, out);
    if (verifyc->parsed()) return cmd_verify(input, graph_path, target_s);
  } catch (const rc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
