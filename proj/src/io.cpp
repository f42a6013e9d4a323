#include "rectcover/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rectcover {

using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << content;
}

PolygonFile parse_polygon_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  PolygonFile f;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    fail(ErrorCode::ParseError, "missing \"vertices\" array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
      fail(ErrorCode::ParseError, "vertex must be [x,y] with integers");
    f.vertices.push_back(Point{v[0].get<int64_t>(), v[1].get<int64_t>()});
  }
  if (j.contains("rects")) {
    if (!j["rects"].is_array()) fail(ErrorCode::ParseError, "\"rects\" must be an array");
    for (const auto& r : j["rects"]) {
      if (!r.is_array() || r.size() != 4) fail(ErrorCode::ParseError, "rect must be [x1,y1,x2,y2]");
      f.rects.push_back(Rect{r[0].get<int64_t>(), r[1].get<int64_t>(), r[2].get<int64_t>(),
                             r[3].get<int64_t>()});
    }
  }
  if (j.contains("expected")) {
    for (auto it = j["expected"].begin(); it != j["expected"].end(); ++it)
      f.expected[it.key()] = it.value().get<int64_t>();
  }
  return f;
}

PolygonFile load_polygon_file(const std::string& path) { return parse_polygon_file(read_file(path)); }

std::string serialize_polygon_file(const PolygonFile& f) {
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const Point& p : f.vertices) j["vertices"].push_back({p.x, p.y});
  if (!f.rects.empty()) {
    j["rects"] = ordered_json::array();
    for (const Rect& r : f.rects) j["rects"].push_back({r.x1, r.y1, r.x2, r.y2});
  }
  if (!f.expected.empty()) {
    j["expected"] = ordered_json::object();
    for (const auto& [k, v] : f.expected) j["expected"][k] = v;
  }
  return j.dump(2) + "\n";
}

SimplePolygon polygon_of(const PolygonFile& f) {
  return polygon_from_vertices(std::span<const Point>(f.vertices.data(), f.vertices.size()));
}

RectFamily family_of(const PolygonFile& f) {
  RectFamily fam;
  for (const Rect& r : f.rects) fam.rects.push_back(Rect::of(r.x1, r.y1, r.x2, r.y2));
  return fam;
}

GraphFile parse_graph_file(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
  }
  GraphFile f;
  if (!j.contains("n")) fail(ErrorCode::ParseError, "missing \"n\"");
  f.n = j["n"].get<size_t>();
  if (j.contains("edges"))
    for (const auto& e : j["edges"]) {
      size_t a = e[0].get<size_t>(), b = e[1].get<size_t>();
      if (a >= f.n || b >= f.n || a == b) fail(ErrorCode::ParseError, "edge index out of range");
      if (a > b) std::swap(a, b);
      f.edges.push_back({a, b});
    }
  if (j.contains("outer"))
    for (const auto& v : j["outer"]) {
      size_t x = v.get<size_t>();
      if (x >= f.n) fail(ErrorCode::ParseError, "outer index out of range");
      f.outer.push_back(x);
    }
  std::sort(f.edges.begin(), f.edges.end());
  f.edges.erase(std::unique(f.edges.begin(), f.edges.end()), f.edges.end());
  return f;
}

GraphFile load_graph_file(const std::string& path) { return parse_graph_file(read_file(path)); }

std::string serialize_graph_file(const GraphFile& f) {
  ordered_json j;
  j["n"] = f.n;
  j["edges"] = ordered_json::array();
  for (const auto& [a, b] : f.edges) j["edges"].push_back({a, b});
  j["outer"] = f.outer;
  return j.dump(2) + "\n";
}

std::string graph_to_dot(const GraphFile& f) {
  std::ostringstream os;
  os << "graph support {\n";
  for (size_t i = 0; i < f.n; ++i) os << "  r" << i << ";\n";
  for (const auto& [a, b] : f.edges) os << "  r" << a << " -- r" << b << ";\n";
  os << "}\n";
  return os.str();
}

GraphFile to_graph_file(const SupportGraph& g) {
  GraphFile f;
  f.n = g.n;
  f.edges.assign(g.edges.begin(), g.edges.end());
  f.outer = g.outer;
  return f;
}

SupportGraph to_support_graph(const GraphFile& f) {
  SupportGraph g(f.n);
  for (const auto& [a, b] : f.edges) g.add_edge(a, b);
  g.outer = f.outer;
  return g;
}

namespace {

const char* kPalette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                          "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62"};

}  // namespace

std::string render_svg(const SimplePolygon& poly, const RectFamily& fam,
                       const RenderOptions& opt) {
  // All coordinates are emitted on the doubled grid (integers); the viewBox
  // flips y so the drawing matches the mathematical orientation.
  Rect bb = poly.bbox();
  int64_t pad = 4;
  int64_t x0 = bb.x1 - pad, y0 = bb.y1 - pad;
  int64_t w = bb.width() + 2 * pad, h = bb.height() + 2 * pad;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -(y0 + h) << " "
     << w << " " << h << "\" width=\"" << 24 * w << "\" height=\"" << 24 * h << "\">\n";
  os << "<g transform=\"scale(1,-1)\">\n";
  auto rect_elem = [&](const Rect& r, const std::string& fill, const std::string& extra) {
    os << "<rect x=\"" << r.x1 << "\" y=\"" << r.y1 << "\" width=\"" << r.width()
       << "\" height=\"" << r.height() << "\" fill=\"" << fill << "\" " << extra << "/>\n";
  };
  if (opt.family) {
    for (size_t i = 0; i < fam.size(); ++i)
      rect_elem(fam[i], kPalette[i % 10], "fill-opacity=\"0.18\" stroke=\"none\"");
  }
  for (size_t i : opt.cover)
    rect_elem(fam[i], kPalette[i % 10],
              "fill-opacity=\"0.30\" stroke=\"" + std::string(kPalette[i % 10]) +
                  "\" stroke-width=\"0.4\"");
  // Boundary on top, thick.
  os << "<path d=\"";
  const auto& vs = poly.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    os << (i == 0 ? "M" : "L") << vs[i].x << " " << vs[i].y << " ";
  os << "Z\" fill=\"none\" stroke=\"black\" stroke-width=\"0.8\"/>\n";
  if (opt.support) {
    for (const auto& [a, b] : opt.support->edges) {
      Point pa = fam[a].center(), pb = fam[b].center();
      os << "<line x1=\"" << pa.x << "\" y1=\"" << pa.y << "\" x2=\"" << pb.x << "\" y2=\""
         << pb.y << "\" stroke=\"#222222\" stroke-width=\"0.3\"/>\n";
    }
    for (size_t i = 0; i < fam.size(); ++i) {
      Point c = fam[i].center();
      os << "<circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"0.8\" fill=\""
         << kPalette[i % 10] << "\"/>\n";
    }
  }
  if (opt.witnesses) {
    WitnessSet ws = witness_points(poly, fam, opt.witness_target);
    for (const Point& p : ws.points)
      os << "<circle cx=\"" << p.x << "\" cy=\"" << p.y
         << "\" r=\"0.35\" fill=\"#d62728\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace rectcover
