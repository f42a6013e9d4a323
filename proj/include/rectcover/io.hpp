#pragma once

#include <map>
#include <string>

#include "rectcover/hypergraph.hpp"

namespace rectcover {

// JSON-shaped polygon document. Coordinates are user grid units.
struct PolygonFile {
  std::vector<Point> vertices;  // user units (undoubled)
  std::vector<Rect> rects;      // user units; optional explicit family
  std::map<std::string, int64_t> expected;
};

PolygonFile parse_polygon_file(const std::string& text);
PolygonFile load_polygon_file(const std::string& path);
std::string serialize_polygon_file(const PolygonFile& f);

SimplePolygon polygon_of(const PolygonFile& f);
RectFamily family_of(const PolygonFile& f);  // doubled rects

struct GraphFile {
  size_t n = 0;
  std::vector<std::pair<size_t, size_t>> edges;  // i<j, sorted
  std::vector<size_t> outer;
};

GraphFile parse_graph_file(const std::string& text);
GraphFile load_graph_file(const std::string& path);
std::string serialize_graph_file(const GraphFile& f);
std::string graph_to_dot(const GraphFile& f);

GraphFile to_graph_file(const SupportGraph& g);
SupportGraph to_support_graph(const GraphFile& f);

struct RenderOptions {
  bool family = false;                    // draw the rectangle family
  std::vector<size_t> cover;              // highlighted cover members
  const SupportGraph* support = nullptr;  // straight-line support edges
  bool witnesses = false;
  CoverTarget witness_target = CoverTarget::Boundary;
};

std::string render_svg(const SimplePolygon& poly, const RectFamily& fam,
                       const RenderOptions& opt);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace rectcover
