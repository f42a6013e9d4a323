#pragma once

#include <array>
#include <map>
#include <string>

#include "rectcover/hypergraph.hpp"

namespace rectcover {

// Diagnostics sink for the constructions: every deviation from the happy
// path (fallback edges, precondition surprises) lands here as one line.
struct BuilderLog {
  std::vector<std::string> entries;
  void note(std::string s) { entries.push_back(std::move(s)); }
};

struct RTreeNode {
  Rect rect;
  std::vector<size_t> neighbors;
};

// Horizontal slab decomposition: cut along every concave corner's chord.
struct RTree {
  std::vector<RTreeNode> nodes;  // sorted by (y1, x1)
};

RTree horizontal_rtree(const SimplePolygon& poly);

enum class CornerDir { SW = 0, SE = 1, NW = 2, NE = 3 };

struct KernelPartition {
  size_t center = 0;
  std::array<std::vector<size_t>, 4> corners;  // per CornerDir, narrower first
  std::vector<size_t> vertical;                // R < center in the pierce order
  std::vector<size_t> horizontal;              // center < R
  std::vector<size_t> vertical_max;            // maximal verticals, <_v order
  std::vector<size_t> horizontal_min;          // minimal horizontals, <_h order
  std::vector<size_t> isolated;                // no boundary witness shared with center
  bool v1_left_aligned = false;
  bool vk_right_aligned = false;
  bool h1_bottom_aligned = false;
  bool hl_top_aligned = false;
};

KernelPartition partition_kernel_family(const SimplePolygon& poly, const RectFamily& fam,
                                        size_t center, BuilderLog* log = nullptr);

// Planar support for fam minus the center, per the kernel-schema drawing
// rules. Output vertices are fam's indices with the center removed (shifted).
SupportGraph build_kernel_less_support(const SimplePolygon& poly, const RectFamily& fam,
                                       size_t center, BuilderLog* log = nullptr);

// Planar support for the complete family enumerate_maximal(poly), built
// inductively over the horizontal R-tree; outer lists the vertically-blocked
// rectangles.
SupportGraph build_complete_support(const SimplePolygon& poly, BuilderLog* log = nullptr);

// Planar support for fam minus victim, via DFS shortcutting at the victim
// plus a kernel-less support over the victim's DFS children.
SupportGraph delete_vertex_support(const SimplePolygon& poly, const RectFamily& fam,
                                   const SupportGraph& graph, size_t victim,
                                   BuilderLog* log = nullptr);

// Planar support for an arbitrary subfamily of maximal rectangles: complete
// support, then canonical-order deletions.
SupportGraph subfamily_support(const SimplePolygon& poly, const RectFamily& subset,
                               BuilderLog* log = nullptr);

// Test hook: classification data for one inductive step at the given R-tree
// leaf (its parent must lie above).
struct LeafStep {
  Rect leaf;
  Rect parent;
  int64_t opening_x1 = 0, opening_x2 = 0;  // interface segment on the leaf's top line
  bool whole_parent_bottom = false;        // opening == parent's full x-span
  bool leaf_maximal = false;
  Rect leaf_top_extension;
  std::vector<Rect> family_a;                 // canonical order
  std::vector<Rect> type1_path;               // <_1 order, includes the leaf when maximal
  std::vector<Rect> type2;                    // canonical order
  std::vector<std::pair<Rect, Rect>> images;  // (R, f(R)) for R_A minus the leaf
};

LeafStep classify_leaf_step(const SimplePolygon& poly, const Rect& leaf, BuilderLog* log = nullptr);

// True when the two rectangles share a boundary point of the polygon.
bool share_boundary_point(const SimplePolygon& poly, const Rect& a, const Rect& b);

// Remove edges (ascending canonical order) while every witness hyperedge
// stays connected. Deterministic; keeps the vertex set.
SupportGraph minimalize_support(const SimplePolygon& poly, const RectFamily& fam,
                                SupportGraph graph);

}  // namespace rectcover
