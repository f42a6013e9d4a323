#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rectcover/errors.hpp"

namespace rectcover {

// Simple graph over vertex indices [0, n) plus an ordered outer-face claim.
struct SupportGraph {
  size_t n = 0;
  std::set<std::pair<size_t, size_t>> edges;  // canonical (min, max) pairs
  std::vector<size_t> outer;

  SupportGraph() = default;
  explicit SupportGraph(size_t vertices) : n(vertices) {}

  void add_edge(size_t a, size_t b);
  void remove_edge(size_t a, size_t b);
  bool has_edge(size_t a, size_t b) const;
  std::vector<std::vector<size_t>> adjacency() const;
};

using DirectedEdge = std::pair<size_t, size_t>;

struct DfsOrientation {
  size_t root = 0;
  std::vector<int64_t> parent;  // -1 for root and unvisited
  std::vector<int64_t> height;  // -1 for unvisited
  std::vector<size_t> tin, tout;
  std::vector<size_t> order;                // discovery order within the root component
  std::vector<DirectedEdge> tree_edges;     // (parent, child), discovery order
  std::vector<DirectedEdge> cotree_edges;   // (descendant, ancestor)
  std::vector<size_t> unreached;            // vertices outside the root's component
  std::map<DirectedEdge, size_t> low;       // lowest-height vertex reachable via the edge

  bool in_subtree(size_t x, size_t v) const { return tin[v] <= tin[x] && tout[x] <= tout[v]; }
};

enum class EdgeClass { Left, Right };

struct LrColoring {
  std::map<DirectedEdge, EdgeClass> color;
};

struct Fork {
  size_t vertex = 0;
  DirectedEdge out_i{}, out_j{};
};

struct PlanarityResult {
  bool planar = false;
  LrColoring coloring;            // valid only when planar
  std::optional<Fork> violation;  // set when not planar
};

DfsOrientation dfs_orient(const SupportGraph& graph, size_t root);

PlanarityResult lr_planarity(const SupportGraph& graph);

// Re-checks the fork constraints for a given coloring (test utility).
bool coloring_satisfies(const SupportGraph& graph, const DfsOrientation& orientation,
                        const LrColoring& coloring);

// Replaces every cotree edge (x, v) into the root v by (x, w) where w is the
// child of v whose subtree holds x, and drops the tree edges at v. Returns the
// undirected edge set over the remaining vertices.
std::set<std::pair<size_t, size_t>> shortcut_cotree(const SupportGraph& graph,
                                                    const DfsOrientation& orientation,
                                                    const LrColoring& coloring, size_t v);

// True iff graph has a planar embedding with all face_vertices on one face
// (apex construction).
bool planar_with_face(const SupportGraph& graph, const std::vector<size_t>& face_vertices);

}  // namespace rectcover
