#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rectcover/maxrect.hpp"

namespace rectcover {

struct InstanceBundle {
  SimplePolygon polygon;
  std::optional<RectFamily> family;
  std::map<std::string, int64_t> expected;
  std::optional<Rect> center;                 // distinguished kernel rectangle, when any
  std::vector<Point> quadrant_a, quadrant_b;  // designated antirectangle corner sets
};

// The 8-rectangle staircase-union boundary instance with the star center.
// Family order: four verticals left to right, then four horizontals top down.
InstanceBundle gen_biclique_boundary();

// r vertical and r horizontal slats whose interior hyperedges force K_{r,r}.
InstanceBundle gen_interior_biclique(int r);

// Two staircases cut into opposite corners of a box; the top-right one has r
// convex corners, the bottom-left one s, visibility between them is complete.
InstanceBundle gen_antirectangle(int r, int s);

// Interlock ladder with kb+1 thin vertical and kb+1 wide horizontal corridors
// plus kb hidden interior cells: boundary cover 2kb+2, interior cover 3kb+2.
InstanceBundle gen_beta(int kb);

// Seeded x-monotone staircase-merge polygon with exactly n_vertices vertices
// on a [0,grid]^2 box.
SimplePolygon gen_random(int n_vertices, int grid, uint64_t seed);

}  // namespace rectcover
