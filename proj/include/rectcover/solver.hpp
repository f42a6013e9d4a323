#pragma once

#include <cstdint>
#include <vector>

#include "rectcover/hypergraph.hpp"

namespace rectcover {

struct CoverSolution {
  CoverTarget target = CoverTarget::Boundary;
  std::vector<size_t> chosen;  // indices into enumerate_maximal(poly), ascending
  size_t iterations = 0;       // accepted swaps (local search only)
  int k = 0;                   // locality parameter (local search only)
};

bool coverage_check(const SimplePolygon& poly, const RectFamily& fam,
                    const std::vector<size_t>& chosen, CoverTarget target);

// Algorithm: start from the complete family and repeatedly apply the first
// improving swap (X by ascending size then lexicographic order, Y likewise,
// |Y| < |X| <= k) until none exists.
CoverSolution local_search_cover(const SimplePolygon& poly, CoverTarget target, int k);

struct ExactCoverResult {
  bool exact = false;  // false when the node limit was exhausted
  CoverSolution solution;
  uint64_t nodes = 0;
};

ExactCoverResult exact_cover(const SimplePolygon& poly, CoverTarget target, uint64_t node_limit);

struct AntirectangleResult {
  bool exact = false;
  std::vector<Point> points;
  uint64_t nodes = 0;
};

// Maximum set of candidate points no two of which fit in a common rectangle
// inside the polygon. Candidates: convex polygon corners plus the centers of
// the polygon's own arrangement cells.
AntirectangleResult max_antirectangle(const SimplePolygon& poly, uint64_t node_limit);

// True iff p and q lie in a common (possibly degenerate) rectangle inside poly.
bool rect_visible(const SimplePolygon& poly, const Point& p, const Point& q);

}  // namespace rectcover
