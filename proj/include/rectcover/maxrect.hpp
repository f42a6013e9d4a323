#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rectcover/geometry.hpp"

namespace rectcover {

// Boundary contact of one rectangle side: closed 1D spans on the side's line,
// minus the rectangle's own corner points. Corner points never count as
// blockers; they are kept as explicit exclusions so emptiness and sharing
// tests stay exact.
struct Blocker1D {
  bool horizontal = false;  // spans measured along x (top/bottom side) or y (left/right)
  int64_t line = 0;         // fixed coordinate of the side
  std::vector<std::pair<int64_t, int64_t>> spans;  // merged, sorted, closed
  std::array<int64_t, 2> excluded_corners{0, 0};

  bool empty() const;
  // True when the two blocker sets share at least one non-corner point.
  bool shares_point(const Blocker1D& other) const;
  bool contains_position(int64_t pos) const;
};

struct BlockerSet {
  Blocker1D top, bottom, left, right;
  const Blocker1D& get(Dir d) const;
  Blocker1D& get(Dir d);
};

struct RectFamily {
  std::vector<Rect> rects;

  size_t size() const { return rects.size(); }
  const Rect& operator[](size_t i) const { return rects[i]; }
  auto begin() const { return rects.begin(); }
  auto end() const { return rects.end(); }
  std::optional<size_t> index_of(const Rect& r) const;
  void sort_canonical();
};

BlockerSet blockers(const SimplePolygon& poly, const Rect& r);

bool is_maximal(const SimplePolygon& poly, const Rect& r);

// All containment-maximal rectangles, canonically sorted by (x1,y1,x2,y2).
RectFamily enumerate_maximal(const SimplePolygon& poly);

Rect extension(const SimplePolygon& poly, const Rect& r, Dir dir);

// Maximal closed x-intervals I within [r.x1, r.x2] such that every x in I has
// both (x, r.y1) and (x, r.y2) on the polygon boundary.
std::vector<std::pair<int64_t, int64_t>> vertical_blocker_lines(const SimplePolygon& poly,
                                                                const Rect& r);

inline bool vertically_blocked(const SimplePolygon& poly, const Rect& r) {
  return !vertical_blocker_lines(poly, r).empty();
}

}  // namespace rectcover
