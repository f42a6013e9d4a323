#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rectcover/errors.hpp"

// Exact integer geometry on a doubled grid. Every coordinate held in a Point,
// Rect or SimplePolygon is the user-facing grid coordinate multiplied by 2, so
// midpoints of grid segments stay integral. Use Point::of / Rect::of to build
// values from user coordinates and to_units() to go back.

namespace rectcover {

struct Point {
  int64_t x = 0;
  int64_t y = 0;

  static Point of(int64_t ux, int64_t uy) { return Point{2 * ux, 2 * uy}; }

  friend bool operator==(const Point& a, const Point& b) = default;
  friend auto operator<=>(const Point& a, const Point& b) = default;
};

enum class Dir { Top, Bottom, Left, Right };

const char* dir_name(Dir d);

// Closed axis-parallel rectangle [x1,x2] x [y1,y2], positive width and height.
struct Rect {
  int64_t x1 = 0;
  int64_t y1 = 0;
  int64_t x2 = 0;
  int64_t y2 = 0;

  static Rect of(int64_t ux1, int64_t uy1, int64_t ux2, int64_t uy2) {
    return Rect{2 * ux1, 2 * uy1, 2 * ux2, 2 * uy2};
  }

  bool valid() const { return x1 < x2 && y1 < y2; }
  int64_t width() const { return x2 - x1; }
  int64_t height() const { return y2 - y1; }
  Point center() const { return Point{(x1 + x2) / 2, (y1 + y2) / 2}; }
  bool contains(const Point& p) const { return x1 <= p.x && p.x <= x2 && y1 <= p.y && p.y <= y2; }
  bool contains_rect(const Rect& o) const {
    return x1 <= o.x1 && o.x2 <= x2 && y1 <= o.y1 && o.y2 <= y2;
  }
  Rect flipped_y() const { return Rect{x1, -y2, x2, -y1}; }

  friend bool operator==(const Rect& a, const Rect& b) = default;
  // Canonical order used for families: (x1, y1, x2, y2).
  friend auto operator<=>(const Rect& a, const Rect& b) = default;
};

// Axis-parallel boundary side, endpoints in traversal (CCW) order.
struct Side {
  Point a;
  Point b;
  bool horizontal() const { return a.y == b.y; }
  int64_t line() const { return horizontal() ? a.y : a.x; }
  int64_t lo() const { return horizontal() ? std::min(a.x, b.x) : std::min(a.y, b.y); }
  int64_t hi() const { return horizontal() ? std::max(a.x, b.x) : std::max(a.y, b.y); }
  bool contains(const Point& p) const;
};

bool segments_intersect(const Side& s, const Side& t);

enum class IntersectTag { Disjoint, Corner, Piercing };

struct IntersectionKind {
  IntersectTag tag = IntersectTag::Disjoint;
  bool aligned = false;        // meaningful only for Piercing
  bool first_vertical = true;  // for Piercing: whether the first argument is the narrow one
};

// Simple orthogonal polygon, closed region, vertices CCW starting from the
// lexicographically smallest vertex. Immutable after construction.
class SimplePolygon {
 public:
  const std::vector<Point>& vertices() const { return verts_; }
  const std::vector<Side>& sides() const { return sides_; }
  // convex()[i] is true when vertex i is a 90-degree (convex) corner.
  const std::vector<bool>& convex() const { return convex_; }
  Rect bbox() const { return bbox_; }

  bool on_boundary(const Point& p) const;
  bool contains_point(const Point& p) const;
  // Closed containment of a possibly degenerate box (x1<=x2, y1<=y2).
  bool contains_box(int64_t x1, int64_t y1, int64_t x2, int64_t y2) const;
  bool contains_rect(const Rect& r) const { return contains_box(r.x1, r.y1, r.x2, r.y2); }

  // Compressed arrangement of the polygon's own side lines.
  const std::vector<int64_t>& xlines() const { return xs_; }
  const std::vector<int64_t>& ylines() const { return ys_; }
  bool cell_inside(size_t ix, size_t iy) const { return inside_[iy * (xs_.size() - 1) + ix]; }

  SimplePolygon flipped_y() const;

  friend bool operator==(const SimplePolygon& a, const SimplePolygon& b) {
    return a.verts_ == b.verts_;
  }

 private:
  friend SimplePolygon polygon_from_doubled_vertices(std::vector<Point> verts);

  std::vector<Point> verts_;
  std::vector<Side> sides_;
  std::vector<bool> convex_;
  Rect bbox_;
  std::vector<int64_t> xs_, ys_;
  std::vector<uint8_t> inside_;
};

// Validates and normalizes. Input vertices are in user grid units; they are
// doubled internally (see file header).
SimplePolygon polygon_from_vertices(std::span<const Point> user_vertices);
SimplePolygon polygon_from_vertices(std::initializer_list<Point> user_vertices);

// Same, but the input is already on the doubled grid.
SimplePolygon polygon_from_doubled_vertices(std::vector<Point> verts);

// Traces the boundary of the cell set {(ix,iy) : inside(ix,iy)} over the given
// compressed lines (doubled coordinates) and returns it as a polygon. Fails
// with NotSimple when the set is empty, disconnected, pinched or has a hole.
SimplePolygon polygon_from_cells(const std::vector<int64_t>& xs, const std::vector<int64_t>& ys,
                                 const std::function<bool(size_t, size_t)>& inside);

SimplePolygon polygon_union_of_rects(std::span<const Rect> rects);
SimplePolygon polygon_minus_rect(const SimplePolygon& poly, const Rect& r);

IntersectionKind classify_intersection(const Rect& a, const Rect& b);

// True when a and b intersect with a as the narrow (vertical) rectangle:
// a's vertical sides meet both of b's horizontal sides. Closed semantics.
bool pierces_vertically(const Rect& a, const Rect& b);

// Strict pierce order: a < b when a pierces b as the narrow rectangle.
bool pierce_less(const Rect& a, const Rect& b);

bool rect_contains(const Point& p, const Rect& r);
bool boundary_contains(const Point& p, const SimplePolygon& poly);

}  // namespace rectcover
