#include "rectcover/geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rectcover {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::CollinearRedundantVertex: return "CollinearRedundantVertex";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::EmptyKernel: return "EmptyKernel";
    case ErrorCode::NotProper: return "NotProper";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotRoot: return "NotRoot";
    case ErrorCode::InvalidInputSupport: return "InvalidInputSupport";
    case ErrorCode::NotMaximalMember: return "NotMaximalMember";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::GenerationFailed: return "GenerationFailed";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Error";
}

const char* dir_name(Dir d) {
  switch (d) {
    case Dir::Top: return "top";
    case Dir::Bottom: return "bottom";
    case Dir::Left: return "left";
    case Dir::Right: return "right";
  }
  return "?";
}

bool Side::contains(const Point& p) const {
  if (horizontal()) return p.y == a.y && lo() <= p.x && p.x <= hi();
  return p.x == a.x && lo() <= p.y && p.y <= hi();
}

bool segments_intersect(const Side& s, const Side& t) {
  auto overlap1d = [](int64_t a1, int64_t a2, int64_t b1, int64_t b2) {
    return std::max(a1, b1) <= std::min(a2, b2);
  };
  if (s.horizontal() && t.horizontal()) {
    return s.line() == t.line() && overlap1d(s.lo(), s.hi(), t.lo(), t.hi());
  }
  if (!s.horizontal() && !t.horizontal()) {
    return s.line() == t.line() && overlap1d(s.lo(), s.hi(), t.lo(), t.hi());
  }
  const Side& h = s.horizontal() ? s : t;
  const Side& v = s.horizontal() ? t : s;
  return h.lo() <= v.line() && v.line() <= h.hi() && v.lo() <= h.line() && h.line() <= v.hi();
}

namespace {

std::vector<int64_t> sorted_unique(std::vector<int64_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Crossing-number test in 2x-scaled space so cell centers stay integral.
// q is given already scaled by 2; verts are doubled-grid (scaled inside).
bool point_in_polygon_scaled(const std::vector<Point>& verts, int64_t qx2, int64_t qy2) {
  bool inside = false;
  size_t n = verts.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    if (a.x != b.x) continue;  // only vertical sides cross a horizontal ray
    int64_t x = 2 * a.x;
    int64_t ylo = 2 * std::min(a.y, b.y);
    int64_t yhi = 2 * std::max(a.y, b.y);
    if (x > qx2 && ylo < qy2 && qy2 < yhi) inside = !inside;
  }
  return inside;
}

}  // namespace

SimplePolygon polygon_from_doubled_vertices(std::vector<Point> verts) {
  if (verts.size() < 4) fail(ErrorCode::TooFewVertices, "polygon needs at least 4 vertices");
  size_t n = verts.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (verts[i] == verts[j]) fail(ErrorCode::SelfIntersecting, "repeated vertex");
  for (size_t i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    if (a.x != b.x && a.y != b.y) fail(ErrorCode::NotOrthogonal, "side is not axis-parallel");
  }
  for (size_t i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    const Point& c = verts[(i + 2) % n];
    bool ab_h = a.y == b.y;
    bool bc_h = b.y == c.y;
    if (ab_h == bc_h) fail(ErrorCode::CollinearRedundantVertex, "consecutive sides parallel");
  }
  // Simplicity: non-adjacent sides must be disjoint.
  std::vector<Side> raw(n);
  for (size_t i = 0; i < n; ++i) raw[i] = Side{verts[i], verts[(i + 1) % n]};
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(raw[i], raw[j]))
        fail(ErrorCode::SelfIntersecting, "non-adjacent sides intersect");
    }
  }
  // Orientation: make CCW (positive doubled shoelace area).
  int64_t area2 = 0;
  for (size_t i = 0; i < n; ++i) {
    const Point& a = verts[i];
    const Point& b = verts[(i + 1) % n];
    area2 += a.x * b.y - b.x * a.y;
  }
  if (area2 == 0) fail(ErrorCode::SelfIntersecting, "zero area");
  if (area2 < 0) std::reverse(verts.begin(), verts.end());
  // Canonical start: lexicographically smallest vertex.
  size_t start = 0;
  for (size_t i = 1; i < n; ++i)
    if (verts[i] < verts[start]) start = i;
  std::rotate(verts.begin(), verts.begin() + static_cast<ptrdiff_t>(start), verts.end());

  SimplePolygon poly;
  poly.verts_ = std::move(verts);
  poly.sides_.resize(n);
  poly.convex_.resize(n);
  for (size_t i = 0; i < n; ++i) poly.sides_[i] = Side{poly.verts_[i], poly.verts_[(i + 1) % n]};
  for (size_t i = 0; i < n; ++i) {
    const Point& prev = poly.verts_[(i + n - 1) % n];
    const Point& cur = poly.verts_[i];
    const Point& next = poly.verts_[(i + 1) % n];
    int64_t cross = (cur.x - prev.x) * (next.y - cur.y) - (cur.y - prev.y) * (next.x - cur.x);
    poly.convex_[i] = cross > 0;
  }
  std::vector<int64_t> xs, ys;
  for (const Point& p : poly.verts_) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  poly.xs_ = sorted_unique(std::move(xs));
  poly.ys_ = sorted_unique(std::move(ys));
  poly.bbox_ = Rect{poly.xs_.front(), poly.ys_.front(), poly.xs_.back(), poly.ys_.back()};
  size_t nx = poly.xs_.size() - 1;
  size_t ny = poly.ys_.size() - 1;
  poly.inside_.assign(nx * ny, 0);
  for (size_t j = 0; j < ny; ++j)
    for (size_t i = 0; i < nx; ++i) {
      int64_t cx2 = poly.xs_[i] + poly.xs_[i + 1];
      int64_t cy2 = poly.ys_[j] + poly.ys_[j + 1];
      poly.inside_[j * nx + i] = point_in_polygon_scaled(poly.verts_, cx2, cy2) ? 1 : 0;
    }
  return poly;
}

SimplePolygon polygon_from_vertices(std::span<const Point> user_vertices) {
  if (user_vertices.empty()) fail(ErrorCode::TooFewVertices, "empty vertex list");
  std::vector<Point> doubled;
  doubled.reserve(user_vertices.size());
  for (const Point& p : user_vertices) doubled.push_back(Point{2 * p.x, 2 * p.y});
  return polygon_from_doubled_vertices(std::move(doubled));
}

SimplePolygon polygon_from_vertices(std::initializer_list<Point> user_vertices) {
  return polygon_from_vertices(std::span<const Point>(user_vertices.begin(), user_vertices.size()));
}

bool SimplePolygon::on_boundary(const Point& p) const {
  for (const Side& s : sides_)
    if (s.contains(p)) return true;
  return false;
}

namespace {

// Indices of compressed intervals whose closed span contains v.
// lines must be sorted; returns up to 2 candidates.
void interval_candidates(const std::vector<int64_t>& lines, int64_t v, size_t out[2], size_t* cnt) {
  *cnt = 0;
  if (lines.size() < 2 || v < lines.front() || v > lines.back()) return;
  auto it = std::lower_bound(lines.begin(), lines.end(), v);
  size_t idx = static_cast<size_t>(it - lines.begin());
  if (*it == v) {
    if (idx > 0) out[(*cnt)++] = idx - 1;
    if (idx + 1 < lines.size()) out[(*cnt)++] = idx;
  } else {
    out[(*cnt)++] = idx - 1;
  }
}

}  // namespace

bool SimplePolygon::contains_point(const Point& p) const {
  size_t cx[2], cy[2], ncx, ncy;
  interval_candidates(xs_, p.x, cx, &ncx);
  interval_candidates(ys_, p.y, cy, &ncy);
  for (size_t i = 0; i < ncx; ++i)
    for (size_t j = 0; j < ncy; ++j)
      if (cell_inside(cx[i], cy[j])) return true;
  return false;
}

bool SimplePolygon::contains_box(int64_t x1, int64_t y1, int64_t x2, int64_t y2) const {
  if (x1 > x2 || y1 > y2) return false;
  if (x1 < xs_.front() || x2 > xs_.back() || y1 < ys_.front() || y2 > ys_.back()) return false;
  size_t nx = xs_.size() - 1;
  size_t ny = ys_.size() - 1;
  if (x1 < x2 && y1 < y2) {
    for (size_t j = 0; j < ny; ++j) {
      if (ys_[j] >= y2 || ys_[j + 1] <= y1) continue;
      for (size_t i = 0; i < nx; ++i) {
        if (xs_[i] >= x2 || xs_[i + 1] <= x1) continue;
        if (!cell_inside(i, j)) return false;
      }
    }
    return true;
  }
  if (x1 == x2 && y1 == y2) return contains_point(Point{x1, y1});
  if (x1 == x2) {
    size_t cx[2], ncx;
    interval_candidates(xs_, x1, cx, &ncx);
    if (ncx == 0) return false;
    for (size_t j = 0; j < ny; ++j) {
      if (ys_[j] >= y2 || ys_[j + 1] <= y1) continue;
      bool ok = false;
      for (size_t i = 0; i < ncx && !ok; ++i) ok = cell_inside(cx[i], j);
      if (!ok) return false;
    }
    return true;
  }
  // y1 == y2: horizontal segment.
  size_t cy[2], ncy;
  interval_candidates(ys_, y1, cy, &ncy);
  if (ncy == 0) return false;
  for (size_t i = 0; i < nx; ++i) {
    if (xs_[i] >= x2 || xs_[i + 1] <= x1) continue;
    bool ok = false;
    for (size_t j = 0; j < ncy && !ok; ++j) ok = cell_inside(i, cy[j]);
    if (!ok) return false;
  }
  return true;
}

SimplePolygon SimplePolygon::flipped_y() const {
  std::vector<Point> flipped;
  flipped.reserve(verts_.size());
  for (const Point& p : verts_) flipped.push_back(Point{p.x, -p.y});
  return polygon_from_doubled_vertices(std::move(flipped));
}

SimplePolygon polygon_from_cells(const std::vector<int64_t>& xs, const std::vector<int64_t>& ys,
                                 const std::function<bool(size_t, size_t)>& inside) {
  size_t nx = xs.size() >= 1 ? xs.size() - 1 : 0;
  size_t ny = ys.size() >= 1 ? ys.size() - 1 : 0;
  // Directed boundary edges keeping the interior on the left (CCW trace).
  std::map<Point, std::vector<Point>> next;
  size_t edge_count = 0;
  auto add_edge = [&](Point a, Point b) {
    next[a].push_back(b);
    ++edge_count;
  };
  auto in = [&](ptrdiff_t i, ptrdiff_t j) {
    if (i < 0 || j < 0 || i >= static_cast<ptrdiff_t>(nx) || j >= static_cast<ptrdiff_t>(ny))
      return false;
    return inside(static_cast<size_t>(i), static_cast<size_t>(j));
  };
  for (ptrdiff_t j = 0; j < static_cast<ptrdiff_t>(ny); ++j) {
    for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(nx); ++i) {
      if (!in(i, j)) continue;
      int64_t x1 = xs[static_cast<size_t>(i)], x2 = xs[static_cast<size_t>(i) + 1];
      int64_t y1 = ys[static_cast<size_t>(j)], y2 = ys[static_cast<size_t>(j) + 1];
      if (!in(i, j - 1)) add_edge(Point{x1, y1}, Point{x2, y1});
      if (!in(i + 1, j)) add_edge(Point{x2, y1}, Point{x2, y2});
      if (!in(i, j + 1)) add_edge(Point{x2, y2}, Point{x1, y2});
      if (!in(i - 1, j)) add_edge(Point{x1, y2}, Point{x1, y1});
    }
  }
  if (edge_count == 0) fail(ErrorCode::NotSimple, "empty cell set");
  for (const auto& [v, outs] : next) {
    if (outs.size() > 1) fail(ErrorCode::NotSimple, "pinch point in cell union");
  }
  // Follow the single cycle.
  Point start = next.begin()->first;
  std::vector<Point> path;
  Point cur = start;
  do {
    path.push_back(cur);
    auto it = next.find(cur);
    if (it == next.end() || it->second.empty()) fail(ErrorCode::NotSimple, "open boundary chain");
    cur = it->second.front();
    if (path.size() > edge_count) fail(ErrorCode::NotSimple, "boundary trace does not close");
  } while (cur != start);
  if (path.size() != edge_count)
    fail(ErrorCode::NotSimple, "cell union is disconnected or has a hole");
  // Merge collinear runs.
  std::vector<Point> verts;
  size_t m = path.size();
  for (size_t i = 0; i < m; ++i) {
    const Point& prev = path[(i + m - 1) % m];
    const Point& curp = path[i];
    const Point& nxt = path[(i + 1) % m];
    bool in_h = prev.y == curp.y;
    bool out_h = curp.y == nxt.y;
    if (in_h != out_h) verts.push_back(curp);
  }
  return polygon_from_doubled_vertices(std::move(verts));
}

SimplePolygon polygon_union_of_rects(std::span<const Rect> rects) {
  if (rects.empty()) fail(ErrorCode::NotSimple, "empty rectangle union");
  std::vector<int64_t> xs, ys;
  for (const Rect& r : rects) {
    if (!r.valid()) fail(ErrorCode::Degenerate, "invalid rectangle in union");
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y1);
    ys.push_back(r.y2);
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  return polygon_from_cells(xs, ys, [&](size_t i, size_t j) {
    int64_t cx2 = xs[i] + xs[i + 1];
    int64_t cy2 = ys[j] + ys[j + 1];
    for (const Rect& r : rects)
      if (2 * r.x1 <= cx2 && cx2 <= 2 * r.x2 && 2 * r.y1 <= cy2 && cy2 <= 2 * r.y2) return true;
    return false;
  });
}

SimplePolygon polygon_minus_rect(const SimplePolygon& poly, const Rect& r) {
  if (!r.valid()) fail(ErrorCode::Degenerate, "invalid rectangle");
  std::vector<int64_t> xs = poly.xlines();
  std::vector<int64_t> ys = poly.ylines();
  xs.push_back(r.x1);
  xs.push_back(r.x2);
  ys.push_back(r.y1);
  ys.push_back(r.y2);
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  return polygon_from_cells(xs, ys, [&](size_t i, size_t j) {
    int64_t cx2 = xs[i] + xs[i + 1];
    int64_t cy2 = ys[j] + ys[j + 1];
    if (2 * r.x1 <= cx2 && cx2 <= 2 * r.x2 && 2 * r.y1 <= cy2 && cy2 <= 2 * r.y2) return false;
    return point_in_polygon_scaled(poly.vertices(), cx2, cy2);
  });
}

IntersectionKind classify_intersection(const Rect& a, const Rect& b) {
  if (!a.valid() || !b.valid()) fail(ErrorCode::Degenerate, "classify_intersection on invalid rect");
  IntersectionKind k;
  if (std::max(a.x1, b.x1) > std::min(a.x2, b.x2) || std::max(a.y1, b.y1) > std::min(a.y2, b.y2)) {
    k.tag = IntersectTag::Disjoint;
    return k;
  }
  bool ab = pierces_vertically(a, b);
  bool ba = pierces_vertically(b, a);
  if (ab || ba) {
    k.tag = IntersectTag::Piercing;
    k.first_vertical = ab;
    const Rect& v = ab ? a : b;
    const Rect& h = ab ? b : a;
    k.aligned = (v.y1 == h.y1) || (v.y2 == h.y2) || (h.x1 == v.x1) || (h.x2 == v.x2);
    return k;
  }
  // Overlapping but not piercing. For maximal-rectangle pairs this is exactly
  // the corner pattern; arbitrary pairs (nested, T-shaped) land here too.
  k.tag = IntersectTag::Corner;
  return k;
}

bool pierces_vertically(const Rect& a, const Rect& b) {
  return b.x1 <= a.x1 && a.x2 <= b.x2 && a.y1 <= b.y1 && b.y2 <= a.y2;
}

bool pierce_less(const Rect& a, const Rect& b) { return a != b && pierces_vertically(a, b); }

bool rect_contains(const Point& p, const Rect& r) { return r.contains(p); }

bool boundary_contains(const Point& p, const SimplePolygon& poly) { return poly.on_boundary(p); }

}  // namespace rectcover
