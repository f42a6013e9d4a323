#include "rectcover/maxrect.hpp"

#include <algorithm>
#include <cassert>

namespace rectcover {

namespace {

void merge_spans(std::vector<std::pair<int64_t, int64_t>>& spans) {
  std::sort(spans.begin(), spans.end());
  std::vector<std::pair<int64_t, int64_t>> merged;
  for (const auto& s : spans) {
    if (!merged.empty() && s.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, s.second);
    else
      merged.push_back(s);
  }
  spans = std::move(merged);
}

bool span_nonempty_after_exclusion(const std::pair<int64_t, int64_t>& span,
                                   std::span<const int64_t> excluded) {
  if (span.first < span.second) return true;  // closed interval minus finitely many points
  for (int64_t e : excluded)
    if (e == span.first) return false;
  return true;
}

}  // namespace

bool Blocker1D::empty() const {
  for (const auto& s : spans)
    if (span_nonempty_after_exclusion(s, excluded_corners)) return false;
  return true;
}

bool Blocker1D::contains_position(int64_t pos) const {
  if (pos == excluded_corners[0] || pos == excluded_corners[1]) return false;
  for (const auto& s : spans)
    if (s.first <= pos && pos <= s.second) return true;
  return false;
}

bool Blocker1D::shares_point(const Blocker1D& other) const {
  if (horizontal != other.horizontal || line != other.line) return false;
  std::array<int64_t, 4> excl{excluded_corners[0], excluded_corners[1], other.excluded_corners[0],
                              other.excluded_corners[1]};
  for (const auto& a : spans)
    for (const auto& b : other.spans) {
      int64_t lo = std::max(a.first, b.first);
      int64_t hi = std::min(a.second, b.second);
      if (lo > hi) continue;
      if (span_nonempty_after_exclusion({lo, hi}, excl)) return true;
      // A positive-length intersection always survives removing four points;
      // the check above only rejects single-point intersections at corners.
    }
  return false;
}

const Blocker1D& BlockerSet::get(Dir d) const {
  switch (d) {
    case Dir::Top: return top;
    case Dir::Bottom: return bottom;
    case Dir::Left: return left;
    case Dir::Right: return right;
  }
  return top;
}

Blocker1D& BlockerSet::get(Dir d) {
  switch (d) {
    case Dir::Top: return top;
    case Dir::Bottom: return bottom;
    case Dir::Left: return left;
    case Dir::Right: return right;
  }
  return top;
}

std::optional<size_t> RectFamily::index_of(const Rect& r) const {
  for (size_t i = 0; i < rects.size(); ++i)
    if (rects[i] == r) return i;
  return std::nullopt;
}

void RectFamily::sort_canonical() { std::sort(rects.begin(), rects.end()); }

namespace {

// Boundary contact along one rectangle side, before corner exclusion.
Blocker1D side_contact(const SimplePolygon& poly, const Rect& r, Dir d) {
  Blocker1D b;
  b.horizontal = (d == Dir::Top || d == Dir::Bottom);
  int64_t lo, hi;
  if (b.horizontal) {
    b.line = (d == Dir::Top) ? r.y2 : r.y1;
    lo = r.x1;
    hi = r.x2;
    b.excluded_corners = {r.x1, r.x2};
  } else {
    b.line = (d == Dir::Left) ? r.x1 : r.x2;
    lo = r.y1;
    hi = r.y2;
    b.excluded_corners = {r.y1, r.y2};
  }
  for (const Side& s : poly.sides()) {
    if (s.horizontal() == b.horizontal) {
      if (s.line() != b.line) continue;
      int64_t a = std::max(lo, s.lo());
      int64_t c = std::min(hi, s.hi());
      if (a <= c) b.spans.emplace_back(a, c);
    } else {
      // Perpendicular polygon side crossing this side's line at one point.
      if (s.lo() <= b.line && b.line <= s.hi() && lo <= s.line() && s.line() <= hi)
        b.spans.emplace_back(s.line(), s.line());
    }
  }
  merge_spans(b.spans);
  return b;
}

}  // namespace

BlockerSet blockers(const SimplePolygon& poly, const Rect& r) {
  if (!r.valid()) fail(ErrorCode::Degenerate, "blockers of invalid rect");
  if (!poly.contains_rect(r)) fail(ErrorCode::NotContained, "rect not inside polygon");
  BlockerSet bs;
  bs.top = side_contact(poly, r, Dir::Top);
  bs.bottom = side_contact(poly, r, Dir::Bottom);
  bs.left = side_contact(poly, r, Dir::Left);
  bs.right = side_contact(poly, r, Dir::Right);
  return bs;
}

bool is_maximal(const SimplePolygon& poly, const Rect& r) {
  if (!r.valid()) fail(ErrorCode::Degenerate, "is_maximal of invalid rect");
  if (!poly.contains_rect(r)) fail(ErrorCode::NotContained, "rect not inside polygon");
  // One half-unit step on the doubled grid is the smallest possible growth.
  if (poly.contains_box(r.x1, r.y1, r.x2, r.y2 + 1)) return false;
  if (poly.contains_box(r.x1, r.y1 - 1, r.x2, r.y2)) return false;
  if (poly.contains_box(r.x1 - 1, r.y1, r.x2, r.y2)) return false;
  if (poly.contains_box(r.x1, r.y1, r.x2 + 1, r.y2)) return false;
  return true;
}

RectFamily enumerate_maximal(const SimplePolygon& poly) {
  const auto& xs = poly.xlines();
  const auto& ys = poly.ylines();
  size_t nx = xs.size() - 1;
  RectFamily fam;
  for (size_t ja = 0; ja + 1 < ys.size(); ++ja) {
    for (size_t jb = ja + 1; jb < ys.size(); ++jb) {
      int64_t ylo = ys[ja], yhi = ys[jb];
      // Columns whose full [ylo, yhi] extent lies inside the polygon.
      std::vector<bool> colok(nx, true);
      for (size_t i = 0; i < nx; ++i)
        for (size_t j = ja; j < jb && colok[i]; ++j)
          if (!poly.cell_inside(i, j)) colok[i] = false;
      size_t i = 0;
      while (i < nx) {
        if (!colok[i]) {
          ++i;
          continue;
        }
        size_t k = i;
        while (k < nx && colok[k]) ++k;
        Rect r{xs[i], ylo, xs[k], yhi};
        if (!poly.contains_box(r.x1, r.y1, r.x2, r.y2 + 1) &&
            !poly.contains_box(r.x1, r.y1 - 1, r.x2, r.y2))
          fam.rects.push_back(r);
        i = k;
      }
    }
  }
  fam.sort_canonical();
  assert(std::adjacent_find(fam.rects.begin(), fam.rects.end()) == fam.rects.end());
  return fam;
}

Rect extension(const SimplePolygon& poly, const Rect& r, Dir dir) {
  if (!r.valid()) fail(ErrorCode::Degenerate, "extension of invalid rect");
  if (!poly.contains_rect(r)) fail(ErrorCode::NotContained, "rect not inside polygon");
  Rect out = r;
  switch (dir) {
    case Dir::Top: {
      for (int64_t y : poly.ylines())
        if (y > out.y2 && poly.contains_box(r.x1, r.y1, r.x2, y)) out.y2 = y;
      break;
    }
    case Dir::Bottom: {
      const auto& ys = poly.ylines();
      for (auto it = ys.rbegin(); it != ys.rend(); ++it)
        if (*it < out.y1 && poly.contains_box(r.x1, *it, r.x2, r.y2)) out.y1 = *it;
      break;
    }
    case Dir::Left: {
      const auto& xs = poly.xlines();
      for (auto it = xs.rbegin(); it != xs.rend(); ++it)
        if (*it < out.x1 && poly.contains_box(*it, r.y1, r.x2, r.y2)) out.x1 = *it;
      break;
    }
    case Dir::Right: {
      for (int64_t x : poly.xlines())
        if (x > out.x2 && poly.contains_box(r.x1, r.y1, x, r.y2)) out.x2 = x;
      break;
    }
  }
  return out;
}

std::vector<std::pair<int64_t, int64_t>> vertical_blocker_lines(const SimplePolygon& poly,
                                                                const Rect& r) {
  if (!r.valid()) fail(ErrorCode::Degenerate, "vertical_blocker_lines of invalid rect");
  auto boundary_xs = [&](int64_t yline) {
    std::vector<std::pair<int64_t, int64_t>> spans;
    for (const Side& s : poly.sides()) {
      if (s.horizontal()) {
        if (s.line() != yline) continue;
        int64_t a = std::max(r.x1, s.lo());
        int64_t c = std::min(r.x2, s.hi());
        if (a <= c) spans.emplace_back(a, c);
      } else {
        if (s.lo() <= yline && yline <= s.hi() && r.x1 <= s.line() && s.line() <= r.x2)
          spans.emplace_back(s.line(), s.line());
      }
    }
    merge_spans(spans);
    return spans;
  };
  auto top = boundary_xs(r.y2);
  auto bot = boundary_xs(r.y1);
  std::vector<std::pair<int64_t, int64_t>> out;
  for (const auto& a : top)
    for (const auto& b : bot) {
      int64_t lo = std::max(a.first, b.first);
      int64_t hi = std::min(a.second, b.second);
      if (lo <= hi) out.emplace_back(lo, hi);
    }
  merge_spans(out);
  return out;
}

}  // namespace rectcover
