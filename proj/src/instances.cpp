#include "rectcover/instances.hpp"

#include <algorithm>
#include <random>

namespace rectcover {

InstanceBundle gen_biclique_boundary() {
  InstanceBundle b;
  RectFamily fam;
  fam.rects = {
      Rect::of(1, 1, 4, 11),   // A
      Rect::of(3, 0, 6, 10),   // B
      Rect::of(5, 1, 8, 11),   // C
      Rect::of(7, 0, 10, 10),  // D
      Rect::of(0, 7, 10, 10),  // P
      Rect::of(1, 5, 11, 8),   // Q
      Rect::of(0, 3, 10, 6),   // R
      Rect::of(1, 1, 11, 4),   // S
  };
  b.polygon = polygon_union_of_rects(fam.rects);
  b.family = std::move(fam);
  b.center = Rect::of(1, 1, 10, 10);
  return b;
}

InstanceBundle gen_interior_biclique(int r) {
  if (r < 3) fail(ErrorCode::BadParameter, "gen_interior_biclique needs r >= 3");
  InstanceBundle b;
  RectFamily fam;
  for (int i = 1; i <= r; ++i) {
    bool odd = i % 2 == 1;
    fam.rects.push_back(odd ? Rect::of(2 * i - 1, 1, 2 * i + 2, 2 * r + 3)
                            : Rect::of(2 * i - 1, 0, 2 * i + 2, 2 * r + 2));
  }
  for (int i = 1; i <= r; ++i) {
    bool odd = i % 2 == 1;
    fam.rects.push_back(odd ? Rect::of(1, 2 * i - 1, 2 * r + 3, 2 * i + 2)
                            : Rect::of(0, 2 * i - 1, 2 * r + 2, 2 * i + 2));
  }
  b.polygon = polygon_union_of_rects(fam.rects);
  b.family = std::move(fam);
  return b;
}

InstanceBundle gen_antirectangle(int r, int s) {
  if (r < 3 || s < 3) fail(ErrorCode::BadParameter, "gen_antirectangle needs r,s >= 3");
  const int64_t W = 2 * (r + s) + 4;
  const int64_t H = W;
  // Cut predicates in user units, evaluated at 2x-user cell centers (odd).
  auto bl_cut = [&](int64_t ux2, int64_t uy2) {
    for (int64_t j = 1; j <= s - 1; ++j)
      if (ux2 < 4 * j && uy2 < 4 * (s - j)) return true;
    return false;
  };
  auto tr_cut = [&](int64_t ux2, int64_t uy2) {
    for (int64_t i = 1; i <= r - 1; ++i)
      if (ux2 > 2 * W - 4 * i && uy2 > 2 * H - 4 * (r - i)) return true;
    return false;
  };
  // Cut boundaries sit on even user coordinates, so 2-unit cells suffice.
  std::vector<int64_t> xs, ys;
  for (int64_t x = 0; x <= W; x += 2) xs.push_back(2 * x);  // doubled coordinates
  for (int64_t y = 0; y <= H; y += 2) ys.push_back(2 * y);
  InstanceBundle b;
  b.polygon = polygon_from_cells(xs, ys, [&](size_t i, size_t j) {
    int64_t ux2 = (xs[i] + xs[i + 1]) / 2;  // doubled center = 2x user units
    int64_t uy2 = (ys[j] + ys[j + 1]) / 2;
    return !bl_cut(ux2, uy2) && !tr_cut(ux2, uy2);
  });
  for (int t = 0; t <= r - 1; ++t)
    b.quadrant_a.push_back(Point::of(W - 2 * t, H - 2 * (r - 1 - t)));
  for (int t = 0; t <= s - 1; ++t) b.quadrant_b.push_back(Point::of(2 * t, 2 * (s - 1 - t)));
  b.expected["alpha"] = std::max(r, s);
  return b;
}

InstanceBundle gen_beta(int kb) {
  if (kb < 2) fail(ErrorCode::BadParameter, "gen_beta needs kb >= 2");
  const int64_t k = kb;
  RectFamily fam;
  std::vector<Rect> pieces;
  auto vert = [&](int64_t i) {
    int64_t lo = std::max<int64_t>(0, 2 * i - 2);
    int64_t hi = std::min<int64_t>(2 * k + 2, 2 * i + 4);
    return Rect::of(2 * i, lo, 2 * i + 1, hi);
  };
  auto hori = [&](int64_t j) {
    int64_t lo = std::max<int64_t>(0, 2 * j - 2);
    int64_t hi = std::min<int64_t>(2 * k + 2, 2 * j + 4);
    return Rect::of(lo, 2 * j, hi, 2 * j + 1);
  };
  for (int64_t i = 0; i <= k; ++i) {
    fam.rects.push_back(vert(i));
    pieces.push_back(vert(i));
  }
  for (int64_t j = 0; j <= k; ++j) {
    fam.rects.push_back(hori(j));
    pieces.push_back(hori(j));
  }
  for (int64_t i = 0; i < k; ++i)
    pieces.push_back(Rect::of(2 * i + 1, 2 * i + 1, 2 * i + 2, 2 * i + 2));
  InstanceBundle b;
  b.polygon = polygon_union_of_rects(pieces);
  b.family = std::move(fam);
  b.expected["theta_b"] = 2 * k + 2;
  b.expected["theta"] = 3 * k + 2;
  return b;
}

SimplePolygon gen_random(int n_vertices, int grid, uint64_t seed) {
  if (n_vertices < 4 || n_vertices % 2 != 0)
    fail(ErrorCode::BadParameter, "n_vertices must be even and >= 4");
  if (grid < 2) fail(ErrorCode::BadParameter, "grid must be >= 2");
  const int steps = (n_vertices - 4) / 2;
  std::mt19937_64 rng(seed);
  auto rnd = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
  };
  int min_w = 1;
  while (2 * (min_w - 1) < steps) ++min_w;
  for (int attempt = 0; attempt < 400; ++attempt) {
    if (min_w > grid) break;
    int w = rnd(min_w, grid);
    if (2 * (w - 1) < steps) continue;
    // Choose distinct (chain, boundary) step slots.
    std::vector<std::pair<int, int>> slots;  // (boundary index 1..w-1, chain 0=lo 1=hi)
    for (int c = 1; c < w; ++c) {
      slots.push_back({c, 0});
      slots.push_back({c, 1});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    slots.resize(static_cast<size_t>(steps));
    std::vector<bool> lo_step(static_cast<size_t>(w), false), hi_step(static_cast<size_t>(w), false);
    for (auto [c, chain] : slots) (chain == 0 ? lo_step : hi_step)[static_cast<size_t>(c)] = true;
    std::vector<int> lo(static_cast<size_t>(w)), hi(static_cast<size_t>(w));
    lo[0] = rnd(0, grid - 1);
    hi[0] = rnd(lo[0] + 1, grid);
    bool ok = true;
    for (int c = 1; c < w && ok; ++c) {
      bool placed = false;
      for (int tries = 0; tries < 40 && !placed; ++tries) {
        int nlo = lo_step[static_cast<size_t>(c)] ? rnd(0, grid - 1) : lo[c - 1];
        int nhi = hi_step[static_cast<size_t>(c)] ? rnd(nlo + 1, grid) : hi[c - 1];
        if (lo_step[static_cast<size_t>(c)] && nlo == lo[c - 1]) continue;
        if (hi_step[static_cast<size_t>(c)] && nhi == hi[c - 1]) continue;
        if (nlo >= nhi) continue;
        if (std::max(nlo, lo[c - 1]) >= std::min(nhi, hi[c - 1])) continue;  // pinch
        lo[c] = nlo;
        hi[c] = nhi;
        placed = true;
      }
      ok = placed;
    }
    if (!ok) continue;
    std::vector<Point> verts;
    verts.push_back(Point{0, lo[0]});
    for (int c = 1; c < w; ++c)
      if (lo[c] != lo[c - 1]) {
        verts.push_back(Point{c, lo[c - 1]});
        verts.push_back(Point{c, lo[c]});
      }
    verts.push_back(Point{w, lo[w - 1]});
    verts.push_back(Point{w, hi[w - 1]});
    for (int c = w - 1; c >= 1; --c)
      if (hi[c] != hi[c - 1]) {
        verts.push_back(Point{c, hi[c]});
        verts.push_back(Point{c, hi[c - 1]});
      }
    verts.push_back(Point{0, hi[0]});
    if (verts.size() != static_cast<size_t>(n_vertices)) continue;
    try {
      return polygon_from_vertices(std::span<const Point>(verts.data(), verts.size()));
    } catch (const Error&) {
      continue;
    }
  }
  fail(ErrorCode::GenerationFailed,
       "gen_random exhausted retries (seed " + std::to_string(seed) + ")");
}

}  // namespace rectcover
