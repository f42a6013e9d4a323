#include "doctest.h"
#include "oracles.hpp"
#include "rectcover/instances.hpp"
#include "rectcover/maxrect.hpp"

using namespace rectcover;

namespace {

SimplePolygon upoly(std::initializer_list<Point> pts) { return polygon_from_vertices(pts); }
Rect R(int64_t x1, int64_t y1, int64_t x2, int64_t y2) { return Rect::of(x1, y1, x2, y2); }

const SimplePolygon kL = upoly({{0, 0}, {4, 0}, {4, 1}, {2, 1}, {2, 2}, {0, 2}});
const SimplePolygon kBox = upoly({{0, 0}, {10, 0}, {10, 5}, {0, 5}});
const SimplePolygon kPlus = polygon_union_of_rects(std::vector<Rect>{R(2, 0, 4, 6), R(0, 2, 6, 4)});

}  // namespace

TEST_CASE("blockers of the box polygon's own rect cover all four sides") {
  BlockerSet b = blockers(kBox, R(0, 0, 10, 5));
  for (Dir d : {Dir::Top, Dir::Bottom, Dir::Left, Dir::Right}) CHECK_FALSE(b.get(d).empty());
  CHECK(b.top.spans == std::vector<std::pair<int64_t, int64_t>>{{0, 20}});
}

TEST_CASE("blockers on the L polygon") {
  BlockerSet b = blockers(kL, R(0, 0, 2, 2));
  // Right side x=2 touches dP along the vertical side {2} x [1,2]; the two
  // corner crossings appear as point spans but never count as blockers.
  CHECK(b.right.spans == std::vector<std::pair<int64_t, int64_t>>{{0, 0}, {2, 4}});
  CHECK_FALSE(b.right.empty());
  CHECK(b.bottom.spans == std::vector<std::pair<int64_t, int64_t>>{{0, 4}});
  // r=[0,2]x[0,1]: top side passes through the interior, so no top blocker.
  BlockerSet b2 = blockers(kL, R(0, 0, 2, 1));
  CHECK(b2.top.empty());
}

TEST_CASE("corner-only contact yields an empty blocker side") {
  // r=[0,2]x[0,1] inside the L: its top-right corner (2,1) lies on dP, but
  // corners are excluded, so the top blocker is empty.
  BlockerSet b = blockers(kL, R(0, 0, 2, 1));
  CHECK(b.top.spans == std::vector<std::pair<int64_t, int64_t>>{{0, 0}, {4, 4}});
  CHECK(b.top.empty());
}

TEST_CASE("is_maximal on spec examples") {
  CHECK(is_maximal(kBox, R(0, 0, 10, 5)));
  CHECK_FALSE(is_maximal(kBox, R(1, 0, 9, 5)));
  CHECK(is_maximal(kL, R(0, 0, 4, 1)));
  CHECK(is_maximal(kL, R(0, 0, 2, 2)));
  CHECK_FALSE(is_maximal(kL, R(0, 0, 2, 1)));
  CHECK_THROWS_AS(is_maximal(kBox, R(5, 0, 11, 5)), Error);
}

TEST_CASE("enumerate_maximal matches hand counts and brute force") {
  RectFamily box = enumerate_maximal(kBox);
  REQUIRE(box.size() == 1);
  CHECK(box[0] == R(0, 0, 10, 5));

  RectFamily l = enumerate_maximal(kL);
  REQUIRE(l.size() == 2);
  CHECK(l.index_of(R(0, 0, 4, 1)).has_value());
  CHECK(l.index_of(R(0, 0, 2, 2)).has_value());
  CHECK(l.rects == oracle::brute_force_maximal(kL));

  RectFamily plus = enumerate_maximal(kPlus);
  REQUIRE(plus.size() == 2);
  CHECK(plus.index_of(R(2, 0, 4, 6)).has_value());
  CHECK(plus.index_of(R(0, 2, 6, 4)).has_value());
  CHECK(plus.rects == oracle::brute_force_maximal(kPlus));
}

TEST_CASE("every enumerated rect passes is_maximal") {
  for (const SimplePolygon* p : {&kL, &kBox, &kPlus})
    for (const Rect& r : enumerate_maximal(*p).rects) CHECK(is_maximal(*p, r));
}

TEST_CASE("extension grows one side to its limit and is idempotent") {
  CHECK(extension(kBox, R(1, 0, 9, 5), Dir::Right) == R(1, 0, 10, 5));
  CHECK(extension(kL, R(0, 0, 2, 1), Dir::Top) == R(0, 0, 2, 2));
  CHECK(extension(kL, R(0, 0, 2, 1), Dir::Right) == R(0, 0, 4, 1));
  Rect once = extension(kL, R(0, 0, 2, 1), Dir::Top);
  CHECK(extension(kL, once, Dir::Top) == once);
}

TEST_CASE("vertical blocker lines") {
  auto box = vertical_blocker_lines(kBox, R(0, 0, 10, 5));
  REQUIRE(box.size() == 1);
  CHECK(box[0] == std::pair<int64_t, int64_t>{0, 20});

  auto stem = vertical_blocker_lines(kPlus, R(2, 0, 4, 6));
  REQUIRE(stem.size() == 1);
  CHECK(stem[0] == std::pair<int64_t, int64_t>{4, 8});

  // The bar's top/bottom are boundary only at the stem-free ends.
  auto bar = vertical_blocker_lines(kPlus, R(0, 2, 6, 4));
  REQUIRE(bar.size() == 2);
  CHECK(bar[0] == std::pair<int64_t, int64_t>{0, 4});
  CHECK(bar[1] == std::pair<int64_t, int64_t>{8, 12});
}

TEST_CASE("fuzz: enumeration equals brute force on random polygons") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    SimplePolygon p = gen_random(10, 8, seed);
    CHECK(enumerate_maximal(p).rects == oracle::brute_force_maximal(p));
  }
}

TEST_CASE("fuzz: no two maximal rects share both top and bottom blocker sets") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    SimplePolygon p = gen_random(12, 9, seed);
    RectFamily fam = enumerate_maximal(p);
    std::vector<BlockerSet> bs;
    for (const Rect& r : fam.rects) bs.push_back(blockers(p, r));
    for (size_t i = 0; i < fam.size(); ++i)
      for (size_t j = i + 1; j < fam.size(); ++j) {
        bool same_tb = bs[i].top.line == bs[j].top.line && bs[i].top.spans == bs[j].top.spans &&
                       bs[i].bottom.line == bs[j].bottom.line &&
                       bs[i].bottom.spans == bs[j].bottom.spans;
        bool same_lr = bs[i].left.line == bs[j].left.line && bs[i].left.spans == bs[j].left.spans &&
                       bs[i].right.line == bs[j].right.line &&
                       bs[i].right.spans == bs[j].right.spans;
        CHECK_FALSE(same_tb);
        CHECK_FALSE(same_lr);
      }
  }
}

TEST_CASE("fuzz: same-floor anchored families have laminar spans") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    SimplePolygon p = gen_random(12, 9, seed);
    RectFamily fam = enumerate_maximal(p);
    // Group by bottom blocker side: rects whose bottom blockers lie on a
    // common boundary side must have laminar x-projections.
    for (const Side& s : p.sides()) {
      if (!s.horizontal()) continue;
      std::vector<Rect> anchored;
      for (const Rect& r : fam.rects) {
        if (r.y1 != s.line()) continue;
        BlockerSet b = blockers(p, r);
        // bottom blocker intersects this side's span
        bool on = false;
        for (auto [lo, hi] : b.bottom.spans)
          if (std::max(lo, s.lo()) <= std::min(hi, s.hi())) on = true;
        if (on && s.lo() <= r.x1 && r.x2 <= s.hi()) anchored.push_back(r);
      }
      for (size_t i = 0; i < anchored.size(); ++i)
        for (size_t j = i + 1; j < anchored.size(); ++j) {
          const Rect &a = anchored[i], &b = anchored[j];
          bool overlap = std::max(a.x1, b.x1) < std::min(a.x2, b.x2);
          if (!overlap) continue;
          bool nested = (a.x1 <= b.x1 && b.x2 <= a.x2) || (b.x1 <= a.x1 && a.x2 <= b.x2);
          CHECK(nested);
        }
    }
  }
}
