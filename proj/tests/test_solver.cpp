#include "doctest.h"
#include "oracles.hpp"
#include "rectcover/instances.hpp"
#include "rectcover/solver.hpp"

using namespace rectcover;

namespace {

SimplePolygon upoly(std::initializer_list<Point> pts) { return polygon_from_vertices(pts); }

const SimplePolygon kBox = upoly({{0, 0}, {10, 0}, {10, 5}, {0, 5}});
const SimplePolygon kL = upoly({{0, 0}, {4, 0}, {4, 1}, {2, 1}, {2, 2}, {0, 2}});

}  // namespace

TEST_CASE("coverage_check basics") {
  RectFamily fam = enumerate_maximal(kBox);
  CHECK(coverage_check(kBox, fam, {0}, CoverTarget::Boundary));
  CHECK(coverage_check(kBox, fam, {0}, CoverTarget::Interior));
  CHECK(coverage_check(kBox, fam, {0}, CoverTarget::Corner));
  CHECK_FALSE(coverage_check(kBox, fam, {}, CoverTarget::Boundary));
}

TEST_CASE("exact_cover on trivial polygons") {
  for (CoverTarget t : {CoverTarget::Boundary, CoverTarget::Corner, CoverTarget::Interior}) {
    ExactCoverResult r = exact_cover(kBox, t, 1'000'000);
    CHECK(r.exact);
    CHECK(r.solution.chosen.size() == 1);
  }
  ExactCoverResult l = exact_cover(kL, CoverTarget::Boundary, 1'000'000);
  CHECK(l.exact);
  CHECK(l.solution.chosen.size() == 2);
}

TEST_CASE("local search: box collapses to one rect, L stays at the optimum") {
  CoverSolution box = local_search_cover(kBox, CoverTarget::Boundary, 1);
  CHECK(box.chosen.size() == 1);
  CoverSolution l = local_search_cover(kL, CoverTarget::Boundary, 1);
  CHECK(l.chosen.size() == 2);
  CHECK(coverage_check(kL, enumerate_maximal(kL), l.chosen, CoverTarget::Boundary));
}

TEST_CASE("node limit surfaces as a non-exact incumbent") {
  InstanceBundle beta = gen_beta(2);
  ExactCoverResult r = exact_cover(beta.polygon, CoverTarget::Interior, 3);
  CHECK_FALSE(r.exact);
  CHECK(coverage_check(beta.polygon, enumerate_maximal(beta.polygon), r.solution.chosen,
                       CoverTarget::Interior));
}

TEST_CASE("beta(2) quantities: theta_b=6, theta=8") {
  InstanceBundle beta = gen_beta(2);
  ExactCoverResult b = exact_cover(beta.polygon, CoverTarget::Boundary, 5'000'000);
  REQUIRE(b.exact);
  CHECK(b.solution.chosen.size() == 6);
  ExactCoverResult in = exact_cover(beta.polygon, CoverTarget::Interior, 5'000'000);
  REQUIRE(in.exact);
  CHECK(in.solution.chosen.size() == 8);
}

TEST_CASE("max_antirectangle on tiny polygons") {
  AntirectangleResult box = max_antirectangle(kBox, 1'000'000);
  CHECK(box.exact);
  CHECK(box.points.size() == 1);
  AntirectangleResult l = max_antirectangle(kL, 1'000'000);
  CHECK(l.exact);
  CHECK(l.points.size() == 2);
}

TEST_CASE("rect visibility is bounding-box containment") {
  CHECK(rect_visible(kL, Point::of(0, 0), Point::of(4, 1)));
  CHECK_FALSE(rect_visible(kL, Point::of(4, 0), Point::of(0, 2)));
}

TEST_CASE("fuzz: exact_cover equals subset enumeration; local search dominates it") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SimplePolygon p = gen_random(10, 7, seed);
    RectFamily fam = enumerate_maximal(p);
    if (fam.size() > 12) continue;
    for (CoverTarget t : {CoverTarget::Boundary, CoverTarget::Corner, CoverTarget::Interior}) {
      ExactCoverResult ex = exact_cover(p, t, 5'000'000);
      REQUIRE(ex.exact);
      auto oracle_size = oracle::min_cover_by_enumeration(p, t, 12);
      REQUIRE(oracle_size.has_value());
      CHECK(ex.solution.chosen.size() == *oracle_size);
      CoverSolution ls = local_search_cover(p, t, 2);
      CHECK(coverage_check(p, fam, ls.chosen, t));
      CHECK(ls.chosen.size() >= ex.solution.chosen.size());
      // With unbounded locality the optimal swap is available directly.
      CoverSolution full = local_search_cover(p, t, static_cast<int>(fam.size()));
      CHECK(full.chosen.size() == ex.solution.chosen.size());
    }
  }
}

TEST_CASE("fuzz: theta_c <= theta_b <= theta") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    SimplePolygon p = gen_random(12, 8, seed);
    ExactCoverResult c = exact_cover(p, CoverTarget::Corner, 5'000'000);
    ExactCoverResult b = exact_cover(p, CoverTarget::Boundary, 5'000'000);
    ExactCoverResult i = exact_cover(p, CoverTarget::Interior, 5'000'000);
    REQUIRE(c.exact);
    REQUIRE(b.exact);
    REQUIRE(i.exact);
    CHECK(c.solution.chosen.size() <= b.solution.chosen.size());
    CHECK(b.solution.chosen.size() <= i.solution.chosen.size());
  }
}

TEST_CASE("fuzz: antirectangle never exceeds the interior cover size") {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    SimplePolygon p = gen_random(10, 7, seed);
    AntirectangleResult a = max_antirectangle(p, 5'000'000);
    ExactCoverResult t = exact_cover(p, CoverTarget::Interior, 5'000'000);
    REQUIRE(a.exact);
    REQUIRE(t.exact);
    CHECK(a.points.size() <= t.solution.chosen.size());
  }
}

TEST_CASE("corner cover on the antirectangle polygon matches enumeration") {
  InstanceBundle b = gen_antirectangle(3, 3);
  RectFamily rk = enumerate_maximal(b.polygon);
  ExactCoverResult ex = exact_cover(b.polygon, CoverTarget::Corner, 5'000'000);
  REQUIRE(ex.exact);
  auto oracle_size = oracle::min_cover_by_enumeration(b.polygon, CoverTarget::Corner, 40);
  REQUIRE(oracle_size.has_value());
  CHECK(ex.solution.chosen.size() == *oracle_size);
}

TEST_CASE("beta(4) formulas hold with a raised node budget") {
  InstanceBundle b = gen_beta(4);
  ExactCoverResult tb = exact_cover(b.polygon, CoverTarget::Boundary, 200'000'000);
  ExactCoverResult ti = exact_cover(b.polygon, CoverTarget::Interior, 200'000'000);
  REQUIRE(tb.exact);
  REQUIRE(ti.exact);
  CHECK(tb.solution.chosen.size() == 10);
  CHECK(ti.solution.chosen.size() == 14);
}

TEST_CASE("the beta corridor family itself covers the boundary") {
  InstanceBundle b = gen_beta(2);
  RectFamily rk = enumerate_maximal(b.polygon);
  std::vector<size_t> chosen;
  for (const Rect& r : b.family->rects) chosen.push_back(*rk.index_of(r));
  CHECK(coverage_check(b.polygon, rk, chosen, CoverTarget::Boundary));
  CHECK_FALSE(coverage_check(b.polygon, rk, chosen, CoverTarget::Interior));
}
