#pragma once

#include <set>
#include <vector>

#include "rectcover/geometry.hpp"
#include "rectcover/maxrect.hpp"
#include "rectcover/planarity.hpp"

namespace rectcover {

enum class CoverTarget { Boundary, Corner, Interior };

const char* target_name(CoverTarget t);

struct WitnessSet {
  CoverTarget target = CoverTarget::Boundary;
  std::vector<Point> points;  // sorted, deduplicated
};

// Finite witness set at which hyperedges are evaluated. Hyperedge membership
// is piecewise constant along the boundary between rectangle side-line events,
// so events plus midpoints of the gaps capture every distinct hyperedge.
WitnessSet witness_points(const SimplePolygon& poly, const RectFamily& fam, CoverTarget target);

// Indices of family members containing p (closed semantics), ascending.
std::vector<size_t> hyperedge(const RectFamily& fam, const Point& p);

struct SupportViolation {
  Point witness;
  std::vector<std::vector<size_t>> components;  // the disconnected hyperedge pieces
};

std::vector<SupportViolation> verify_support(const SimplePolygon& poly, const RectFamily& fam,
                                             const SupportGraph& graph, CoverTarget target);

// Intersection of all boundary hyperedges of size >= 2; the full index set
// when no such hyperedge exists (empty-intersection convention).
std::vector<size_t> kernel(const SimplePolygon& poly, const RectFamily& fam);

bool is_proper(const SimplePolygon& poly, const RectFamily& fam);

// Pairs {i,j} that appear as a complete hyperedge of size exactly 2 at some
// witness: such pairs are edges of every support graph.
std::set<std::pair<size_t, size_t>> forced_support_edges(const SimplePolygon& poly,
                                                         const RectFamily& fam,
                                                         CoverTarget target);

}  // namespace rectcover
