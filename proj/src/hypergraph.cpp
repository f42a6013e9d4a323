#include "rectcover/hypergraph.hpp"

#include <algorithm>
#include <cassert>

namespace rectcover {

const char* target_name(CoverTarget t) {
  switch (t) {
    case CoverTarget::Boundary: return "boundary";
    case CoverTarget::Corner: return "corner";
    case CoverTarget::Interior: return "interior";
  }
  return "?";
}

namespace {

std::vector<Point> boundary_witnesses(const SimplePolygon& poly, const RectFamily& fam) {
  std::vector<Point> out;
  for (const Side& s : poly.sides()) {
    // Event positions along the side: endpoints plus crossings of
    // perpendicular rectangle side-lines.
    std::vector<int64_t> ev{s.lo(), s.hi()};
    for (const Rect& r : fam) {
      if (s.horizontal()) {
        if (s.lo() <= r.x1 && r.x1 <= s.hi()) ev.push_back(r.x1);
        if (s.lo() <= r.x2 && r.x2 <= s.hi()) ev.push_back(r.x2);
      } else {
        if (s.lo() <= r.y1 && r.y1 <= s.hi()) ev.push_back(r.y1);
        if (s.lo() <= r.y2 && r.y2 <= s.hi()) ev.push_back(r.y2);
      }
    }
    std::sort(ev.begin(), ev.end());
    ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
    std::vector<int64_t> pos;
    for (size_t i = 0; i < ev.size(); ++i) {
      pos.push_back(ev[i]);
      if (i + 1 < ev.size()) pos.push_back((ev[i] + ev[i + 1]) / 2);
    }
    for (int64_t v : pos)
      out.push_back(s.horizontal() ? Point{v, s.line()} : Point{s.line(), v});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point> interior_witnesses(const SimplePolygon& poly, const RectFamily& fam) {
  std::vector<int64_t> xs = poly.xlines();
  std::vector<int64_t> ys = poly.ylines();
  for (const Rect& r : fam) {
    xs.push_back(r.x1);
    xs.push_back(r.x2);
    ys.push_back(r.y1);
    ys.push_back(r.y2);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<Point> out;
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    for (size_t j = 0; j + 1 < ys.size(); ++j) {
      assert((xs[i] + xs[i + 1]) % 2 == 0 && (ys[j] + ys[j + 1]) % 2 == 0);
      Point c{(xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2};
      if (poly.contains_point(c)) out.push_back(c);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

WitnessSet witness_points(const SimplePolygon& poly, const RectFamily& fam, CoverTarget target) {
  WitnessSet w;
  w.target = target;
  switch (target) {
    case CoverTarget::Boundary: w.points = boundary_witnesses(poly, fam); break;
    case CoverTarget::Corner: {
      w.points = poly.vertices();
      std::sort(w.points.begin(), w.points.end());
      break;
    }
    case CoverTarget::Interior: w.points = interior_witnesses(poly, fam); break;
  }
  return w;
}

std::vector<size_t> hyperedge(const RectFamily& fam, const Point& p) {
  std::vector<size_t> out;
  for (size_t i = 0; i < fam.size(); ++i)
    if (fam[i].contains(p)) out.push_back(i);
  return out;
}

std::vector<SupportViolation> verify_support(const SimplePolygon& poly, const RectFamily& fam,
                                             const SupportGraph& graph, CoverTarget target) {
  if (graph.n != fam.size()) fail(ErrorCode::BadParameter, "graph size != family size");
  std::vector<SupportViolation> violations;
  WitnessSet w = witness_points(poly, fam, target);
  auto adj = graph.adjacency();
  std::set<std::vector<size_t>> seen;  // deduplicate identical hyperedges
  for (const Point& p : w.points) {
    std::vector<size_t> e = hyperedge(fam, p);
    if (e.size() <= 1) continue;
    if (!seen.insert(e).second) continue;
    // Connectivity of the induced subgraph on e.
    std::vector<size_t> comp(e.size(), SIZE_MAX);
    size_t ncomp = 0;
    for (size_t s = 0; s < e.size(); ++s) {
      if (comp[s] != SIZE_MAX) continue;
      std::vector<size_t> stack{s};
      comp[s] = ncomp;
      while (!stack.empty()) {
        size_t ci = stack.back();
        stack.pop_back();
        for (size_t nb : adj[e[ci]]) {
          auto it = std::lower_bound(e.begin(), e.end(), nb);
          if (it == e.end() || *it != nb) continue;
          size_t ni = static_cast<size_t>(it - e.begin());
          if (comp[ni] == SIZE_MAX) {
            comp[ni] = ncomp;
            stack.push_back(ni);
          }
        }
      }
      ++ncomp;
    }
    if (ncomp > 1) {
      SupportViolation v;
      v.witness = p;
      v.components.resize(ncomp);
      for (size_t i = 0; i < e.size(); ++i) v.components[comp[i]].push_back(e[i]);
      violations.push_back(std::move(v));
    }
  }
  return violations;
}

std::vector<size_t> kernel(const SimplePolygon& poly, const RectFamily& fam) {
  if (fam.size() == 0) fail(ErrorCode::BadParameter, "kernel of empty family");
  std::vector<bool> in(fam.size(), true);
  WitnessSet w = witness_points(poly, fam, CoverTarget::Boundary);
  for (const Point& p : w.points) {
    std::vector<size_t> e = hyperedge(fam, p);
    if (e.size() < 2) continue;
    std::vector<bool> here(fam.size(), false);
    for (size_t i : e) here[i] = true;
    for (size_t i = 0; i < fam.size(); ++i)
      if (!here[i]) in[i] = false;
  }
  std::vector<size_t> out;
  for (size_t i = 0; i < fam.size(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

bool is_proper(const SimplePolygon& poly, const RectFamily& fam) {
  std::vector<size_t> ker = kernel(poly, fam);
  if (ker.empty()) fail(ErrorCode::EmptyKernel, "is_proper requires a non-empty kernel");
  WitnessSet w = witness_points(poly, fam, CoverTarget::Boundary);
  std::vector<std::vector<size_t>> edges;
  for (const Point& p : w.points) edges.push_back(hyperedge(fam, p));
  for (size_t i = 0; i < fam.size(); ++i) {
    bool ok = false;
    for (const auto& e : edges) {
      if (!std::binary_search(e.begin(), e.end(), i)) continue;
      bool all = true;
      for (size_t k : ker)
        if (!std::binary_search(e.begin(), e.end(), k)) {
          all = false;
          break;
        }
      if (all) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

std::set<std::pair<size_t, size_t>> forced_support_edges(const SimplePolygon& poly,
                                                         const RectFamily& fam,
                                                         CoverTarget target) {
  std::set<std::pair<size_t, size_t>> out;
  WitnessSet w = witness_points(poly, fam, target);
  for (const Point& p : w.points) {
    std::vector<size_t> e = hyperedge(fam, p);
    if (e.size() == 2) out.insert({e[0], e[1]});
  }
  return out;
}

}  // namespace rectcover
