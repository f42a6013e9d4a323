#include "oracles.hpp"

#include <algorithm>
#include <functional>

#include "rectcover/solver.hpp"

namespace rectcover::oracle {

std::vector<Rect> brute_force_maximal(const SimplePolygon& poly) {
  Rect bb = poly.bbox();
  std::vector<Rect> out;
  for (int64_t x1 = bb.x1; x1 < bb.x2; x1 += 2)
    for (int64_t x2 = x1 + 2; x2 <= bb.x2; x2 += 2)
      for (int64_t y1 = bb.y1; y1 < bb.y2; y1 += 2)
        for (int64_t y2 = y1 + 2; y2 <= bb.y2; y2 += 2) {
          if (!poly.contains_box(x1, y1, x2, y2)) continue;
          if (poly.contains_box(x1, y1, x2, y2 + 1)) continue;
          if (poly.contains_box(x1, y1 - 1, x2, y2)) continue;
          if (poly.contains_box(x1 - 1, y1, x2, y2)) continue;
          if (poly.contains_box(x1, y1, x2 + 1, y2)) continue;
          out.push_back(Rect{x1, y1, x2, y2});
        }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Does g contain a minor given by `parts` label classes with required
// pairwise adjacency `need(a,b)`? Exhaustive assignment with pruning.
bool has_minor(const SupportGraph& g, size_t parts,
               const std::function<bool(size_t, size_t)>& need) {
  size_t n = g.n;
  auto adj = g.adjacency();
  std::vector<int> label(n, -1);  // -1 unassigned, parts = unused
  std::function<bool()> feasible = [&]() {
    // Each class non-empty and connected; required cross edges present.
    for (size_t c = 0; c < parts; ++c) {
      std::vector<size_t> members;
      for (size_t v = 0; v < n; ++v)
        if (label[v] == static_cast<int>(c)) members.push_back(v);
      if (members.empty()) return false;
      std::vector<bool> seen(n, false);
      std::vector<size_t> stack{members[0]};
      seen[members[0]] = true;
      size_t cnt = 0;
      while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        ++cnt;
        for (size_t w : adj[u])
          if (label[w] == static_cast<int>(c) && !seen[w]) {
            seen[w] = true;
            stack.push_back(w);
          }
      }
      if (cnt != members.size()) return false;
    }
    for (size_t a = 0; a < parts; ++a)
      for (size_t b = a + 1; b < parts; ++b) {
        if (!need(a, b)) continue;
        bool found = false;
        for (size_t v = 0; v < n && !found; ++v) {
          if (label[v] != static_cast<int>(a)) continue;
          for (size_t w : adj[v])
            if (label[w] == static_cast<int>(b)) {
              found = true;
              break;
            }
        }
        if (!found) return false;
      }
    return true;
  };
  std::function<bool(size_t)> rec = [&](size_t v) -> bool {
    if (v == n) return feasible();
    size_t left = n - v;
    size_t empty = 0;
    std::vector<bool> used(parts, false);
    for (size_t u = 0; u < v; ++u)
      if (label[u] >= 0) used[static_cast<size_t>(label[u])] = true;
    for (size_t c = 0; c < parts; ++c)
      if (!used[c]) ++empty;
    if (empty > left) return false;
    for (int c = 0; c < static_cast<int>(parts); ++c) {
      label[v] = c;
      if (rec(v + 1)) return true;
    }
    label[v] = -1;  // unused
    if (rec(v + 1)) return true;
    return false;
  };
  return rec(0);
}

}  // namespace

bool planar_by_minors(const SupportGraph& g) {
  auto always = [](size_t, size_t) { return true; };
  if (has_minor(g, 5, always)) return false;
  auto bipartite = [](size_t a, size_t b) { return (a < 3) != (b < 3); };
  if (has_minor(g, 6, bipartite)) return false;
  return true;
}

std::vector<std::set<std::pair<size_t, size_t>>> minimum_supports(const SimplePolygon& poly,
                                                                  const RectFamily& fam) {
  size_t n = fam.size();
  std::vector<std::pair<size_t, size_t>> all_edges;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) all_edges.push_back({i, j});
  WitnessSet w = witness_points(poly, fam, CoverTarget::Boundary);
  std::set<std::vector<size_t>> hyperedges;
  for (const Point& p : w.points) {
    auto e = hyperedge(fam, p);
    if (e.size() >= 2) hyperedges.insert(e);
  }
  auto supports = [&](const std::set<std::pair<size_t, size_t>>& edges) {
    SupportGraph g(n);
    for (const auto& [a, b] : edges) g.add_edge(a, b);
    auto adj = g.adjacency();
    for (const auto& e : hyperedges) {
      std::vector<bool> in(n, false), seen(n, false);
      for (size_t i : e) in[i] = true;
      std::vector<size_t> stack{e[0]};
      seen[e[0]] = true;
      size_t cnt = 0;
      while (!stack.empty()) {
        size_t u = stack.back();
        stack.pop_back();
        ++cnt;
        for (size_t v : adj[u])
          if (in[v] && !seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
      }
      if (cnt != e.size()) return false;
    }
    return true;
  };
  std::vector<std::set<std::pair<size_t, size_t>>> found;
  for (size_t k = 0; k <= all_edges.size(); ++k) {
    std::vector<size_t> pick;
    std::function<void(size_t)> rec = [&](size_t from) {
      if (pick.size() == k) {
        std::set<std::pair<size_t, size_t>> edges;
        for (size_t i : pick) edges.insert(all_edges[i]);
        if (supports(edges)) found.push_back(edges);
        return;
      }
      for (size_t i = from; i + (k - pick.size()) <= all_edges.size(); ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (!found.empty()) break;
  }
  return found;
}

std::optional<size_t> min_cover_by_enumeration(const SimplePolygon& poly, CoverTarget target,
                                               size_t max_family) {
  RectFamily fam = enumerate_maximal(poly);
  if (fam.size() > max_family) return std::nullopt;
  WitnessSet w = witness_points(poly, fam, target);
  size_t n = fam.size();
  for (size_t k = 1; k <= n; ++k) {
    std::vector<size_t> pick;
    bool ok = false;
    std::function<void(size_t)> rec = [&](size_t from) {
      if (ok) return;
      if (pick.size() == k) {
        for (const Point& p : w.points) {
          bool hit = false;
          for (size_t i : pick)
            if (fam[i].contains(p)) {
              hit = true;
              break;
            }
          if (!hit) return;
        }
        ok = true;
        return;
      }
      for (size_t i = from; i + (k - pick.size()) <= n && !ok; ++i) {
        pick.push_back(i);
        rec(i + 1);
        pick.pop_back();
      }
    };
    rec(0);
    if (ok) return k;
  }
  return std::nullopt;
}

size_t max_independent_set(const std::vector<std::vector<bool>>& adj) {
  size_t n = adj.size();
  size_t best = 0;
  std::vector<size_t> chosen;
  std::function<void(size_t)> rec = [&](size_t v) {
    if (chosen.size() + (n - v) <= best) return;
    if (v == n) {
      best = std::max(best, chosen.size());
      return;
    }
    bool can = true;
    for (size_t u : chosen)
      if (adj[u][v]) {
        can = false;
        break;
      }
    if (can) {
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
    rec(v + 1);
  };
  rec(0);
  return best;
}

size_t max_antirectangle_over(const SimplePolygon& poly, const std::vector<Point>& candidates) {
  size_t n = candidates.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (rect_visible(poly, candidates[i], candidates[j])) adj[i][j] = adj[j][i] = true;
  return max_independent_set(adj);
}

}  // namespace rectcover::oracle
