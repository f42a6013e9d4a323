#include "rectcover/planarity.hpp"

#include <algorithm>
#include <cassert>

namespace rectcover {

void SupportGraph::add_edge(size_t a, size_t b) {
  if (a == b) return;
  if (a > b) std::swap(a, b);
  edges.insert({a, b});
}

void SupportGraph::remove_edge(size_t a, size_t b) {
  if (a > b) std::swap(a, b);
  edges.erase({a, b});
}

bool SupportGraph::has_edge(size_t a, size_t b) const {
  if (a > b) std::swap(a, b);
  return edges.count({a, b}) > 0;
}

std::vector<std::vector<size_t>> SupportGraph::adjacency() const {
  std::vector<std::vector<size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

DfsOrientation dfs_orient(const SupportGraph& graph, size_t root) {
  if (root >= graph.n) fail(ErrorCode::BadParameter, "dfs root out of range");
  DfsOrientation o;
  o.root = root;
  o.parent.assign(graph.n, -1);
  o.height.assign(graph.n, -1);
  o.tin.assign(graph.n, 0);
  o.tout.assign(graph.n, 0);
  auto adj = graph.adjacency();
  size_t clock = 0;
  // Iterative DFS, neighbors in ascending index order.
  std::vector<std::pair<size_t, size_t>> stack;  // (vertex, next neighbor position)
  o.height[root] = 0;
  o.tin[root] = clock++;
  o.order.push_back(root);
  stack.push_back({root, 0});
  while (!stack.empty()) {
    auto& [u, pos] = stack.back();
    if (pos < adj[u].size()) {
      size_t v = adj[u][pos++];
      if (o.height[v] == -1) {
        o.parent[v] = static_cast<int64_t>(u);
        o.height[v] = o.height[u] + 1;
        o.tin[v] = clock++;
        o.order.push_back(v);
        o.tree_edges.push_back({u, v});
        stack.push_back({v, 0});
      } else if (static_cast<int64_t>(v) != o.parent[u] && o.height[v] < o.height[u]) {
        o.cotree_edges.push_back({u, v});
      }
    } else {
      o.tout[u] = clock++;
      stack.pop_back();
    }
  }
  for (size_t v = 0; v < graph.n; ++v)
    if (o.height[v] == -1) o.unreached.push_back(v);
  // lowvert[v]: lowest-height vertex reachable from v's subtree with at most
  // one cotree edge; propagate in reverse discovery order.
  std::vector<size_t> lowvert(graph.n);
  for (size_t v = 0; v < graph.n; ++v) lowvert[v] = v;
  for (const auto& [u, w] : o.cotree_edges) {
    if (o.height[w] < o.height[lowvert[u]]) lowvert[u] = w;
    o.low[{u, w}] = w;
  }
  for (auto it = o.order.rbegin(); it != o.order.rend(); ++it) {
    size_t v = *it;
    if (o.parent[v] >= 0) {
      size_t p = static_cast<size_t>(o.parent[v]);
      if (o.height[lowvert[v]] < o.height[lowvert[p]]) lowvert[p] = lowvert[v];
      o.low[{p, v}] = lowvert[v];
    }
  }
  return o;
}

namespace {

// Union-find with parity: tracks whether two cotree edges are in the same or
// opposite color classes.
struct ParityDsu {
  std::vector<size_t> parent;
  std::vector<uint8_t> parity;  // parity to parent

  explicit ParityDsu(size_t n) : parent(n), parity(n, 0) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }

  std::pair<size_t, uint8_t> find(size_t x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] = static_cast<uint8_t>(parity[x] ^ p);
    return {r, parity[x]};
  }

  // rel = 0 same class, 1 different; returns false on contradiction.
  bool merge(size_t a, size_t b, uint8_t rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return static_cast<uint8_t>(pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = static_cast<uint8_t>(pa ^ pb ^ rel);
    return true;
  }
};

struct ComponentLr {
  bool ok = false;
  std::optional<Fork> violation;
  std::map<DirectedEdge, EdgeClass> color;
};

// Return edges of an outgoing edge e at vertex u, as indices into cotree list.
std::vector<size_t> return_edges(const DfsOrientation& o, size_t u, const DirectedEdge& e,
                                 const std::vector<DirectedEdge>& cotree) {
  std::vector<size_t> out;
  bool is_tree = o.parent[e.second] == static_cast<int64_t>(e.first) &&
                 o.height[e.second] == o.height[e.first] + 1;
  if (!is_tree) {
    for (size_t i = 0; i < cotree.size(); ++i)
      if (cotree[i] == e) out.push_back(i);
    return out;
  }
  size_t child = e.second;
  for (size_t i = 0; i < cotree.size(); ++i) {
    const auto& [x, w] = cotree[i];
    if (o.in_subtree(x, child) && o.height[w] < o.height[u]) out.push_back(i);
  }
  return out;
}

ComponentLr lr_component(const SupportGraph& graph, const DfsOrientation& o) {
  ComponentLr res;
  const auto& cotree = o.cotree_edges;
  ParityDsu dsu(cotree.size());
  // Outgoing edges per vertex: tree children plus cotree edges leaving it.
  std::vector<std::vector<DirectedEdge>> outgoing(graph.n);
  for (const auto& e : o.tree_edges) outgoing[e.first].push_back(e);
  for (const auto& e : o.cotree_edges) outgoing[e.first].push_back(e);

  for (size_t u : o.order) {
    const auto& outs = outgoing[u];
    std::vector<std::vector<size_t>> rets(outs.size());
    for (size_t i = 0; i < outs.size(); ++i) rets[i] = return_edges(o, u, outs[i], cotree);
    for (size_t i = 0; i < outs.size(); ++i) {
      for (size_t j = i + 1; j < outs.size(); ++j) {
        auto low_i = o.low.find(outs[i]);
        auto low_j = o.low.find(outs[j]);
        if (low_i == o.low.end() || low_j == o.low.end()) continue;
        int64_t hi = o.height[low_i->second];
        int64_t hj = o.height[low_j->second];
        std::vector<size_t> si, sj;
        for (size_t r : rets[i])
          if (o.height[cotree[r].second] > hj) si.push_back(r);
        for (size_t r : rets[j])
          if (o.height[cotree[r].second] > hi) sj.push_back(r);
        bool ok = true;
        for (size_t k = 1; k < si.size() && ok; ++k) ok = dsu.merge(si[0], si[k], 0);
        for (size_t k = 1; k < sj.size() && ok; ++k) ok = dsu.merge(sj[0], sj[k], 0);
        if (ok && !si.empty() && !sj.empty()) ok = dsu.merge(si[0], sj[0], 1);
        if (!ok) {
          res.ok = false;
          res.violation = Fork{u, outs[i], outs[j]};
          return res;
        }
      }
    }
  }
  res.ok = true;
  for (size_t i = 0; i < cotree.size(); ++i) {
    auto [root, par] = dsu.find(i);
    (void)root;
    res.color[cotree[i]] = par ? EdgeClass::Right : EdgeClass::Left;
  }
  return res;
}

}  // namespace

PlanarityResult lr_planarity(const SupportGraph& graph) {
  PlanarityResult result;
  std::vector<bool> seen(graph.n, false);
  for (size_t v = 0; v < graph.n; ++v) {
    if (seen[v]) continue;
    DfsOrientation o = dfs_orient(graph, v);
    for (size_t u : o.order) seen[u] = true;
    ComponentLr comp = lr_component(graph, o);
    if (!comp.ok) {
      result.planar = false;
      result.violation = comp.violation;
      result.coloring.color.clear();
      return result;
    }
    result.coloring.color.insert(comp.color.begin(), comp.color.end());
  }
  result.planar = true;
  return result;
}

bool coloring_satisfies(const SupportGraph& graph, const DfsOrientation& o,
                        const LrColoring& coloring) {
  const auto& cotree = o.cotree_edges;
  std::vector<std::vector<DirectedEdge>> outgoing(graph.n);
  for (const auto& e : o.tree_edges) outgoing[e.first].push_back(e);
  for (const auto& e : o.cotree_edges) outgoing[e.first].push_back(e);
  auto cls = [&](size_t idx) { return coloring.color.at(cotree[idx]); };
  for (size_t u : o.order) {
    const auto& outs = outgoing[u];
    std::vector<std::vector<size_t>> rets(outs.size());
    for (size_t i = 0; i < outs.size(); ++i) rets[i] = return_edges(o, u, outs[i], cotree);
    for (size_t i = 0; i < outs.size(); ++i)
      for (size_t j = i + 1; j < outs.size(); ++j) {
        auto low_i = o.low.find(outs[i]);
        auto low_j = o.low.find(outs[j]);
        if (low_i == o.low.end() || low_j == o.low.end()) continue;
        int64_t hi = o.height[low_i->second];
        int64_t hj = o.height[low_j->second];
        std::vector<size_t> si, sj;
        for (size_t r : rets[i])
          if (o.height[cotree[r].second] > hj) si.push_back(r);
        for (size_t r : rets[j])
          if (o.height[cotree[r].second] > hi) sj.push_back(r);
        for (size_t k = 1; k < si.size(); ++k)
          if (cls(si[k]) != cls(si[0])) return false;
        for (size_t k = 1; k < sj.size(); ++k)
          if (cls(sj[k]) != cls(sj[0])) return false;
        if (!si.empty() && !sj.empty() && cls(si[0]) == cls(sj[0])) return false;
      }
  }
  return true;
}

std::set<std::pair<size_t, size_t>> shortcut_cotree(const SupportGraph& graph,
                                                    const DfsOrientation& o,
                                                    const LrColoring& coloring, size_t v) {
  (void)coloring;  // the color classes transfer verbatim to the shortcut edges
  if (v != o.root) fail(ErrorCode::NotRoot, "shortcut_cotree requires the DFS root");
  std::vector<size_t> children;
  for (const auto& e : o.tree_edges)
    if (e.first == v) children.push_back(e.second);
  auto child_of = [&](size_t x) -> size_t {
    for (size_t w : children)
      if (o.in_subtree(x, w)) return w;
    fail(ErrorCode::InvalidInputSupport, "vertex outside every root subtree");
  };
  std::set<std::pair<size_t, size_t>> e1;
  auto add = [&](size_t a, size_t b) {
    if (a == b) return;
    if (a > b) std::swap(a, b);
    e1.insert({a, b});
  };
  for (const auto& [a, b] : graph.edges) {
    if (a == v || b == v) continue;
    // Keep every edge not incident to the root. (Edges of other components
    // are not in this orientation but are kept as well.)
    add(a, b);
  }
  for (const auto& [x, w] : o.cotree_edges)
    if (w == v) add(x, child_of(x));
  return e1;
}

bool planar_with_face(const SupportGraph& graph, const std::vector<size_t>& face_vertices) {
  for (size_t v : face_vertices)
    if (v >= graph.n) fail(ErrorCode::BadParameter, "face vertex out of range");
  SupportGraph aug(graph.n + 1);
  aug.edges = graph.edges;
  for (size_t v : face_vertices) aug.add_edge(v, graph.n);
  return lr_planarity(aug).planar;
}

}  // namespace rectcover
