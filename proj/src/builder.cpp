#include "rectcover/builder.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace rectcover {

namespace {

std::string rect_str(const Rect& r) {
  std::ostringstream os;
  os << "[" << r.x1 << "," << r.x2 << "]x[" << r.y1 << "," << r.y2 << "]/2";
  return os.str();
}

void log_note(BuilderLog* log, const std::string& s) {
  if (log) log->note(s);
}

}  // namespace

bool share_boundary_point(const SimplePolygon& poly, const Rect& a, const Rect& b) {
  int64_t qx1 = std::max(a.x1, b.x1), qx2 = std::min(a.x2, b.x2);
  int64_t qy1 = std::max(a.y1, b.y1), qy2 = std::min(a.y2, b.y2);
  if (qx1 > qx2 || qy1 > qy2) return false;
  for (const Side& s : poly.sides()) {
    if (s.horizontal()) {
      if (s.line() < qy1 || s.line() > qy2) continue;
      if (std::max(qx1, s.lo()) <= std::min(qx2, s.hi())) return true;
    } else {
      if (s.line() < qx1 || s.line() > qx2) continue;
      if (std::max(qy1, s.lo()) <= std::min(qy2, s.hi())) return true;
    }
  }
  return false;
}

RTree horizontal_rtree(const SimplePolygon& poly) {
  const auto& xs = poly.xlines();
  const auto& ys = poly.ylines();
  size_t nx = xs.size() - 1;
  size_t ny = ys.size() - 1;
  std::map<int64_t, std::set<int64_t>> reflex_at;  // y-line -> reflex vertex x's
  for (size_t i = 0; i < poly.vertices().size(); ++i)
    if (!poly.convex()[i]) reflex_at[poly.vertices()[i].y].insert(poly.vertices()[i].x);

  std::vector<size_t> uf(nx * ny);
  std::iota(uf.begin(), uf.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  auto unite = [&](size_t a, size_t b) { uf[find(a)] = find(b); };
  auto id = [&](size_t i, size_t j) { return j * nx + i; };

  for (size_t j = 0; j < ny; ++j)
    for (size_t i = 0; i + 1 < nx; ++i)
      if (poly.cell_inside(i, j) && poly.cell_inside(i + 1, j)) unite(id(i, j), id(i + 1, j));

  // Vertical merges across a y-line, except through concave-corner chords.
  for (size_t j = 1; j < ny; ++j) {
    const std::set<int64_t>* refl = nullptr;
    auto it = reflex_at.find(ys[j]);
    if (it != reflex_at.end()) refl = &it->second;
    size_t i = 0;
    while (i < nx) {
      if (!(poly.cell_inside(i, j - 1) && poly.cell_inside(i, j))) {
        ++i;
        continue;
      }
      size_t k = i;
      while (k < nx && poly.cell_inside(k, j - 1) && poly.cell_inside(k, j)) ++k;
      bool cut = refl && (refl->count(xs[i]) > 0 || refl->count(xs[k]) > 0);
      if (!cut)
        for (size_t c = i; c < k; ++c) unite(id(c, j - 1), id(c, j));
      i = k;
    }
  }

  std::map<size_t, std::vector<std::pair<size_t, size_t>>> comps;
  for (size_t j = 0; j < ny; ++j)
    for (size_t i = 0; i < nx; ++i)
      if (poly.cell_inside(i, j)) comps[find(id(i, j))].push_back({i, j});

  RTree tree;
  std::map<size_t, size_t> comp_index;
  for (const auto& [root, cells] : comps) {
    size_t imin = SIZE_MAX, imax = 0, jmin = SIZE_MAX, jmax = 0;
    for (auto [i, j] : cells) {
      imin = std::min(imin, i);
      imax = std::max(imax, i);
      jmin = std::min(jmin, j);
      jmax = std::max(jmax, j);
    }
    if (cells.size() != (imax - imin + 1) * (jmax - jmin + 1))
      fail(ErrorCode::NotSimple, "R-tree piece is not a rectangle");
    RTreeNode node;
    node.rect = Rect{xs[imin], ys[jmin], xs[imax + 1], ys[jmax + 1]};
    comp_index[root] = tree.nodes.size();
    tree.nodes.push_back(node);
  }
  // Deterministic node order.
  std::vector<size_t> perm(tree.nodes.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
    const Rect& ra = tree.nodes[a].rect;
    const Rect& rb = tree.nodes[b].rect;
    return std::tie(ra.y1, ra.x1) < std::tie(rb.y1, rb.x1);
  });
  std::vector<size_t> inv(perm.size());
  for (size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  {
    std::vector<RTreeNode> sorted;
    for (size_t p : perm) sorted.push_back(tree.nodes[p]);
    tree.nodes = std::move(sorted);
    std::map<size_t, size_t> remapped;
    for (auto& [root, idx] : comp_index) remapped[root] = inv[idx];
    comp_index = std::move(remapped);
  }
  std::set<std::pair<size_t, size_t>> tree_edges;
  for (size_t j = 1; j < ny; ++j)
    for (size_t i = 0; i < nx; ++i) {
      if (!(poly.cell_inside(i, j - 1) && poly.cell_inside(i, j))) continue;
      size_t a = comp_index[find(id(i, j - 1))];
      size_t b = comp_index[find(id(i, j))];
      if (a != b) tree_edges.insert({std::min(a, b), std::max(a, b)});
    }
  for (const auto& [a, b] : tree_edges) {
    tree.nodes[a].neighbors.push_back(b);
    tree.nodes[b].neighbors.push_back(a);
  }
  if (tree_edges.size() + 1 != tree.nodes.size())
    fail(ErrorCode::NotSimple, "R-tree adjacency is not a tree");
  return tree;
}

// ---------------------------------------------------------------------------
// Kernel partition and the kernel-less drawing rules.
// ---------------------------------------------------------------------------

namespace {

KernelPartition partition_core(const SimplePolygon& poly, const RectFamily& fam, size_t center,
                               BuilderLog* log) {
  if (center >= fam.size()) fail(ErrorCode::BadParameter, "center index out of range");
  const Rect& C = fam[center];
  KernelPartition part;
  part.center = center;
  for (size_t i = 0; i < fam.size(); ++i) {
    if (i == center) continue;
    const Rect& R = fam[i];
    if (!share_boundary_point(poly, R, C)) {
      part.isolated.push_back(i);
      continue;
    }
    if (pierce_less(R, C)) {
      part.vertical.push_back(i);
    } else if (pierce_less(C, R)) {
      part.horizontal.push_back(i);
    } else {
      const std::array<Point, 4> cs{Point{C.x1, C.y1}, Point{C.x2, C.y1}, Point{C.x1, C.y2},
                                    Point{C.x2, C.y2}};  // SW SE NW NE
      int strict = -1, nstrict = 0;
      for (int c = 0; c < 4; ++c)
        if (R.x1 < cs[c].x && cs[c].x < R.x2 && R.y1 < cs[c].y && cs[c].y < R.y2) {
          strict = c;
          ++nstrict;
        }
      if (nstrict != 1) {
        int closed = -1;
        for (int c = 0; c < 4 && closed < 0; ++c)
          if (R.contains(cs[c])) closed = c;
        log_note(log, "corner rect " + rect_str(R) + " has " + std::to_string(nstrict) +
                          " strictly-contained center corners; using closed test");
        strict = closed;
      }
      if (strict < 0) {
        log_note(log, "rect " + rect_str(R) + " overlaps center without any pattern; isolated");
        part.isolated.push_back(i);
      } else {
        part.corners[static_cast<size_t>(strict)].push_back(i);
      }
    }
  }
  auto is_max_vert = [&](size_t i) {
    for (size_t j : part.vertical)
      if (j != i && pierce_less(fam[i], fam[j])) return false;
    return true;
  };
  for (size_t i : part.vertical)
    if (is_max_vert(i)) part.vertical_max.push_back(i);
  std::sort(part.vertical_max.begin(), part.vertical_max.end(),
            [&](size_t a, size_t b) { return std::tie(fam[a].x1, fam[a]) < std::tie(fam[b].x1, fam[b]); });
  for (size_t i = 1; i < part.vertical_max.size(); ++i)
    if (fam[part.vertical_max[i - 1]].x1 == fam[part.vertical_max[i]].x1)
      log_note(log, "vertical order <_v has a tie at x1=" +
                        std::to_string(fam[part.vertical_max[i]].x1));
  auto is_min_hori = [&](size_t i) {
    for (size_t j : part.horizontal)
      if (j != i && pierce_less(fam[j], fam[i])) return false;
    return true;
  };
  for (size_t i : part.horizontal)
    if (is_min_hori(i)) part.horizontal_min.push_back(i);
  std::sort(part.horizontal_min.begin(), part.horizontal_min.end(),
            [&](size_t a, size_t b) { return std::tie(fam[a].y1, fam[a]) < std::tie(fam[b].y1, fam[b]); });
  for (auto& lst : part.corners) {
    if (lst.size() == 2 && pierce_less(fam[lst[1]], fam[lst[0]])) std::swap(lst[0], lst[1]);
    if (lst.size() > 2) {
      log_note(log, "more than 2 corner rectangles at one center corner");
      std::sort(lst.begin(), lst.end(), [&](size_t a, size_t b) { return fam[a] < fam[b]; });
    }
  }
  BlockerSet bc = blockers(poly, C);
  if (!part.vertical_max.empty()) {
    part.v1_left_aligned =
        blockers(poly, fam[part.vertical_max.front()]).left.shares_point(bc.left);
    part.vk_right_aligned =
        blockers(poly, fam[part.vertical_max.back()]).right.shares_point(bc.right);
  }
  if (!part.horizontal_min.empty()) {
    part.h1_bottom_aligned =
        blockers(poly, fam[part.horizontal_min.front()]).bottom.shares_point(bc.bottom);
    part.hl_top_aligned =
        blockers(poly, fam[part.horizontal_min.back()]).top.shares_point(bc.top);
  }
  return part;
}

std::set<std::pair<size_t, size_t>> kernel_less_edges(const SimplePolygon& poly,
                                                      const RectFamily& fam,
                                                      const KernelPartition& part,
                                                      BuilderLog* log) {
  std::set<std::pair<size_t, size_t>> E;
  auto add = [&](size_t a, size_t b) {
    if (a == b) return;
    E.insert({std::min(a, b), std::max(a, b)});
  };
  const auto& VM = part.vertical_max;
  const auto& HM = part.horizontal_min;
  const Rect& C = fam[part.center];
  BlockerSet bc = blockers(poly, C);
  auto top_aligned = [&](size_t i) { return blockers(poly, fam[i]).top.shares_point(bc.top); };
  auto bottom_aligned = [&](size_t i) {
    return blockers(poly, fam[i]).bottom.shares_point(bc.bottom);
  };
  auto left_aligned = [&](size_t i) { return blockers(poly, fam[i]).left.shares_point(bc.left); };
  auto right_aligned = [&](size_t i) {
    return blockers(poly, fam[i]).right.shares_point(bc.right);
  };

  // Rule 1: aligned terminals join the opposite class completely.
  if (!VM.empty() && part.v1_left_aligned)
    for (size_t h : HM) add(VM.front(), h);
  if (!VM.empty() && part.vk_right_aligned)
    for (size_t h : HM) add(VM.back(), h);
  if (!HM.empty() && part.h1_bottom_aligned)
    for (size_t v : VM) add(v, HM.front());
  if (!HM.empty() && part.hl_top_aligned)
    for (size_t v : VM) add(v, HM.back());

  // Rule 2: consecutive maximal verticals; dominated verticals to their maxima.
  for (size_t i = 0; i + 1 < VM.size(); ++i)
    if (share_boundary_point(poly, fam[VM[i]], fam[VM[i + 1]])) add(VM[i], VM[i + 1]);
  for (size_t r : part.vertical) {
    if (std::find(VM.begin(), VM.end(), r) != VM.end()) continue;
    for (size_t v : VM)
      if (pierce_less(fam[r], fam[v])) add(r, v);
  }

  // Rule 3: horizontals, mirrored.
  for (size_t j = 0; j + 1 < HM.size(); ++j)
    if (share_boundary_point(poly, fam[HM[j]], fam[HM[j + 1]])) add(HM[j], HM[j + 1]);
  for (size_t r : part.horizontal) {
    if (std::find(HM.begin(), HM.end(), r) != HM.end()) continue;
    for (size_t h : HM)
      if (pierce_less(fam[h], fam[r])) add(h, r);
  }

  // Rule 4: corner rectangles.
  for (int dirv = 0; dirv < 4; ++dirv) {
    const auto& Ns = part.corners[static_cast<size_t>(dirv)];
    if (Ns.empty()) continue;
    CornerDir dir = static_cast<CornerDir>(dirv);
    bool topside = (dir == CornerDir::NE || dir == CornerDir::NW);
    bool rightside = (dir == CornerDir::NE || dir == CornerDir::SE);
    if (Ns.size() >= 2) {
      // Degree-2 pair reduction: each member joins its own partners directly.
      for (size_t n : Ns) {
        size_t nv = 0, nh = 0;
        for (size_t v : VM)
          if (share_boundary_point(poly, fam[n], fam[v])) {
            add(n, v);
            ++nv;
          }
        for (size_t h : HM)
          if (share_boundary_point(poly, fam[n], fam[h])) {
            add(n, h);
            ++nh;
          }
        if (nv > 1 || nh > 1)
          log_note(log, "corner pair member exceeds one partner per class at " + rect_str(fam[n]));
      }
      continue;
    }
    size_t n = Ns[0];
    bool has_h = !HM.empty();
    bool has_v = !VM.empty();
    size_t hterm = has_h ? (topside ? HM.back() : HM.front()) : 0;
    size_t vterm = has_v ? (rightside ? VM.back() : VM.front()) : 0;
    bool h_shares = has_h && share_boundary_point(poly, fam[n], fam[hterm]);
    bool v_shares = has_v && share_boundary_point(poly, fam[n], fam[vterm]);
    if (h_shares) add(n, hterm);
    if (v_shares) add(n, vterm);
    if (!h_shares) {
      for (size_t v : VM) {
        if (has_v && v == vterm) continue;
        bool aligned = topside ? top_aligned(v) : bottom_aligned(v);
        if (aligned && share_boundary_point(poly, fam[n], fam[v])) add(n, v);
      }
    }
    if (!v_shares) {
      for (size_t h : HM) {
        if (has_h && h == hterm) continue;
        bool aligned = rightside ? right_aligned(h) : left_aligned(h);
        if (aligned && share_boundary_point(poly, fam[n], fam[h])) add(n, h);
      }
    }
  }
  return E;
}

// Connects disconnected hyperedges directly; returns the number of edges added.
size_t repair_support(const SimplePolygon& poly, const RectFamily& fam, SupportGraph& g,
                      BuilderLog* log, const char* who) {
  size_t added = 0;
  for (int round = 0; round < 8; ++round) {
    auto viol = verify_support(poly, fam, g, CoverTarget::Boundary);
    if (viol.empty()) break;
    for (const auto& v : viol) {
      auto comps = v.components;
      for (auto& c : comps) std::sort(c.begin(), c.end());
      std::sort(comps.begin(), comps.end());
      for (size_t c = 1; c < comps.size(); ++c) {
        g.add_edge(comps[0].front(), comps[c].front());
        ++added;
        log_note(log, std::string(who) + ": fallback intersection edge (" +
                          std::to_string(comps[0].front()) + "," +
                          std::to_string(comps[c].front()) + ")");
      }
    }
  }
  return added;
}

}  // namespace

KernelPartition partition_kernel_family(const SimplePolygon& poly, const RectFamily& fam,
                                        size_t center, BuilderLog* log) {
  auto ker = kernel(poly, fam);
  if (std::find(ker.begin(), ker.end(), center) == ker.end())
    fail(ErrorCode::NotInKernel, "center rectangle is not in the kernel");
  if (!is_proper(poly, fam)) fail(ErrorCode::NotProper, "family is not proper");
  return partition_core(poly, fam, center, log);
}

SupportGraph build_kernel_less_support(const SimplePolygon& poly, const RectFamily& fam,
                                       size_t center, BuilderLog* log) {
  KernelPartition part = partition_kernel_family(poly, fam, center, log);
  auto edges = kernel_less_edges(poly, fam, part, log);
  SupportGraph g(fam.size() - 1);
  auto shift = [&](size_t i) { return i < center ? i : i - 1; };
  for (const auto& [a, b] : edges) g.add_edge(shift(a), shift(b));
  RectFamily rest;
  for (size_t i = 0; i < fam.size(); ++i)
    if (i != center) rest.rects.push_back(fam[i]);
  repair_support(poly, rest, g, log, "kernel-less");
  return g;
}

// ---------------------------------------------------------------------------
// Complete-family construction over the horizontal R-tree.
// ---------------------------------------------------------------------------

namespace {

struct RectGraph {
  std::set<Rect> verts;
  std::set<std::pair<Rect, Rect>> edges;

  void add_vertex(const Rect& r) { verts.insert(r); }
  void add_edge(Rect a, Rect b) {
    if (a == b) return;
    if (b < a) std::swap(a, b);
    verts.insert(a);
    verts.insert(b);
    edges.insert({a, b});
  }
  bool has_edge(Rect a, Rect b) const {
    if (b < a) std::swap(a, b);
    return edges.count({a, b}) > 0;
  }
  void remove_edge(Rect a, Rect b) {
    if (b < a) std::swap(a, b);
    edges.erase({a, b});
  }
  void rename(const Rect& from, const Rect& to) {
    if (from == to) return;
    verts.erase(from);
    verts.insert(to);
    std::set<std::pair<Rect, Rect>> out;
    for (auto [a, b] : edges) {
      if (a == from) a = to;
      if (b == from) b = to;
      if (b < a) std::swap(a, b);
      if (a == b) continue;
      out.insert({a, b});
    }
    edges = std::move(out);
  }
  RectGraph flipped_y() const {
    RectGraph g;
    for (const Rect& r : verts) g.verts.insert(r.flipped_y());
    for (auto [a, b] : edges) {
      Rect fa = a.flipped_y(), fb = b.flipped_y();
      if (fb < fa) std::swap(fa, fb);
      g.edges.insert({fa, fb});
    }
    return g;
  }
};

struct StepData {
  Rect leaf, parent;
  int64_t ox1 = 0, ox2 = 0;
  bool whole_parent_bottom = false;
  bool leaf_maximal = false;
  Rect leaf_top_extension;
  std::vector<Rect> family_a;
  std::vector<Rect> type1_path;
  std::vector<Rect> type2;
  std::map<Rect, Rect> image;
};

StepData classify_step(const SimplePolygon& poly, const SimplePolygon& pprime, const Rect& A,
                       const Rect& B, BuilderLog* log) {
  StepData st;
  st.leaf = A;
  st.parent = B;
  st.ox1 = std::max(A.x1, B.x1);
  st.ox2 = std::min(A.x2, B.x2);
  st.whole_parent_bottom = (st.ox1 == B.x1 && st.ox2 == B.x2);
  RectFamily rkp = enumerate_maximal(poly);
  RectFamily rkq = enumerate_maximal(pprime);
  for (const Rect& r : rkp.rects)
    if (r.y1 == A.y1 && A.x1 <= r.x1 && r.x2 <= A.x2) st.family_a.push_back(r);
  st.leaf_maximal = rkp.index_of(A).has_value();
  st.leaf_top_extension = extension(poly, A, Dir::Top);
  std::vector<Rect> rb;
  for (const Rect& r : rkq.rects)
    if (r.y1 == A.y2 && B.x1 <= r.x1 && r.x2 <= B.x2) rb.push_back(r);
  std::vector<Rect> type1;
  for (const Rect& R : st.family_a) {
    if (R == A) continue;
    BlockerSet tb = blockers(poly, R);
    int found = 0;
    Rect img{};
    for (const Rect& S : rb) {
      if (S.y2 != R.y2) continue;
      BlockerSet sb = blockers(pprime, S);
      if (tb.top.shares_point(sb.top)) {
        img = S;
        ++found;
      }
    }
    if (found != 1) {
      log_note(log, "image lookup found " + std::to_string(found) + " candidates for " +
                        rect_str(R));
      if (found == 0) continue;
    }
    st.image[R] = img;
    if (is_maximal(poly, img))
      type1.push_back(R);
    else
      st.type2.push_back(R);
  }
  // Path members: Type-1 rectangles plus the leaf itself when maximal,
  // ordered left-group (ascending right side), full span, right-group
  // (ascending left side).
  std::vector<Rect> members = type1;
  if (st.leaf_maximal) members.push_back(A);
  std::vector<Rect> lgrp, rgrp, full, other;
  for (const Rect& r : members) {
    bool l = r.x1 == A.x1;
    bool rr = r.x2 == A.x2;
    if (l && rr)
      full.push_back(r);
    else if (l)
      lgrp.push_back(r);
    else if (rr)
      rgrp.push_back(r);
    else {
      log_note(log, "type-1 rect outside both wall groups: " + rect_str(r));
      other.push_back(r);
    }
  }
  std::sort(lgrp.begin(), lgrp.end(), [](const Rect& a, const Rect& b) {
    return std::tie(a.x2, a) < std::tie(b.x2, b);
  });
  std::sort(rgrp.begin(), rgrp.end(), [](const Rect& a, const Rect& b) {
    return std::tie(a.x1, a) < std::tie(b.x1, b);
  });
  std::sort(full.begin(), full.end());
  std::sort(other.begin(), other.end());
  if (full.size() > 1) log_note(log, "multiple full-span path members");
  st.type1_path = lgrp;
  st.type1_path.insert(st.type1_path.end(), full.begin(), full.end());
  st.type1_path.insert(st.type1_path.end(), rgrp.begin(), rgrp.end());
  st.type1_path.insert(st.type1_path.end(), other.begin(), other.end());
  std::sort(st.type2.begin(), st.type2.end());
  return st;
}

// Laminar-tree parent: smallest strict x-span superset within family_a.
std::map<Rect, Rect> laminar_parents(const std::vector<Rect>& family_a, BuilderLog* log) {
  std::map<Rect, Rect> parent;
  for (const Rect& r : family_a) {
    const Rect* best = nullptr;
    for (const Rect& s : family_a) {
      if (s == r) continue;
      bool nests = s.x1 <= r.x1 && r.x2 <= s.x2 && (s.x1 < r.x1 || r.x2 < s.x2);
      bool overlaps = std::max(s.x1, r.x1) < std::min(s.x2, r.x2);
      if (overlaps && !nests && !(r.x1 <= s.x1 && s.x2 <= r.x2))
        log_note(log, "span family not laminar at " + rect_str(r) + " vs " + rect_str(s));
      if (!nests) continue;
      if (!best || (s.x2 - s.x1) < (best->x2 - best->x1)) best = &s;
    }
    if (best) parent[r] = *best;
  }
  return parent;
}

RectGraph build_complete_rec(const SimplePolygon& poly, BuilderLog* log) {
  RTree tree = horizontal_rtree(poly);
  if (tree.nodes.size() == 1) {
    RectGraph g;
    g.add_vertex(tree.nodes[0].rect);
    return g;
  }
  int pick = -1;
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    if (tree.nodes[i].neighbors.size() != 1) continue;
    const Rect& a = tree.nodes[i].rect;
    const Rect& b = tree.nodes[tree.nodes[i].neighbors[0]].rect;
    if (b.y1 == a.y2) {
      pick = static_cast<int>(i);
      break;
    }
  }
  if (pick < 0) {
    RectGraph g = build_complete_rec(poly.flipped_y(), log);
    return g.flipped_y();
  }
  const Rect A = tree.nodes[static_cast<size_t>(pick)].rect;
  const Rect B = tree.nodes[tree.nodes[static_cast<size_t>(pick)].neighbors[0]].rect;
  SimplePolygon pprime = polygon_minus_rect(poly, A);
  RectGraph g = build_complete_rec(pprime, log);
  StepData st = classify_step(poly, pprime, A, B, log);

  if (st.whole_parent_bottom) {
    if (!st.leaf_maximal) log_note(log, "whole-opening branch with non-maximal leaf");
    Rect bup = extension(pprime, B, Dir::Top);
    g.add_vertex(A);
    g.add_edge(A, bup);
    if (!st.type1_path.empty() && !(st.type1_path.size() == 1 && st.type1_path[0] == A))
      log_note(log, "whole-opening branch found Type-1 rectangles");
    for (const Rect& r : st.type1_path)
      if (r != A && st.image.count(r)) g.add_edge(r, st.image[r]);
  } else {
    for (size_t i = 0; i + 1 < st.type1_path.size(); ++i)
      g.add_edge(st.type1_path[i], st.type1_path[i + 1]);
    for (const Rect& r : st.type1_path)
      if (r != A) g.add_edge(r, st.image.at(r));
    if (st.type1_path.size() == 1) g.add_vertex(st.type1_path[0]);
    // Type-2 cut-and-reattach along the laminar tree.
    auto parent = laminar_parents(st.family_a, log);
    std::set<Rect> type1_set(st.type1_path.begin(), st.type1_path.end());
    for (const Rect& r : st.type2) {
      auto pit = parent.find(r);
      // A parentless Type-2 rect is the laminar root (the leaf's top
      // extension); its support is carried entirely by the rename.
      if (pit == parent.end()) continue;
      const Rect& p = pit->second;
      bool parent_is_type1 = type1_set.count(p) > 0 && p != A;
      if (parent_is_type1) {
        const Rect& fp = st.image.at(p);
        const Rect& fr = st.image.at(r);
        if (g.has_edge(fp, fr))
          g.remove_edge(fp, fr);
        else
          log_note(log, "reattach: edge (f(parent), f(child)) absent for " + rect_str(r));
        g.add_edge(p, fr);
      } else if (p == A) {
        g.add_edge(A, st.image.at(r));
      }
      // Type-2 parent: the rename below carries the tree edge over from G_P'.
    }
    if (st.leaf_maximal) g.add_vertex(A);
  }
  for (const Rect& r : st.type2) {
    auto it = st.image.find(r);
    if (it != st.image.end()) g.rename(it->second, r);
  }
  // Reconcile the vertex set with the complete family of P.
  RectFamily rkp = enumerate_maximal(poly);
  std::set<Rect> want(rkp.rects.begin(), rkp.rects.end());
  for (const Rect& r : want)
    if (!g.verts.count(r)) {
      log_note(log, "complete-step: missing vertex " + rect_str(r));
      g.add_vertex(r);
    }
  std::vector<Rect> extra;
  for (const Rect& r : g.verts)
    if (!want.count(r)) extra.push_back(r);
  for (const Rect& r : extra) {
    log_note(log, "complete-step: dropping stale vertex " + rect_str(r));
    g.verts.erase(r);
    std::set<std::pair<Rect, Rect>> kept;
    for (const auto& e : g.edges)
      if (e.first != r && e.second != r) kept.insert(e);
    g.edges = std::move(kept);
  }
  return g;
}

}  // namespace

LeafStep classify_leaf_step(const SimplePolygon& poly, const Rect& leaf, BuilderLog* log) {
  RTree tree = horizontal_rtree(poly);
  int idx = -1;
  for (size_t i = 0; i < tree.nodes.size(); ++i)
    if (tree.nodes[i].rect == leaf) idx = static_cast<int>(i);
  if (idx < 0 || tree.nodes[static_cast<size_t>(idx)].neighbors.size() != 1)
    fail(ErrorCode::BadParameter, "rect is not an R-tree leaf");
  const Rect B = tree.nodes[tree.nodes[static_cast<size_t>(idx)].neighbors[0]].rect;
  if (B.y1 != leaf.y2) fail(ErrorCode::BadParameter, "leaf's parent must lie above it");
  SimplePolygon pprime = polygon_minus_rect(poly, leaf);
  StepData st = classify_step(poly, pprime, leaf, B, log);
  LeafStep out;
  out.leaf = st.leaf;
  out.parent = st.parent;
  out.opening_x1 = st.ox1;
  out.opening_x2 = st.ox2;
  out.whole_parent_bottom = st.whole_parent_bottom;
  out.leaf_maximal = st.leaf_maximal;
  out.leaf_top_extension = st.leaf_top_extension;
  out.family_a = st.family_a;
  out.type1_path = st.type1_path;
  out.type2 = st.type2;
  for (const auto& [r, img] : st.image) out.images.push_back({r, img});
  return out;
}

SupportGraph build_complete_support(const SimplePolygon& poly, BuilderLog* log) {
  RectGraph rg = build_complete_rec(poly, log);
  RectFamily rk = enumerate_maximal(poly);
  SupportGraph g(rk.size());
  for (const auto& [a, b] : rg.edges) {
    auto ia = rk.index_of(a);
    auto ib = rk.index_of(b);
    if (!ia || !ib) {
      log_note(log, "complete: edge endpoint not in the family, dropped");
      continue;
    }
    g.add_edge(*ia, *ib);
  }
  repair_support(poly, rk, g, log, "complete");
  for (size_t i = 0; i < rk.size(); ++i)
    if (vertically_blocked(poly, rk[i])) g.outer.push_back(i);
  return g;
}

// ---------------------------------------------------------------------------
// Hereditary deletion and subfamily supports.
// ---------------------------------------------------------------------------

SupportGraph minimalize_support(const SimplePolygon& poly, const RectFamily& fam,
                                SupportGraph graph) {
  WitnessSet w = witness_points(poly, fam, CoverTarget::Boundary);
  std::set<std::vector<size_t>> hyperedges;
  for (const Point& p : w.points) {
    auto e = hyperedge(fam, p);
    if (e.size() >= 2) hyperedges.insert(e);
  }
  auto connected = [&](const SupportGraph& g, const std::vector<size_t>& e) {
    auto adj = g.adjacency();
    std::vector<bool> in(g.n, false), seen(g.n, false);
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
    return cnt == e.size();
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::pair<size_t, size_t>> order(graph.edges.begin(), graph.edges.end());
    for (const auto& [a, b] : order) {
      graph.remove_edge(a, b);
      bool ok = true;
      for (const auto& e : hyperedges)
        if (!connected(graph, e)) {
          ok = false;
          break;
        }
      if (!ok)
        graph.add_edge(a, b);
      else
        changed = true;
    }
  }
  return graph;
}

SupportGraph delete_vertex_support(const SimplePolygon& poly, const RectFamily& fam,
                                   const SupportGraph& graph, size_t victim, BuilderLog* log) {
  if (graph.n != fam.size() || victim >= fam.size())
    fail(ErrorCode::BadParameter, "bad family/graph/victim");
  if (!verify_support(poly, fam, graph, CoverTarget::Boundary).empty())
    fail(ErrorCode::InvalidInputSupport, "input graph is not a boundary support");
  PlanarityResult pr = lr_planarity(graph);
  if (!pr.planar) fail(ErrorCode::InvalidInputSupport, "input graph is not planar");

  SupportGraph ming = minimalize_support(poly, fam, graph);
  DfsOrientation o = dfs_orient(ming, victim);
  PlanarityResult mpr = lr_planarity(ming);
  auto e1 = shortcut_cotree(ming, o, mpr.coloring, victim);

  std::vector<size_t> children;
  for (const auto& e : o.tree_edges)
    if (e.first == victim) children.push_back(e.second);

  RectFamily sub;
  for (size_t w : children) sub.rects.push_back(fam[w]);
  sub.rects.push_back(fam[victim]);
  std::set<std::pair<size_t, size_t>> e2;
  if (!children.empty()) {
    KernelPartition part = partition_core(poly, sub, sub.size() - 1, log);
    auto edges = kernel_less_edges(poly, sub, part, log);
    for (const auto& [a, b] : edges) e2.insert({children[a], children[b]});
  }

  auto shift = [&](size_t i) { return i < victim ? i : i - 1; };
  SupportGraph out(fam.size() - 1);
  for (const auto& [a, b] : e1) out.add_edge(shift(a), shift(b));
  for (const auto& [a, b] : e2) out.add_edge(shift(a), shift(b));
  RectFamily rest;
  for (size_t i = 0; i < fam.size(); ++i)
    if (i != victim) rest.rects.push_back(fam[i]);
  repair_support(poly, rest, out, log, "delete-vertex");
  return out;
}

SupportGraph subfamily_support(const SimplePolygon& poly, const RectFamily& subset,
                               BuilderLog* log) {
  RectFamily rk = enumerate_maximal(poly);
  for (const Rect& r : subset.rects)
    if (!rk.index_of(r)) fail(ErrorCode::NotMaximalMember, "subset rect not maximal: " + rect_str(r));
  {
    std::set<Rect> seen;
    for (const Rect& r : subset.rects)
      if (!seen.insert(r).second) fail(ErrorCode::BadParameter, "duplicate rect in subset");
  }
  SupportGraph g = build_complete_support(poly, log);
  RectFamily cur = rk;
  std::set<Rect> keep(subset.rects.begin(), subset.rects.end());
  std::vector<Rect> victims;
  for (const Rect& r : rk.rects)
    if (!keep.count(r)) victims.push_back(r);
  std::sort(victims.begin(), victims.end());
  std::reverse(victims.begin(), victims.end());  // descending canonical order
  for (const Rect& v : victims) {
    size_t idx = *cur.index_of(v);
    g = delete_vertex_support(poly, cur, g, idx, log);
    cur.rects.erase(cur.rects.begin() + static_cast<ptrdiff_t>(idx));
  }
  // Remap from canonical survivor order to the subset's own order.
  SupportGraph out(subset.size());
  for (const auto& [a, b] : g.edges) {
    size_t ia = *subset.index_of(cur[a]);
    size_t ib = *subset.index_of(cur[b]);
    out.add_edge(ia, ib);
  }
  return out;
}

}  // namespace rectcover
