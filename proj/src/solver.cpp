#include "rectcover/solver.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace rectcover {

namespace {

struct Bits {
  std::vector<uint64_t> w;

  explicit Bits(size_t n = 0) : w((n + 63) / 64, 0) {}
  void set(size_t i) { w[i / 64] |= uint64_t{1} << (i % 64); }
  bool get(size_t i) const { return (w[i / 64] >> (i % 64)) & 1; }
  void operator|=(const Bits& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
  }
  bool covers(const Bits& o) const {  // o subset of this
    for (size_t i = 0; i < w.size(); ++i)
      if ((o.w[i] & ~w[i]) != 0) return false;
    return true;
  }
  bool none() const {
    for (uint64_t x : w)
      if (x) return false;
    return true;
  }
  size_t count() const {
    size_t c = 0;
    for (uint64_t x : w) c += static_cast<size_t>(__builtin_popcountll(x));
    return c;
  }
  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r = a;
    for (size_t i = 0; i < r.w.size(); ++i) r.w[i] &= b.w[i];
    return r;
  }
  friend Bits operator-(const Bits& a, const Bits& b) {  // a and not b
    Bits r = a;
    for (size_t i = 0; i < r.w.size(); ++i) r.w[i] &= ~b.w[i];
    return r;
  }
};

struct CoverInstance {
  RectFamily fam;
  std::vector<Point> witnesses;
  std::vector<Bits> mask;                    // per family rect, over witnesses
  std::vector<std::vector<size_t>> coverers; // per witness, rects containing it
  std::vector<Bits> reach;                   // per witness, union of its coverers' masks
  Bits full;

  CoverInstance(const SimplePolygon& poly, CoverTarget target)
      : fam(enumerate_maximal(poly)), full(0) {
    WitnessSet w = witness_points(poly, fam, target);
    witnesses = w.points;
    full = Bits(witnesses.size());
    for (size_t i = 0; i < witnesses.size(); ++i) full.set(i);
    mask.assign(fam.size(), Bits(witnesses.size()));
    for (size_t r = 0; r < fam.size(); ++r)
      for (size_t i = 0; i < witnesses.size(); ++i)
        if (fam[r].contains(witnesses[i])) mask[r].set(i);
    coverers.assign(witnesses.size(), {});
    reach.assign(witnesses.size(), Bits(witnesses.size()));
    for (size_t i = 0; i < witnesses.size(); ++i)
      for (size_t r = 0; r < fam.size(); ++r)
        if (mask[r].get(i)) {
          coverers[i].push_back(r);
          reach[i] |= mask[r];
        }
  }

  Bits union_of(const std::vector<size_t>& idx) const {
    Bits b(witnesses.size());
    for (size_t i : idx) b |= mask[i];
    return b;
  }
};

}  // namespace

bool coverage_check(const SimplePolygon& poly, const RectFamily& fam,
                    const std::vector<size_t>& chosen, CoverTarget target) {
  WitnessSet w = witness_points(poly, fam, target);
  for (const Point& p : w.points) {
    bool hit = false;
    for (size_t i : chosen)
      if (fam[i].contains(p)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Lexicographically enumerates size-kk subsets of pool; f returns true to stop.
bool for_each_combination(const std::vector<size_t>& pool, size_t kk,
                          const std::function<bool(const std::vector<size_t>&)>& f) {
  std::vector<size_t> pick;
  std::function<bool(size_t)> rec = [&](size_t from) {
    if (pick.size() == kk) return f(pick);
    if (pool.size() - from < kk - pick.size()) return false;
    for (size_t i = from; i < pool.size(); ++i) {
      pick.push_back(pool[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

CoverSolution local_search_cover(const SimplePolygon& poly, CoverTarget target, int k) {
  if (k < 1) fail(ErrorCode::BadParameter, "local search needs k >= 1");
  CoverInstance inst(poly, target);
  CoverSolution sol;
  sol.target = target;
  sol.k = k;
  std::vector<size_t> S(inst.fam.size());
  for (size_t i = 0; i < S.size(); ++i) S[i] = i;

  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<size_t> Sc;  // complement
    {
      std::vector<bool> in(inst.fam.size(), false);
      for (size_t i : S) in[i] = true;
      for (size_t i = 0; i < inst.fam.size(); ++i)
        if (!in[i]) Sc.push_back(i);
    }
    for (size_t xsz = 1; xsz <= static_cast<size_t>(k) && !improved; ++xsz) {
      if (xsz > S.size()) break;
      for_each_combination(S, xsz, [&](const std::vector<size_t>& X) {
        Bits rest(inst.witnesses.size());
        {
          std::vector<bool> inX(inst.fam.size(), false);
          for (size_t i : X) inX[i] = true;
          for (size_t i : S)
            if (!inX[i]) rest |= inst.mask[i];
        }
        Bits uncovered = inst.full - rest;
        for (size_t ysz = 0; ysz < xsz; ++ysz) {
          if (ysz == 0) {
            if (!uncovered.none()) continue;
            std::vector<bool> inX(inst.fam.size(), false);
            for (size_t i : X) inX[i] = true;
            std::vector<size_t> ns;
            for (size_t i : S)
              if (!inX[i]) ns.push_back(i);
            S = std::move(ns);
            ++sol.iterations;
            improved = true;
            return true;
          }
          bool found = for_each_combination(Sc, ysz, [&](const std::vector<size_t>& Y) {
            Bits withY = rest;
            for (size_t i : Y) withY |= inst.mask[i];
            if (!withY.covers(inst.full)) return false;
            std::vector<bool> inX(inst.fam.size(), false);
            for (size_t i : X) inX[i] = true;
            std::vector<size_t> ns;
            for (size_t i : S)
              if (!inX[i]) ns.push_back(i);
            ns.insert(ns.end(), Y.begin(), Y.end());
            std::sort(ns.begin(), ns.end());
            S = std::move(ns);
            ++sol.iterations;
            improved = true;
            return true;
          });
          if (found) return true;
        }
        return false;
      });
    }
  }
  sol.chosen = S;
  std::sort(sol.chosen.begin(), sol.chosen.end());
  assert(coverage_check(poly, inst.fam, sol.chosen, target));
  return sol;
}

namespace {

struct ExactSearch {
  const CoverInstance& inst;
  uint64_t node_limit;
  uint64_t nodes = 0;
  bool aborted = false;
  std::vector<size_t> best;
  std::vector<size_t> current;

  ExactSearch(const CoverInstance& i, uint64_t limit) : inst(i), node_limit(limit) {}

  // Greedy lower bound: pick uncovered witnesses whose candidate rects are
  // pairwise disjoint in what they can cover.
  size_t lower_bound(const Bits& uncovered) const {
    Bits rem = uncovered;
    size_t lb = 0;
    while (!rem.none()) {
      size_t w = SIZE_MAX;
      for (size_t i = 0; i < inst.witnesses.size(); ++i)
        if (rem.get(i)) {
          w = i;
          break;
        }
      rem = rem - inst.reach[w];
      ++lb;
    }
    return lb;
  }

  void dfs(const Bits& uncovered) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    if (uncovered.none()) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && current.size() + lower_bound(uncovered) >= best.size()) return;
    // Branch on the uncovered witness with the fewest candidates.
    size_t bw = SIZE_MAX, bcnt = SIZE_MAX;
    for (size_t i = 0; i < inst.witnesses.size(); ++i) {
      if (!uncovered.get(i)) continue;
      size_t c = inst.coverers[i].size();
      if (c < bcnt) {
        bcnt = c;
        bw = i;
      }
    }
    if (bw == SIZE_MAX) return;
    if (bcnt == 0) return;  // uncoverable witness: no solution on this branch
    for (size_t r : inst.coverers[bw]) {
      if (aborted) break;
      current.push_back(r);
      dfs(uncovered - inst.mask[r]);
      current.pop_back();
    }
  }
};

}  // namespace

ExactCoverResult exact_cover(const SimplePolygon& poly, CoverTarget target, uint64_t node_limit) {
  CoverInstance inst(poly, target);
  ExactCoverResult res;
  res.solution.target = target;
  // Greedy incumbent.
  {
    Bits uncovered = inst.full;
    std::vector<size_t> greedy;
    while (!uncovered.none()) {
      size_t bestr = SIZE_MAX, bestc = 0;
      for (size_t r = 0; r < inst.fam.size(); ++r) {
        size_t c = (inst.mask[r] & uncovered).count();
        if (c > bestc) {
          bestc = c;
          bestr = r;
        }
      }
      if (bestr == SIZE_MAX) break;  // uncoverable (should not happen: family is complete)
      greedy.push_back(bestr);
      uncovered = uncovered - inst.mask[bestr];
    }
    ExactSearch search(inst, node_limit);
    if (uncovered.none()) search.best = greedy;
    search.dfs(inst.full);
    res.exact = !search.aborted;
    res.nodes = search.nodes;
    res.solution.chosen = search.best;
    std::sort(res.solution.chosen.begin(), res.solution.chosen.end());
  }
  return res;
}

bool rect_visible(const SimplePolygon& poly, const Point& p, const Point& q) {
  return poly.contains_box(std::min(p.x, q.x), std::min(p.y, q.y), std::max(p.x, q.x),
                           std::max(p.y, q.y));
}

namespace {

struct MisSearch {
  const std::vector<Bits>& adj;
  size_t n;
  uint64_t node_limit;
  uint64_t nodes = 0;
  bool aborted = false;
  std::vector<size_t> best;
  std::vector<size_t> current;

  MisSearch(const std::vector<Bits>& a, uint64_t limit)
      : adj(a), n(a.size()), node_limit(limit) {}

  void dfs(Bits candidates) {
    if (aborted) return;
    if (++nodes > node_limit) {
      aborted = true;
      return;
    }
    size_t cc = candidates.count();
    if (current.size() + cc <= best.size()) return;
    if (cc == 0) {
      if (current.size() > best.size()) best = current;
      return;
    }
    // Pivot: candidate with the most candidate-neighbors (deterministic tie
    // break on index); include-first branching.
    size_t pivot = SIZE_MAX, pdeg = 0;
    for (size_t v = 0; v < n; ++v) {
      if (!candidates.get(v)) continue;
      size_t d = (adj[v] & candidates).count();
      if (pivot == SIZE_MAX || d > pdeg) {
        pivot = v;
        pdeg = d;
      }
    }
    Bits inc = candidates - adj[pivot];
    inc.w[pivot / 64] &= ~(uint64_t{1} << (pivot % 64));
    current.push_back(pivot);
    dfs(inc);
    current.pop_back();
    Bits exc = candidates;
    exc.w[pivot / 64] &= ~(uint64_t{1} << (pivot % 64));
    dfs(exc);
  }
};

}  // namespace

AntirectangleResult max_antirectangle(const SimplePolygon& poly, uint64_t node_limit) {
  std::vector<Point> cand;
  for (size_t i = 0; i < poly.vertices().size(); ++i)
    if (poly.convex()[i]) cand.push_back(poly.vertices()[i]);
  const auto& xs = poly.xlines();
  const auto& ys = poly.ylines();
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    for (size_t j = 0; j + 1 < ys.size(); ++j)
      if (poly.cell_inside(i, j))
        cand.push_back(Point{(xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2});
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

  size_t n = cand.size();
  std::vector<Bits> adj(n, Bits(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (rect_visible(poly, cand[i], cand[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  MisSearch search(adj, node_limit);
  Bits all(n);
  for (size_t i = 0; i < n; ++i) all.set(i);
  search.dfs(all);
  AntirectangleResult res;
  res.exact = !search.aborted;
  res.nodes = search.nodes;
  for (size_t i : search.best) res.points.push_back(cand[i]);
  std::sort(res.points.begin(), res.points.end());
  return res;
}

}  // namespace rectcover
