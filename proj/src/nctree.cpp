#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "csl/polygons.hpp"

namespace csl {

namespace {

bool crossing(const Chord& a, const Chord& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

struct Dsu {
  std::vector<int> up;
  explicit Dsu(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) { return up[x] == x ? x : up[x] = find(up[x]); }
  bool join(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    up[x] = y;
    return true;
  }
};

void validate_tree(const NCTree& t) {
  if (t.points < 1) throw std::invalid_argument("tree needs at least a point");
  if (static_cast<int>(t.edges.size()) != t.points - 1)
    throw std::invalid_argument("a tree on p points has p-1 edges");
  Dsu dsu(t.points + 1);
  for (const Chord& e : t.edges) {
    if (e.lo < 1 || e.hi > t.points)
      throw std::invalid_argument("tree edge endpoint out of range");
    if (!dsu.join(e.lo, e.hi))
      throw std::invalid_argument("tree edges contain a cycle");
  }
  for (size_t i = 0; i < t.edges.size(); ++i)
    for (size_t j = i + 1; j < t.edges.size(); ++j)
      if (crossing(t.edges[i], t.edges[j]))
        throw std::invalid_argument("tree edges cross");
}

}  // namespace

std::vector<NCTree> enumerate_nc_trees(int points) {
  if (points < 1) throw std::invalid_argument("need at least one point");
  std::vector<Chord> cand;
  for (int u = 1; u <= points; ++u)
    for (int v = u + 1; v <= points; ++v) cand.emplace_back(u, v);
  std::vector<NCTree> out;
  std::vector<Chord> cur;
  // Lexicographic backtracking over the candidate segments.
  struct Rec {
    const std::vector<Chord>& cand;
    int points;
    std::vector<Chord>& cur;
    std::vector<NCTree>& out;
    void run(size_t from, Dsu dsu, int picked) {
      if (picked == points - 1) {
        out.push_back({points, cur});
        return;
      }
      for (size_t i = from; i < cand.size(); ++i) {
        if (static_cast<int>(cand.size() - i) < points - 1 - picked) break;
        bool ok = true;
        for (const Chord& c : cur)
          if (crossing(c, cand[i])) {
            ok = false;
            break;
          }
        if (!ok) continue;
        Dsu next = dsu;
        if (!next.join(cand[i].lo, cand[i].hi)) continue;
        cur.push_back(cand[i]);
        run(i + 1, std::move(next), picked + 1);
        cur.pop_back();
      }
    }
  } rec{cand, points, cur, out};
  rec.run(0, Dsu(points + 1), 0);
  std::sort(out.begin(), out.end());
  return out;
}

NCTree rotate_nc_tree(const NCTree& t, int steps) {
  NCTree r;
  r.points = t.points;
  auto rot = [&](int v) {
    return (v - 1 - steps % t.points + 2 * t.points) % t.points + 1;
  };
  for (const Chord& e : t.edges) r.edges.emplace_back(rot(e.lo), rot(e.hi));
  std::sort(r.edges.begin(), r.edges.end());
  return r;
}

DissectionA nc_tree_to_quadrangulation(const NCTree& t) {
  validate_tree(t);
  const int n = t.points - 1;
  const int N = 2 * n + 2;
  std::vector<Chord> lines;
  for (const Chord& e : t.edges)
    lines.emplace_back(2 * e.lo - 1, 2 * e.hi - 1);
  auto crosses_any = [&](const Chord& c) {
    for (const Chord& l : lines)
      if (crossing(c, l)) return true;
    return false;
  };
  // For each line and each side, the unique even vertex that sees both
  // endpoints; the cell edges off the boundary are the dissection diagonals.
  std::set<Chord> diagonals;
  auto boundary = [&](int u, int v) {
    const int d = std::abs(u - v);
    return d == 1 || d == N - 1;
  };
  for (const Chord& l : lines) {
    int found[2] = {0, 0};
    for (int x = 2; x <= N; x += 2) {
      const bool inside = l.lo < x && x < l.hi;
      const Chord ax(l.lo, x), xb(x, l.hi);
      if (crosses_any(ax) || crosses_any(xb)) continue;
      ++found[inside ? 0 : 1];
      if (!boundary(l.lo, x)) diagonals.insert(ax);
      if (!boundary(x, l.hi)) diagonals.insert(xb);
    }
    if (found[0] != 1 || found[1] != 1)
      throw std::logic_error("quadrilateral corner is not unique");
  }
  DissectionA q;
  q.N = N;
  q.chords.assign(diagonals.begin(), diagonals.end());
  if (static_cast<int>(q.chords.size()) != n - 1)
    throw std::logic_error("quadrangulation has the wrong diagonal count");
  return q;
}

NCTree quadrangulation_to_nc_tree(const DissectionA& q) {
  if (q.N % 2 != 0 || q.N < 4)
    throw std::invalid_argument("not an even polygon");
  const int n = (q.N - 2) / 2;
  if (static_cast<int>(q.chords.size()) != n - 1)
    throw std::invalid_argument("not a quadrangulation");
  NCTree t;
  t.points = n + 1;
  for (const std::vector<int>& cell : dissection_cells(q.N, q.chords)) {
    if (cell.size() != 4)
      throw std::invalid_argument("dissection cell is not a quadrilateral");
    // Each quadrilateral has exactly one diagonal with two odd endpoints.
    Chord odd(0, 0);
    int count = 0;
    for (int r = 0; r < 2; ++r) {
      const int u = cell[r], v = cell[r + 2];
      if (u % 2 == 1 && v % 2 == 1) {
        odd = Chord(u, v);
        ++count;
      }
    }
    if (count != 1)
      throw std::invalid_argument("cell without a unique odd diagonal");
    t.edges.emplace_back((odd.lo + 1) / 2, (odd.hi + 1) / 2);
  }
  std::sort(t.edges.begin(), t.edges.end());
  validate_tree(t);
  return t;
}

}  // namespace csl
