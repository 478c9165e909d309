#include "csl/peel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace csl {

PeelPolygon::PeelPolygon(int N, int gord) : gord_(gord) {
  if (N % gord != 0)
    throw std::invalid_argument("rotation order must divide the polygon size");
  live_.resize(N);
  for (int i = 0; i < N; ++i) live_[i] = i + 1;
}

int PeelPolygon::pos(int v) const {
  auto it = std::lower_bound(live_.begin(), live_.end(), v);
  if (it == live_.end() || *it != v)
    throw std::logic_error("vertex is not live");
  return static_cast<int>(it - live_.begin());
}

int PeelPolygon::vertex_at(int p) const {
  const int n = live_count();
  return live_[((p % n) + n) % n];
}

int PeelPolygon::advance(int v, int steps) const {
  return vertex_at(pos(v) + steps);
}

int PeelPolygon::live_distance(int u, int v) const {
  const int n = live_count();
  return ((pos(v) - pos(u)) % n + n) % n;
}

std::vector<Chord> PeelPolygon::chord_orbit(const Chord& c) const {
  const int step = live_count() / gord_;
  std::vector<Chord> orbit;
  for (int j = 0; j < gord_; ++j)
    orbit.emplace_back(advance(c.lo, j * step), advance(c.hi, j * step));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

void PeelPolygon::remove_window_orbit(int after, int s,
                                      const std::set<int>& protect) {
  const int step = live_count() / gord_;
  std::set<int> doomed;
  for (int j = 0; j < gord_; ++j) {
    const int anchor = advance(after, j * step);
    for (int t = 1; t <= s; ++t) {
      const int v = advance(anchor, t);
      if (protect.count(v))
        throw std::logic_error("peeling window contains a protected vertex");
      doomed.insert(v);
    }
  }
  if (static_cast<int>(doomed.size()) != gord_ * s)
    throw std::logic_error("peeling window orbit collapsed");
  std::vector<int> next;
  next.reserve(live_.size() - doomed.size());
  for (int v : live_)
    if (!doomed.count(v)) next.push_back(v);
  live_ = std::move(next);
}

int chord_start(const PeelPolygon& poly, const Chord& c) {
  const int d1 = poly.live_distance(c.lo, c.hi);
  const int d2 = poly.live_count() - d1;
  if (d1 == d2)
    throw std::logic_error("diameters carry no chord orientation");
  return d1 < d2 ? c.lo : c.hi;
}

std::vector<PeelItem> chord_orbit_items(const PeelPolygon& poly,
                                        const std::set<Chord>& chords) {
  std::set<Chord> seen;
  std::vector<PeelItem> items;
  const int b = poly.sector_size();
  for (const Chord& c : chords) {
    if (seen.count(c)) continue;
    std::vector<Chord> orbit = poly.chord_orbit(c);
    for (const Chord& oc : orbit) {
      if (!chords.count(oc))
        throw std::invalid_argument("chord set is not rotation invariant");
      seen.insert(oc);
    }
    int rep = -1;
    for (const Chord& oc : orbit) {
      const int start = chord_start(poly, oc);
      if (poly.pos(start) < b) {
        if (rep != -1)
          throw std::logic_error("two orbit members start in the first sector");
        rep = start;
      }
    }
    if (rep == -1)
      throw std::logic_error("no orbit member starts in the first sector");
    items.push_back({rep, false});
  }
  return items;
}

namespace {

struct Level {
  std::vector<PeelItem> sorted;  // by live position of start
  std::vector<int> gap;          // live gap from item j to item j+1 (cyclic)
};

Level level_state(const PeelPolygon& poly, std::vector<PeelItem> items) {
  Level lv;
  std::sort(items.begin(), items.end(),
            [&](const PeelItem& x, const PeelItem& y) {
              const int px = poly.pos(x.start), py = poly.pos(y.start);
              if (px != py) return px < py;
              return x.diameter < y.diameter;
            });
  const int r = static_cast<int>(items.size());
  lv.gap.resize(r);
  for (int j = 0; j < r; ++j) {
    const int pj = poly.pos(items[j].start);
    const int pn = (j + 1 < r) ? poly.pos(items[j + 1].start)
                               : poly.pos(items[0].start) + poly.sector_size();
    lv.gap[j] = pn - pj;
  }
  lv.sorted = std::move(items);
  return lv;
}

std::set<int> protected_vertices(const std::vector<PeelItem>& items,
                                 const std::set<Chord>& chords) {
  std::set<int> protect;
  for (const PeelItem& it : items) protect.insert(it.start);
  for (const Chord& c : chords) {
    protect.insert(c.lo);
    protect.insert(c.hi);
  }
  return protect;
}

}  // namespace

std::vector<int> forward_peel(PeelPolygon& poly, std::vector<PeelItem> items,
                              std::set<Chord> chords, int s, int levels,
                              bool t1_mode) {
  std::vector<int> nu;
  for (int level = 0; level < levels; ++level) {
    if (items.empty()) {
      nu.push_back(0);
      continue;
    }
    Level lv = level_state(poly, items);
    const int r = static_cast<int>(lv.sorted.size());
    if (t1_mode &&
        std::all_of(lv.gap.begin(), lv.gap.end(), [&](int g) { return g <= s; })) {
      // All-diameter tail: one orbit of diameters per remaining level.
      for (const PeelItem& it : lv.sorted)
        if (!it.diameter)
          throw std::logic_error("tight labels with a non-diameter orbit left");
      if (r != levels - level)
        throw std::logic_error("diameter count does not fill the levels");
      for (int j = level; j < levels; ++j) nu.push_back(1);
      return nu;
    }
    int j = 0;
    while (j < r && lv.gap[j] < s + 1) ++j;
    if (j == r) throw std::logic_error("no peelable gap found");
    const int anchor = lv.sorted[j].start;
    const Chord probe(anchor, poly.advance(anchor, s + 1));
    const bool present = chords.count(probe) > 0;
    nu.push_back(present ? 1 : 0);
    if (present) {
      for (const Chord& c : poly.chord_orbit(probe)) chords.erase(c);
      auto victim = std::find_if(items.begin(), items.end(),
                                 [&](const PeelItem& it) {
                                   return !it.diameter && it.start == anchor;
                                 });
      if (victim == items.end())
        throw std::logic_error("probe chord has no matching orbit item");
      items.erase(victim);
    }
    poly.remove_window_orbit(anchor, s, protected_vertices(items, chords));
  }
  if (!items.empty())
    throw std::logic_error("orbit items left after the last level");
  return nu;
}

InversePeelResult inverse_peel(PeelPolygon& poly, std::vector<int> mu,
                               const std::vector<int>& nu, int s,
                               bool t1_mode) {
  InversePeelResult out;
  std::multiset<int> remaining(mu.begin(), mu.end());
  const int levels = static_cast<int>(nu.size());
  for (int level = 0; level < levels; ++level) {
    if (remaining.empty()) {
      if (nu[level] != 0)
        throw std::invalid_argument("nu has a 1 with no labels left");
      continue;
    }
    std::vector<PeelItem> items;
    for (int v : remaining) items.push_back({v, false});
    Level lv = level_state(poly, items);
    const int r = static_cast<int>(lv.sorted.size());
    if (t1_mode &&
        std::all_of(lv.gap.begin(), lv.gap.end(), [&](int g) { return g <= s; })) {
      if (r != levels - level)
        throw std::invalid_argument("label count does not fill the levels");
      for (int j = level; j < levels; ++j)
        if (nu[j] != 1)
          throw std::invalid_argument("nu must end with 1s at the diameter tail");
      out.diameter_labels.assign(remaining.begin(), remaining.end());
      return out;
    }
    int j = 0;
    while (j < r && lv.gap[j] < s + 1) ++j;
    if (j == r) throw std::invalid_argument("labels admit no peelable gap");
    const int anchor = lv.sorted[j].start;
    if (nu[level] == 1) {
      const Chord probe(anchor, poly.advance(anchor, s + 1));
      for (const Chord& c : poly.chord_orbit(probe)) out.chords.push_back(c);
      remaining.erase(remaining.find(anchor));
    }
    // Chords already rebuilt live in the untruncated polygon; only the
    // labels still to be processed must survive the window.
    std::set<int> protect(remaining.begin(), remaining.end());
    poly.remove_window_orbit(anchor, s, protect);
  }
  if (!remaining.empty()) {
    if (!t1_mode)
      throw std::invalid_argument("labels left over after the last level");
    throw std::invalid_argument("diameter labels never reached a tight base");
  }
  return out;
}

}  // namespace csl
