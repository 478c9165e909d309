#pragma once

#include <set>
#include <vector>

namespace csl {

/// Chord of a labeled polygon, endpoints 1-based with lo < hi.
struct Chord {
  int lo = 0;
  int hi = 0;
  Chord() = default;
  Chord(int a, int b) : lo(a < b ? a : b), hi(a < b ? b : a) {}
  bool operator<(const Chord& o) const {
    return lo != o.lo ? lo < o.lo : hi < o.hi;
  }
  bool operator==(const Chord& o) const { return lo == o.lo && hi == o.hi; }
};

/// Image of a rotation-invariant dissection under the peeling bijections: a
/// weakly increasing label sequence and a 0/1 sequence.
struct BijectionImage {
  std::vector<int> mu;
  std::vector<int> nu;
  bool operator==(const BijectionImage& o) const {
    return mu == o.mu && nu == o.nu;
  }
  bool operator<(const BijectionImage& o) const {
    return mu != o.mu ? mu < o.mu : nu < o.nu;
  }
};

/// Polygon with rotationally symmetric vertex removals. Vertices keep their
/// original 1-based names; positions index the surviving vertices in cyclic
/// order. All distances are in live steps (counterclockwise).
class PeelPolygon {
 public:
  PeelPolygon(int N, int gord);

  int live_count() const { return static_cast<int>(live_.size()); }
  int sector_size() const { return live_count() / gord_; }
  int gord() const { return gord_; }

  int pos(int v) const;           // live position of vertex v
  int vertex_at(int p) const;     // vertex at live position p (mod live count)
  int advance(int v, int steps) const;
  int live_distance(int u, int v) const;

  // Chord orbit under the rotation group (gord copies).
  std::vector<Chord> chord_orbit(const Chord& c) const;

  // Remove the s live vertices following `after`, together with all their
  // rotational copies. None of the removed vertices may occur in `protect`.
  void remove_window_orbit(int after, int s, const std::set<int>& protect);

 private:
  std::vector<int> live_;  // ascending original ids
  int gord_;
};

/// One chord- or diameter-orbit, identified by the start vertex of its
/// representative in the first sector.
struct PeelItem {
  int start = 0;
  bool diameter = false;
};

// Start vertex of a directed chord: the endpoint whose counterclockwise live
// span to the other endpoint is shorter (the side away from the center).
int chord_start(const PeelPolygon& poly, const Chord& c);

// Partition `chords` into rotation orbits and return one item per orbit,
// labeled by the representative start in the first sector.
std::vector<PeelItem> chord_orbit_items(const PeelPolygon& poly,
                                        const std::set<Chord>& chords);

/// Forward peeling: from the orbit items of an invariant dissection to the
/// 0/1 sequence of length `levels`. `t1_mode` enables the all-diameter base
/// case of the type-D variant. Consumes the context.
std::vector<int> forward_peel(PeelPolygon& poly, std::vector<PeelItem> items,
                              std::set<Chord> chords, int s, int levels,
                              bool t1_mode);

struct InversePeelResult {
  std::vector<Chord> chords;               // all reconstructed chords
  std::vector<int> diameter_labels;        // t1_mode: labels left at the base
};

/// Inverse peeling: rebuild the chord orbits (and, in t1 mode, the diameter
/// labels) from (mu, nu). Consumes the context.
InversePeelResult inverse_peel(PeelPolygon& poly, std::vector<int> mu,
                               const std::vector<int>& nu, int s, bool t1_mode);

}  // namespace csl
