#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "csl/polygons.hpp"

namespace csl {

namespace {

bool crossing(const Chord& a, const Chord& b) {
  return (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
         (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
}

Chord rotate_chord(const Chord& c, int t, int N) {
  auto rot = [&](int v) { return (v - 1 - t % N + 2 * N) % N + 1; };
  return Chord(rot(c.lo), rot(c.hi));
}

int mirror_vertex(int v, int M) { return v <= M ? v + M : v - M; }

Chord mirror_chord(const Chord& c, int M) {
  return Chord(mirror_vertex(c.lo, M), mirror_vertex(c.hi, M));
}

DColor flipped(DColor c) { return c == DColor::Red ? DColor::Blue : DColor::Red; }

// Does the diameter change color when carried from index j to j-1? The
// color-switcher edges sit after every block of s vertices, plus the seam
// between the last diameter and the mirrored first vertex.
bool switch_at(int j, int s) { return j == 1 || (j - 2) % s == 0; }

// One rotation step applied to a colored diameter with initial point j.
std::pair<int, DColor> gamma_diameter(int M, int s, int j, DColor c) {
  const DColor nc = switch_at(j, s) ? flipped(c) : c;
  return {j == 1 ? M : j - 1, nc};
}

bool diam_compatible(int M, int s, int i, DColor ci, int j, DColor cj) {
  if (i == j) return ci != cj;
  int guard = 2 * M + 2;
  while (i != 1 && j != 1) {
    std::tie(i, ci) = gamma_diameter(M, s, i, ci);
    std::tie(j, cj) = gamma_diameter(M, s, j, cj);
    if (--guard < 0)
      throw std::logic_error("diameter transport did not reach the base");
  }
  return ci == cj;
}

std::vector<Chord> d_chords(const DDiagonal& d, int M) {
  if (d.kind == DDiagonal::Kind::Diameter)
    return {Chord(d.idx, d.idx + M)};
  return {d.rep, mirror_chord(d.rep, M)};
}

bool d_compatible(const DDiagonal& x, const DDiagonal& y, int M, int s) {
  if (x.kind == DDiagonal::Kind::Diameter &&
      y.kind == DDiagonal::Kind::Diameter)
    return diam_compatible(M, s, x.idx, x.color, y.idx, y.color);
  for (const Chord& a : d_chords(x, M))
    for (const Chord& b : d_chords(y, M))
      if (crossing(a, b)) return false;
  return true;
}

DDiagonal make_diameter(int idx, DColor c) {
  DDiagonal d;
  d.kind = DDiagonal::Kind::Diameter;
  d.idx = idx;
  d.color = c;
  return d;
}

DDiagonal make_sympair(const Chord& c, int M) {
  DDiagonal d;
  d.kind = DDiagonal::Kind::SymPair;
  d.rep = std::min(c, mirror_chord(c, M));
  return d;
}

DDiagonal gamma_one_step(const DDiagonal& v, int M, int s) {
  if (v.kind == DDiagonal::Kind::Diameter) {
    auto [idx, c] = gamma_diameter(M, s, v.idx, v.color);
    return make_diameter(idx, c);
  }
  return make_sympair(rotate_chord(v.rep, 1, 2 * M), M);
}

}  // namespace

PolygonD::PolygonD(int s, int n)
    : s_(s), n_(n), N_(2 * s * (n - 1) + 2), cx_(0, 0) {
  ComplexType check(Family::D, n, s);
  const int M = N_ / 2;
  for (int i = 1; i <= M; ++i) {
    verts_.push_back(make_diameter(i, DColor::Red));
    verts_.push_back(make_diameter(i, DColor::Blue));
  }
  std::set<DDiagonal> pairs;
  for (int u = 1; u <= N_; ++u)
    for (int v = u + 2; v <= N_; ++v) {
      if (u == 1 && v == N_) continue;
      if ((v - u) % s_ != 1 % s_) continue;
      if (v - u == M) continue;
      pairs.insert(make_sympair(Chord(u, v), M));
    }
  verts_.insert(verts_.end(), pairs.begin(), pairs.end());
  std::sort(verts_.begin(), verts_.end());
  cx_ = CyclicComplex(static_cast<int>(verts_.size()), N_);
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j)
      if (d_compatible(verts_[i], verts_[j], M, s_))
        cx_.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::map<DDiagonal, int> index;
  for (size_t i = 0; i < verts_.size(); ++i) index[verts_[i]] = static_cast<int>(i);
  std::vector<int> gen(verts_.size());
  for (size_t i = 0; i < verts_.size(); ++i)
    gen[i] = index.at(gamma_one_step(verts_[i], M, s_));
  cx_.set_generator(std::move(gen));
}

std::vector<Face> PolygonD::faces(int k, int threads) const {
  if (k < 0 || k > n_) throw std::out_of_range("k out of range for type D");
  return cx_.cliques(k, threads);
}

FaceD PolygonD::face_payload(const Face& f) const {
  FaceD x;
  x.N = N_;
  for (uint16_t v : f) x.diagonals.push_back(verts_[v]);
  std::sort(x.diagonals.begin(), x.diagonals.end());
  return x;
}

Face PolygonD::face_of(const FaceD& x) const {
  Face f;
  for (const DDiagonal& d : x.diagonals) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), d);
    if (it == verts_.end() || !(*it == d))
      throw std::invalid_argument("not a D-diagonal of this polygon");
    f.push_back(static_cast<uint16_t>(it - verts_.begin()));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::string PolygonD::serialize(const Face& f) const {
  std::ostringstream os;
  os << N_;
  for (uint16_t v : f) {
    const DDiagonal& d = verts_[v];
    if (d.kind == DDiagonal::Kind::Diameter)
      os << "," << d.idx << "-~" << d.idx
         << (d.color == DColor::Red ? ":red" : ":blue");
    else
      os << "," << d.rep.lo << "-" << d.rep.hi;
  }
  return os.str();
}

DDiagonal PolygonD::gamma_one(const DDiagonal& v) const {
  return gamma_one_step(v, M(), s_);
}

bool PolygonD::diameters_compatible(int i, DColor ci, int j, DColor cj) const {
  return diam_compatible(M(), s_, i, ci, j, cj);
}

std::vector<FaceD> enumerate_d(int s, int n, int k) {
  PolygonD model(s, n);
  std::vector<FaceD> out;
  for (const Face& f : model.faces(k)) out.push_back(model.face_payload(f));
  std::sort(out.begin(), out.end());
  return out;
}

FaceD gamma_d(int s, int n, const FaceD& x, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  if (x.N != N) throw std::invalid_argument("face size mismatch");
  t = ((t % N) + N) % N;
  FaceD y = x;
  for (int step = 0; step < t; ++step) {
    for (DDiagonal& d : y.diagonals) d = gamma_one_step(d, M, s);
  }
  std::sort(y.diagonals.begin(), y.diagonals.end());
  return y;
}

std::vector<FaceD> fixed_d(int s, int n, int k, int d) {
  const int N = 2 * s * (n - 1) + 2;
  if (d < 2 || N % d != 0)
    throw std::invalid_argument("d must divide 2s(n-1)+2");
  PolygonD model(s, n);
  std::vector<FaceD> out;
  for (const Face& f : model.complex().fixed_faces(model.faces(k), d))
    out.push_back(model.face_payload(f));
  std::sort(out.begin(), out.end());
  return out;
}

int t_class(const FaceD& x) {
  for (const DDiagonal& d : x.diagonals)
    if (d.kind == DDiagonal::Kind::Diameter)
      return d.color == DColor::Red ? 1 : 2;
  return 0;
}

namespace {

struct DOrbitSplit {
  std::vector<PeelItem> items;
  std::set<Chord> chords;  // sympair chords only
};

// The bijections act on the underlying dissection: the sympair chords and
// the diameter endpoints must be invariant under the 2t-fold rotation of
// the polygon. The colors are pinned separately by the two-way assignment,
// so they are not transported here.
bool d_chord_pattern_invariant(const FaceD& x, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  const int step = N / (2 * t);
  std::set<Chord> chords;
  std::set<int> endpoints;
  for (const DDiagonal& d : x.diagonals) {
    if (d.kind == DDiagonal::Kind::SymPair)
      for (const Chord& c : d_chords(d, M)) chords.insert(c);
    else
      endpoints.insert(d.idx);
  }
  for (const Chord& c : chords)
    if (!chords.count(rotate_chord(c, step, N))) return false;
  for (int e : endpoints) {
    const int shifted = (e - 1 - step % M + 2 * M) % M + 1;
    if (!endpoints.count(shifted)) return false;
  }
  return true;
}

// Partition the D-diagonals into rotation orbits and label each orbit by
// the initial point of its first-sector representative. Diameter orbits
// follow the endpoints; each endpoint must carry exactly one color.
DOrbitSplit d_orbit_items(const FaceD& x, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  const int b = M / t;
  DOrbitSplit out;
  PeelPolygon poly(N, 2 * t);
  for (const DDiagonal& d : x.diagonals)
    if (d.kind == DDiagonal::Kind::SymPair)
      for (const Chord& c : d_chords(d, M)) out.chords.insert(c);
  out.items = chord_orbit_items(poly, out.chords);
  std::set<int> endpoints;
  for (const DDiagonal& d : x.diagonals) {
    if (d.kind != DDiagonal::Kind::Diameter) continue;
    if (!endpoints.insert(d.idx).second)
      throw std::invalid_argument("both colors of one diameter in the face");
  }
  std::set<int> seen;
  for (int e : endpoints) {
    if (seen.count(e)) continue;
    int rep = -1;
    int idx = e;
    for (int j = 0; j < t; ++j) {
      if (!endpoints.count(idx))
        throw std::invalid_argument("diameter endpoints are not invariant");
      seen.insert(idx);
      if (idx <= b) {
        if (rep != -1)
          throw std::logic_error("two diameters of one orbit in sector one");
        rep = idx;
      }
      idx = (idx - 1 - b % M + 2 * M) % M + 1;
    }
    if (idx != e)
      throw std::logic_error("diameter endpoint orbit has the wrong size");
    if (rep == -1)
      throw std::logic_error("diameter orbit misses the first sector");
    out.items.push_back({rep, true});
  }
  return out;
}

}  // namespace

BijectionImage bijection_d_t1(const FaceD& x, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  const int k = static_cast<int>(x.diagonals.size());
  if (x.N != N) throw std::invalid_argument("face size mismatch");
  if (t < 2 || M % t != 0 || k % t != 0 || n % t != 0)
    throw std::invalid_argument("need t | s(n-1)+1, t | k and t | n");
  if (t_class(x) != 1)
    throw std::invalid_argument("face is not in T1 (first diameter red)");
  if (!d_chord_pattern_invariant(x, s, n, t))
    throw std::invalid_argument("dissection is not 2t-fold symmetric");
  DOrbitSplit split = d_orbit_items(x, s, n, t);
  BijectionImage img;
  for (const PeelItem& it : split.items) img.mu.push_back(it.start);
  std::sort(img.mu.begin(), img.mu.end());
  PeelPolygon poly(N, 2 * t);
  img.nu = forward_peel(poly, std::move(split.items), std::move(split.chords),
                        s, n / t, true);
  return img;
}

FaceD bijection_d_t1_inverse(const BijectionImage& img, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  if (t < 2 || M % t != 0 || n % t != 0)
    throw std::invalid_argument("need t | s(n-1)+1 and t | n");
  const int m = n / t;
  if (static_cast<int>(img.nu.size()) != m)
    throw std::invalid_argument("nu must have n/t entries");
  if (m >= 1 && img.nu.back() != 1)
    throw std::invalid_argument("the last entry of nu must be 1");
  int ones = 0;
  for (int e : img.nu) ones += e;
  if (ones != static_cast<int>(img.mu.size()))
    throw std::invalid_argument("nu must have exactly |mu| ones");
  const int b = M / t;
  for (size_t i = 0; i < img.mu.size(); ++i) {
    if (img.mu[i] < 1 || img.mu[i] > b)
      throw std::invalid_argument("mu entry out of range");
    if (i > 0 && img.mu[i] < img.mu[i - 1])
      throw std::invalid_argument("mu must be weakly increasing");
  }
  PeelPolygon poly(N, 2 * t);
  InversePeelResult res = inverse_peel(poly, img.mu, img.nu, s, true);
  FaceD x;
  x.N = N;
  std::set<DDiagonal> acc;
  for (const Chord& c : res.chords) acc.insert(make_sympair(c, M));
  // Diameter orbits sit at the base-level sector translates of each label.
  const int b_live = poly.live_count() / (2 * t);
  std::vector<int> idxs;
  for (int label : res.diameter_labels)
    for (int j = 0; j < t; ++j) {
      const int v = poly.vertex_at(poly.pos(label) + j * b_live);
      if (v > M) throw std::logic_error("diameter initial point is mirrored");
      idxs.push_back(v);
    }
  std::sort(idxs.begin(), idxs.end());
  if (!idxs.empty()) {
    const int first = idxs.front();
    for (int idx : idxs) {
      DColor c = DColor::Red;
      if (idx != first &&
          !diam_compatible(M, s, first, DColor::Red, idx, DColor::Red))
        c = DColor::Blue;
      acc.insert(make_diameter(idx, c));
    }
  }
  x.diagonals.assign(acc.begin(), acc.end());
  return x;
}

BijectionImage bijection_d_t0(const FaceD& x, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  const int k = static_cast<int>(x.diagonals.size());
  if (x.N != N) throw std::invalid_argument("face size mismatch");
  if (t < 2 || M % t != 0 || k % t != 0)
    throw std::invalid_argument("need t | s(n-1)+1 and t | k");
  if (t_class(x) != 0)
    throw std::invalid_argument("face is not in T0 (it has a diameter)");
  if (!(gamma_d(s, n, x, N / (2 * t)) == x))
    throw std::invalid_argument("face is not 2t-fold invariant");
  DOrbitSplit split = d_orbit_items(x, s, n, t);
  BijectionImage img;
  for (const PeelItem& it : split.items) img.mu.push_back(it.start);
  std::sort(img.mu.begin(), img.mu.end());
  PeelPolygon poly(N, 2 * t);
  img.nu = forward_peel(poly, std::move(split.items), std::move(split.chords),
                        s, (n - 2) / t, false);
  return img;
}

FaceD bijection_d_t0_inverse(const BijectionImage& img, int s, int n, int t) {
  const int N = 2 * s * (n - 1) + 2;
  const int M = N / 2;
  if (t < 2 || M % t != 0)
    throw std::invalid_argument("need t | s(n-1)+1");
  const int m = (n - 2) / t;
  if (static_cast<int>(img.nu.size()) != m)
    throw std::invalid_argument("nu must have floor((n-2)/t) entries");
  int ones = 0;
  for (int e : img.nu) ones += e;
  if (ones != static_cast<int>(img.mu.size()))
    throw std::invalid_argument("nu must have exactly |mu| ones");
  const int b = M / t;
  for (size_t i = 0; i < img.mu.size(); ++i) {
    if (img.mu[i] < 1 || img.mu[i] > b)
      throw std::invalid_argument("mu entry out of range");
    if (i > 0 && img.mu[i] < img.mu[i - 1])
      throw std::invalid_argument("mu must be weakly increasing");
  }
  PeelPolygon poly(N, 2 * t);
  InversePeelResult res = inverse_peel(poly, img.mu, img.nu, s, false);
  FaceD x;
  x.N = N;
  std::set<DDiagonal> acc;
  for (const Chord& c : res.chords) acc.insert(make_sympair(c, M));
  x.diagonals.assign(acc.begin(), acc.end());
  return x;
}

}  // namespace csl
