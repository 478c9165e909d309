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

// Chords of one B-diagonal.
std::vector<Chord> b_chords(const BDiagonal& d, int M) {
  if (d.diameter) return {d.rep};
  return {d.rep, mirror_chord(d.rep, M)};
}

bool b_compatible(const BDiagonal& x, const BDiagonal& y, int M) {
  for (const Chord& a : b_chords(x, M))
    for (const Chord& b : b_chords(y, M))
      if (crossing(a, b)) return false;
  return true;
}

BDiagonal canonical_b(bool diameter, const Chord& c, int M) {
  BDiagonal d;
  d.diameter = diameter;
  d.rep = diameter ? c : std::min(c, mirror_chord(c, M));
  return d;
}

}  // namespace

PolygonB::PolygonB(int s, int n)
    : s_(s), n_(n), N_(2 * s * n + 2), cx_(0, 0) {
  ComplexType check(Family::B, n, s);
  const int M = N_ / 2;
  for (int i = 1; i <= M; ++i)
    verts_.push_back(canonical_b(true, Chord(i, i + M), M));
  std::set<BDiagonal> pairs;
  for (int u = 1; u <= N_; ++u)
    for (int v = u + 2; v <= N_; ++v) {
      if (u == 1 && v == N_) continue;
      if ((v - u) % s_ != 1 % s_) continue;
      if (v - u == M) continue;  // diameter
      pairs.insert(canonical_b(false, Chord(u, v), M));
    }
  verts_.insert(verts_.end(), pairs.begin(), pairs.end());
  std::sort(verts_.begin(), verts_.end());
  cx_ = CyclicComplex(static_cast<int>(verts_.size()), N_);
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j)
      if (b_compatible(verts_[i], verts_[j], M))
        cx_.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::map<BDiagonal, int> index;
  for (size_t i = 0; i < verts_.size(); ++i) index[verts_[i]] = static_cast<int>(i);
  std::vector<int> gen(verts_.size());
  for (size_t i = 0; i < verts_.size(); ++i) {
    const BDiagonal rotated = canonical_b(
        verts_[i].diameter, rotate_chord(verts_[i].rep, 1, N_), M);
    gen[i] = index.at(rotated);
  }
  cx_.set_generator(std::move(gen));
}

std::vector<Face> PolygonB::faces(int k, int threads) const {
  if (k < 0 || k > n_) throw std::out_of_range("k out of range for type B");
  return cx_.cliques(k, threads);
}

FaceB PolygonB::face_payload(const Face& f) const {
  FaceB x;
  x.N = N_;
  for (uint16_t v : f) x.diagonals.push_back(verts_[v]);
  std::sort(x.diagonals.begin(), x.diagonals.end());
  return x;
}

Face PolygonB::face_of(const FaceB& x) const {
  Face f;
  for (const BDiagonal& d : x.diagonals) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), d);
    if (it == verts_.end() || !(*it == d))
      throw std::invalid_argument("not a B-diagonal of this polygon");
    f.push_back(static_cast<uint16_t>(it - verts_.begin()));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::string PolygonB::serialize(const Face& f) const {
  std::ostringstream os;
  os << N_;
  for (uint16_t v : f) {
    const BDiagonal& d = verts_[v];
    if (d.diameter)
      os << "," << d.rep.lo << "-~" << d.rep.lo;
    else
      os << "," << d.rep.lo << "-" << d.rep.hi;
  }
  return os.str();
}

std::set<Chord> PolygonB::chord_set(const FaceB& x) const {
  std::set<Chord> chords;
  for (const BDiagonal& d : x.diagonals)
    for (const Chord& c : b_chords(d, M())) chords.insert(c);
  return chords;
}

std::vector<FaceB> enumerate_b(int s, int n, int k) {
  PolygonB model(s, n);
  std::vector<FaceB> out;
  for (const Face& f : model.faces(k)) out.push_back(model.face_payload(f));
  std::sort(out.begin(), out.end());
  return out;
}

FaceB rotate_b(int s, int n, const FaceB& x, int t) {
  const int N = 2 * s * n + 2;
  const int M = N / 2;
  FaceB y;
  y.N = x.N;
  for (const BDiagonal& d : x.diagonals)
    y.diagonals.push_back(
        canonical_b(d.diameter, rotate_chord(d.rep, t, N), M));
  std::sort(y.diagonals.begin(), y.diagonals.end());
  return y;
}

std::vector<FaceB> fixed_b(int s, int n, int k, int d) {
  const int N = 2 * s * n + 2;
  if (d < 2 || N % d != 0)
    throw std::invalid_argument("d must divide 2sn+2");
  PolygonB model(s, n);
  std::vector<FaceB> out;
  for (const Face& f : model.complex().fixed_faces(model.faces(k), d))
    out.push_back(model.face_payload(f));
  std::sort(out.begin(), out.end());
  return out;
}

BijectionImage bijection_b(const FaceB& x, int s, int n, int t) {
  const int N = 2 * s * n + 2;
  const int M = N / 2;
  if (x.N != N) throw std::invalid_argument("face size mismatch");
  const int k = static_cast<int>(x.diagonals.size());
  if (t < 2 || M % t != 0 || k % t != 0)
    throw std::invalid_argument("need t | sn+1 and t | k");
  for (const BDiagonal& d : x.diagonals)
    if (d.diameter)
      throw std::invalid_argument("faces fixed by 2t-fold rotation have no diameter");
  if (!(rotate_b(s, n, x, N / (2 * t)) == x))
    throw std::invalid_argument("face is not 2t-fold symmetric");
  PolygonB model(s, n);
  PeelPolygon poly(N, 2 * t);
  std::set<Chord> chords = model.chord_set(x);
  std::vector<PeelItem> items = chord_orbit_items(poly, chords);
  BijectionImage img;
  for (const PeelItem& it : items) img.mu.push_back(it.start);
  std::sort(img.mu.begin(), img.mu.end());
  img.nu = forward_peel(poly, std::move(items), std::move(chords), s,
                        (n - 1) / t, false);
  return img;
}

FaceB bijection_b_inverse(const BijectionImage& img, int s, int n, int t) {
  const int N = 2 * s * n + 2;
  const int M = N / 2;
  if (t < 2 || M % t != 0)
    throw std::invalid_argument("need t | sn+1");
  const int m = (n - 1) / t;
  if (static_cast<int>(img.nu.size()) != m)
    throw std::invalid_argument("nu must have floor((n-1)/t) entries");
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
  FaceB x;
  x.N = N;
  std::set<BDiagonal> seen;
  for (const Chord& c : res.chords)
    seen.insert(canonical_b(false, c, M));
  x.diagonals.assign(seen.begin(), seen.end());
  if (2 * x.diagonals.size() != res.chords.size())
    throw std::logic_error("reconstructed chords do not pair up");
  return x;
}

}  // namespace csl
