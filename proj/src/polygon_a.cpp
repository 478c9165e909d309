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

}  // namespace

PolygonA::PolygonA(int s, int n) : s_(s), n_(n), N_(s * n + 2), cx_(0, 0) {
  ComplexType check(Family::A, n, s);  // validates parameter ranges
  for (int u = 1; u <= N_; ++u)
    for (int v = u + 2; v <= N_; ++v) {
      if (u == 1 && v == N_) continue;
      if ((v - u) % s_ != 1 % s_) continue;
      verts_.emplace_back(u, v);
    }
  std::sort(verts_.begin(), verts_.end());
  cx_ = CyclicComplex(static_cast<int>(verts_.size()), N_);
  for (size_t i = 0; i < verts_.size(); ++i)
    for (size_t j = i + 1; j < verts_.size(); ++j)
      if (!crossing(verts_[i], verts_[j]))
        cx_.add_edge(static_cast<int>(i), static_cast<int>(j));
  std::map<Chord, int> index;
  for (size_t i = 0; i < verts_.size(); ++i) index[verts_[i]] = static_cast<int>(i);
  std::vector<int> gen(verts_.size());
  for (size_t i = 0; i < verts_.size(); ++i)
    gen[i] = index.at(rotate_chord(verts_[i], 1, N_));
  cx_.set_generator(std::move(gen));
}

std::vector<Face> PolygonA::faces(int k, int threads) const {
  if (k < 0 || k > n_ - 1) throw std::out_of_range("k out of range for type A");
  return cx_.cliques(k, threads);
}

DissectionA PolygonA::dissection(const Face& f) const {
  DissectionA x;
  x.N = N_;
  for (uint16_t v : f) x.chords.push_back(verts_[v]);
  std::sort(x.chords.begin(), x.chords.end());
  return x;
}

Face PolygonA::face_of(const DissectionA& x) const {
  Face f;
  for (const Chord& c : x.chords) {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), c);
    if (it == verts_.end() || !(*it == c))
      throw std::invalid_argument("chord is not an s-divisible diagonal");
    f.push_back(static_cast<uint16_t>(it - verts_.begin()));
  }
  std::sort(f.begin(), f.end());
  return f;
}

std::string PolygonA::serialize(const Face& f) const {
  std::ostringstream os;
  os << N_;
  for (uint16_t v : f) os << "," << verts_[v].lo << "-" << verts_[v].hi;
  return os.str();
}

std::vector<DissectionA> enumerate_a(int s, int n, int k) {
  PolygonA model(s, n);
  std::vector<DissectionA> out;
  for (const Face& f : model.faces(k)) out.push_back(model.dissection(f));
  std::sort(out.begin(), out.end());
  return out;
}

DissectionA rotate_a(const DissectionA& x, int t) {
  DissectionA y;
  y.N = x.N;
  for (const Chord& c : x.chords) y.chords.push_back(rotate_chord(c, t, x.N));
  std::sort(y.chords.begin(), y.chords.end());
  return y;
}

std::vector<DissectionA> fixed_a(int s, int n, int k, int d) {
  const int N = s * n + 2;
  if (d < 2 || N % d != 0)
    throw std::invalid_argument("d must divide sn+2");
  PolygonA model(s, n);
  std::vector<DissectionA> out;
  for (const Face& f : model.complex().fixed_faces(model.faces(k), d))
    out.push_back(model.dissection(f));
  std::sort(out.begin(), out.end());
  return out;
}

BijectionImage bijection_a(const DissectionA& x, int s, int n, int d) {
  const int N = s * n + 2;
  if (x.N != N) throw std::invalid_argument("dissection size mismatch");
  const int k = static_cast<int>(x.chords.size());
  if (d < 2 || N % d != 0 || k % d != 0)
    throw std::invalid_argument("need d | sn+2 and d | k");
  if (!(rotate_a(x, N / d) == x))
    throw std::invalid_argument("dissection is not d-fold symmetric");
  PeelPolygon poly(N, d);
  std::set<Chord> chords(x.chords.begin(), x.chords.end());
  std::vector<PeelItem> items = chord_orbit_items(poly, chords);
  BijectionImage img;
  for (const PeelItem& it : items) img.mu.push_back(it.start);
  std::sort(img.mu.begin(), img.mu.end());
  img.nu = forward_peel(poly, std::move(items), std::move(chords), s,
                        (n - 1) / d, false);
  return img;
}

DissectionA bijection_a_inverse(const BijectionImage& img, int s, int n, int d) {
  const int N = s * n + 2;
  if (d < 2 || N % d != 0)
    throw std::invalid_argument("need d | sn+2");
  const int m = (n - 1) / d;
  if (static_cast<int>(img.nu.size()) != m)
    throw std::invalid_argument("nu must have floor((n-1)/d) entries");
  const int b = N / d;
  int ones = 0;
  for (int e : img.nu) ones += e;
  if (ones != static_cast<int>(img.mu.size()))
    throw std::invalid_argument("nu must have exactly |mu| ones");
  for (size_t i = 0; i < img.mu.size(); ++i) {
    if (img.mu[i] < 1 || img.mu[i] > b)
      throw std::invalid_argument("mu entry out of range");
    if (i > 0 && img.mu[i] < img.mu[i - 1])
      throw std::invalid_argument("mu must be weakly increasing");
  }
  PeelPolygon poly(N, d);
  InversePeelResult res = inverse_peel(poly, img.mu, img.nu, s, false);
  DissectionA x;
  x.N = N;
  x.chords = std::move(res.chords);
  std::sort(x.chords.begin(), x.chords.end());
  return x;
}

std::vector<std::vector<int>> dissection_cells(int N,
                                               const std::vector<Chord>& chords) {
  std::vector<std::vector<int>> cells;
  // Recursive split along the first chord of the region.
  struct Rec {
    std::vector<std::vector<int>>& cells;
    void run(std::vector<int> region, std::vector<Chord> inside) {
      if (inside.empty()) {
        cells.push_back(std::move(region));
        return;
      }
      Chord c = inside.back();
      inside.pop_back();
      std::vector<int> left, right;
      for (int v : region) {
        if (v >= c.lo && v <= c.hi) left.push_back(v);
        if (v <= c.lo || v >= c.hi) right.push_back(v);
      }
      std::vector<Chord> lin, rin;
      for (const Chord& e : inside) {
        if (e.lo >= c.lo && e.hi <= c.hi &&
            !(e.lo == c.lo && e.hi == c.hi))
          lin.push_back(e);
        else
          rin.push_back(e);
      }
      run(std::move(left), std::move(lin));
      run(std::move(right), std::move(rin));
    }
  } rec{cells};
  std::vector<int> whole(N);
  for (int i = 0; i < N; ++i) whole[i] = i + 1;
  rec.run(std::move(whole), chords);
  return cells;
}

}  // namespace csl
