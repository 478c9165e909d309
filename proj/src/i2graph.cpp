#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "csl/polygons.hpp"

namespace csl {

I2Graph build_i2(int s, int a) {
  ComplexType check(Family::I2, a, s);
  I2Graph g;
  g.s = s;
  g.a = a;
  g.nverts = s * a + 2;
  std::set<std::pair<int, int>> edges;
  auto put = [&](int u, int v) {
    u = ((u % g.nverts) + g.nverts) % g.nverts;
    v = ((v % g.nverts) + g.nverts) % g.nverts;
    if (u == v) throw std::logic_error("degenerate edge in I2 graph");
    edges.insert({std::min(u, v), std::max(u, v)});
  };
  if (a % 2 == 1) {
    // Every vertex v joins v + s(a-1)/2 + j for j = 1..s+1.
    const int base = s * (a - 1) / 2;
    for (int v = 0; v < g.nverts; ++v)
      for (int j = 1; j <= s + 1; ++j) put(v, v + base + j);
  } else {
    // Seed vertex 0 joins the odd offsets 1, 3, ..., 2s+1; the edge set is
    // invariant under rotation by 2.
    for (int v = 0; v < g.nverts; v += 2)
      for (int j = 0; j <= s; ++j) put(v, v + 1 + 2 * j);
  }
  g.edges.assign(edges.begin(), edges.end());
  const size_t expected = static_cast<size_t>(g.nverts) * (s + 1) / 2;
  if (g.edges.size() != expected)
    throw std::logic_error("I2 graph is not (s+1)-regular");
  return g;
}

I2Model::I2Model(int s, int a)
    : g_(build_i2(s, a)), step_(a % 2 == 1 ? 1 : 2), cx_(g_.nverts, g_.nverts) {
  for (auto [u, v] : g_.edges) cx_.add_edge(u, v);
  std::vector<int> gen(g_.nverts);
  for (int v = 0; v < g_.nverts; ++v) gen[v] = (v + step_) % g_.nverts;
  cx_.set_generator(std::move(gen));
}

std::vector<Face> I2Model::faces(int k, int threads) const {
  if (k < 0 || k > 2) throw std::out_of_range("k out of range for type I2");
  return cx_.cliques(k, threads);
}

std::string I2Model::serialize(const Face& f) const {
  std::ostringstream os;
  os << g_.nverts;
  for (uint16_t v : f) os << "," << v;
  return os.str();
}

std::vector<std::pair<int, int>> fixed_i2_edges(int s, int a, int d) {
  const int N = s * a + 2;
  if (d < 1 || N % d != 0)
    throw std::invalid_argument("d must divide sa+2");
  I2Model model(s, a);
  std::vector<std::pair<int, int>> out;
  for (const Face& f : model.complex().fixed_faces(model.faces(2), d))
    out.push_back({f[0], f[1]});
  return out;
}

std::vector<int> fixed_i2_vertices(int s, int a, int d) {
  const int N = s * a + 2;
  if (d < 1 || N % d != 0)
    throw std::invalid_argument("d must divide sa+2");
  I2Model model(s, a);
  std::vector<int> out;
  for (const Face& f : model.complex().fixed_faces(model.faces(1), d))
    out.push_back(f[0]);
  return out;
}

}  // namespace csl
