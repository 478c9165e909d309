#include <doctest.h>

#include "csl/polygons.hpp"

using namespace csl;

TEST_CASE("I2 graph shapes") {
  const I2Graph g = build_i2(2, 5);
  CHECK(g.nverts == 12);
  CHECK(g.edges.size() == 18);
  std::vector<int> deg(g.nverts, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  for (int d : deg) CHECK(d == 3);

  const I2Graph h = build_i2(2, 4);
  CHECK(h.nverts == 10);
  CHECK(h.edges.size() == 15);
  // Seed vertex 0 joins exactly the odd offsets 1, 3, 5.
  for (int o : {1, 3, 5})
    CHECK(std::count(h.edges.begin(), h.edges.end(), std::make_pair(0, o)) == 1);
}

TEST_CASE("edge counts equal the facet numbers") {
  for (int s = 1; s <= 4; ++s)
    for (int a = 3; a <= 8; ++a) {
      ComplexType t(Family::I2, a, s);
      CHECK(Int(build_i2(s, a).edges.size()) == face_count(t, 2));
    }
  // I2(3) is the rank-2 chamber of type A: its facet count matches the
  // pentagon model.
  CHECK(build_i2(1, 3).edges.size() == enumerate_a(1, 3, 2).size());
}

TEST_CASE("fixed edges under rotations") {
  CHECK(fixed_i2_edges(2, 5, 2).size() == 6);
  for (auto [u, v] : fixed_i2_edges(2, 5, 2)) CHECK((v - u) == 6);
  // a even: the order-2 element acts trivially, so everything is fixed.
  CHECK(fixed_i2_edges(2, 4, 2).size() == 15);
  CHECK(fixed_i2_vertices(2, 4, 2).size() == 10);
  for (int d : {5, 10})
    CHECK(fixed_i2_edges(2, 4, d).empty());
  // a odd with s odd leaves an odd group order, so d = 2 never applies;
  // for even s the antipodal edges are exactly the fixed ones.
  CHECK((1 * 3 + 2) % 2 == 1);
}

TEST_CASE("vertex orbit structure") {
  I2Model odd(2, 5);
  auto hist_odd = odd.complex().orbit_structure(odd.faces(1));
  CHECK(hist_odd.size() == 1);
  CHECK(hist_odd.begin()->first == 12);
  CHECK(hist_odd.begin()->second == 1);

  I2Model even(2, 4);
  auto hist_even = even.complex().orbit_structure(even.faces(1));
  CHECK(hist_even.size() == 1);
  CHECK(hist_even.begin()->first == 5);
  CHECK(hist_even.begin()->second == 2);
}
