#include <doctest.h>

#include <map>
#include <set>

#include "csl/polygons.hpp"

using namespace csl;

TEST_CASE("noncrossing tree counts") {
  // 1/(2n+1) * C(3n, n) trees on n+1 points.
  for (int n = 1; n <= 6; ++n) {
    const Int expect = binomial(3 * n, n) / (2 * n + 1);
    CHECK(Int(enumerate_nc_trees(n + 1).size()) == expect);
  }
}

TEST_CASE("the single edge tree maps to the bare square") {
  NCTree t;
  t.points = 2;
  t.edges = {Chord(1, 2)};
  const DissectionA q = nc_tree_to_quadrangulation(t);
  CHECK(q.N == 4);
  CHECK(q.chords.empty());
  CHECK(quadrangulation_to_nc_tree(q) == t);
}

TEST_CASE("tree validation rejects bad inputs") {
  NCTree crossing;
  crossing.points = 4;
  crossing.edges = {Chord(1, 3), Chord(2, 4), Chord(1, 2)};
  CHECK_THROWS(nc_tree_to_quadrangulation(crossing));
  NCTree cyclic;
  cyclic.points = 3;
  cyclic.edges = {Chord(1, 2), Chord(2, 3)};
  cyclic.edges.push_back(Chord(1, 3));
  CHECK_THROWS(nc_tree_to_quadrangulation(cyclic));
}

TEST_CASE("the correspondence is a bijection intertwining the rotations") {
  for (int n = 2; n <= 5; ++n) {
    const auto trees = enumerate_nc_trees(n + 1);
    const auto quads = enumerate_a(2, n, n - 1);
    REQUIRE(trees.size() == quads.size());
    std::set<DissectionA> images;
    for (const NCTree& t : trees) {
      const DissectionA q = nc_tree_to_quadrangulation(t);
      CHECK(quadrangulation_to_nc_tree(q) == t);
      // Rotating the tree one step matches rotating the polygon two steps.
      CHECK(nc_tree_to_quadrangulation(rotate_nc_tree(t, 1)) ==
            rotate_a(q, 2));
      images.insert(q);
    }
    CHECK(images.size() == trees.size());
    std::set<DissectionA> all(quads.begin(), quads.end());
    CHECK(images == all);
  }
}
