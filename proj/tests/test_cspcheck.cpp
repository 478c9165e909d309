#include <doctest.h>

#include "csl/cspcheck.hpp"
#include "csl/exceptional_ref.hpp"
#include "csl/polygons.hpp"

using namespace csl;

namespace {

std::vector<Int> ints(std::vector<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("the octagon example passes with the right orbit split") {
  const CSPReport rep = verify_polygon(ComplexType(Family::A, 3, 2), 2);
  CHECK(rep.pass);
  CHECK(rep.residues == ints({2, 1, 2, 1, 2, 1, 2, 1}));
  REQUIRE(rep.orbits.size() == 2);
  CHECK(rep.orbits[0].size == 8);
  CHECK(rep.orbits[0].count == 1);
  CHECK(rep.orbits[1].size == 4);
  CHECK(rep.orbits[1].count == 1);
}

TEST_CASE("the type B example has three orbits with order 2 stabilizers") {
  const CSPReport rep = verify_polygon(ComplexType(Family::B, 3, 1), 1);
  CHECK(rep.pass);
  CHECK(rep.residues == ints({3, 0, 3, 0, 3, 0, 3, 0}));
  REQUIRE(rep.orbits.size() == 1);
  CHECK(rep.orbits[0].size == 4);
  CHECK(rep.orbits[0].count == 3);
}

TEST_CASE("the type D example reports four orbits of size four") {
  const CSPReport rep = verify_polygon(ComplexType(Family::D, 2, 3), 2);
  CHECK(rep.pass);
  CHECK(rep.residues == ints({4, 0, 4, 0, 4, 0, 4, 0}));
  REQUIRE(rep.orbits.size() == 1);
  CHECK(rep.orbits[0].size == 4);
  CHECK(rep.orbits[0].count == 4);
}

TEST_CASE("the I2 facet triples pass") {
  CHECK(verify_polygon(ComplexType(Family::I2, 5, 2), 2).pass);
  CHECK(verify_polygon(ComplexType(Family::I2, 4, 2), 2).pass);
  CHECK(verify_polygon(ComplexType(Family::I2, 6, 3), 1).pass);
  CHECK(verify_polygon(ComplexType(Family::I2, 7, 2), 1).pass);
}

TEST_CASE("a wrong candidate polynomial is rejected at construction") {
  PolygonA model(2, 3);
  CHECK_THROWS_AS(
      CSPInstance("A", 2, 3, 2, &model.complex(), model.faces(2),
                  q_int(7)),
      std::invalid_argument);
}

TEST_CASE("fixed sets are nested along divisor chains") {
  PolygonA model(2, 3);
  const auto faces = model.faces(2);
  // The order-2 element is a power of the order-4 and order-8 elements.
  const auto f2 = model.complex().fixed_faces(faces, 2);
  for (int d : {4, 8})
    for (const Face& f : model.complex().fixed_faces(faces, d))
      CHECK(std::count(f2.begin(), f2.end(), f) == 1);
}

TEST_CASE("facet verification with the Catalan polynomial") {
  CHECK(verify_facets_catalan("A", 3, 1).pass);
  CHECK(verify_facets_catalan("A", 3, 2).pass);
  CHECK(verify_facets_catalan("B", 3, 2).pass);
  CHECK(verify_facets_catalan("D", 4, 1).pass);
  CHECK(verify_facets_catalan("I2", 5, 3).pass);
  const CSPReport h3 = verify_facets_catalan("H3", 3, 1);
  CHECK(h3.pass);
  std::vector<Int> expect;
  for (long long a : exceptional_catalan_residues("H3")) expect.push_back(a);
  CHECK(h3.residues == expect);
}

TEST_CASE("JSON round trip") {
  const CSPReport rep = verify_polygon(ComplexType(Family::A, 3, 2), 2);
  const std::string blob = rep.to_json();
  const CSPReport back = CSPReport::from_json(blob);
  CHECK(back == rep);
  CHECK(back.to_json() == blob);
}
