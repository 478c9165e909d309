#include <doctest.h>

#include <set>

#include "csl/polygons.hpp"

using namespace csl;

TEST_CASE("type B enumeration counts") {
  CHECK(enumerate_b(1, 3, 1).size() == 12);
  for (int s = 1; s <= 3; ++s)
    for (int n = 2; n <= 4; ++n) {
      ComplexType t(Family::B, n, s);
      for (int k = 0; k <= n; ++k)
        CHECK(Int(enumerate_b(s, n, k).size()) == face_count(t, k));
    }
}

TEST_CASE("every B face is centrally symmetric") {
  for (int s = 1; s <= 2; ++s)
    for (int n = 2; n <= 4; ++n) {
      const int N = 2 * s * n + 2;
      for (int k = 0; k <= n; ++k)
        for (const FaceB& x : enumerate_b(s, n, k))
          CHECK(rotate_b(s, n, x, N / 2) == x);
    }
}

TEST_CASE("all faces are fixed by the half turn") {
  CHECK(fixed_b(1, 3, 1, 2).size() == 12);
  for (int k = 0; k <= 4; ++k)
    CHECK(fixed_b(2, 4, k, 2).size() == enumerate_b(2, 4, k).size());
}

TEST_CASE("B rotation has the stated group order") {
  const int s = 2, n = 3, N = 2 * s * n + 2;
  for (const FaceB& x : enumerate_b(s, n, 2)) {
    CHECK(rotate_b(s, n, x, N) == x);
    int order = 1;
    FaceB y = rotate_b(s, n, x, 1);
    while (!(y == x)) {
      y = rotate_b(s, n, y, 1);
      ++order;
    }
    CHECK(N % order == 0);
  }
}

TEST_CASE("the 20-gon image ((2,5),(0,1,1,0)) round trips") {
  BijectionImage img;
  img.mu = {2, 5};
  img.nu = {0, 1, 1, 0};
  const FaceB x = bijection_b_inverse(img, 1, 9, 2);
  CHECK(x.diagonals.size() == 4);
  const auto fixed = fixed_b(1, 9, 4, 4);
  CHECK(std::count(fixed.begin(), fixed.end(), x) == 1);
  CHECK(bijection_b(x, 1, 9, 2) == img);
}

TEST_CASE("type B bijection round trips and fills the product set") {
  struct Case {
    int s, n, k, t;
  };
  for (const Case c :
       {Case{1, 3, 2, 2}, Case{1, 5, 2, 2}, Case{1, 5, 3, 3}, Case{2, 4, 3, 3},
        Case{1, 9, 4, 2}, Case{3, 3, 2, 2}}) {
    const int M = c.s * c.n + 1;
    REQUIRE(M % c.t == 0);
    REQUIRE(c.k % c.t == 0);
    const auto fixed = fixed_b(c.s, c.n, c.k, 2 * c.t);
    std::set<BijectionImage> images;
    for (const FaceB& x : fixed) {
      const BijectionImage img = bijection_b(x, c.s, c.n, c.t);
      CHECK(bijection_b_inverse(img, c.s, c.n, c.t) == x);
      images.insert(img);
    }
    CHECK(images.size() == fixed.size());
    const int b = M / c.t;
    const int m = (c.n - 1) / c.t;
    const int r = c.k / c.t;
    CHECK(Int(images.size()) == binomial(b + r - 1, r) * binomial(m, r));
  }
}
