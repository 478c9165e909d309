#include <doctest.h>

#include <set>

#include "csl/polygons.hpp"

using namespace csl;

TEST_CASE("type A enumeration counts") {
  CHECK(enumerate_a(2, 3, 2).size() == 12);
  CHECK(enumerate_a(2, 3, 0).size() == 1);
  CHECK(enumerate_a(1, 4, 2).size() == 21);
  for (int s = 1; s <= 3; ++s)
    for (int n = 1; n <= 5; ++n) {
      ComplexType t(Family::A, n, s);
      for (int k = 0; k <= n - 1; ++k)
        CHECK(Int(enumerate_a(s, n, k).size()) == face_count(t, k));
    }
}

TEST_CASE("every cell of an enumerated dissection is an (sj+2)-gon") {
  for (int s = 1; s <= 3; ++s)
    for (int n = 2; n <= 4; ++n) {
      const int N = s * n + 2;
      for (int k = 0; k <= n - 1; ++k)
        for (const DissectionA& x : enumerate_a(s, n, k))
          for (const auto& cell : dissection_cells(N, x.chords))
            CHECK((cell.size() - 2) % s == 0);
    }
}

TEST_CASE("rotation is an action of the right order") {
  const auto faces = enumerate_a(2, 3, 2);
  const int N = 8;
  std::set<DissectionA> all(faces.begin(), faces.end());
  for (const DissectionA& x : faces) {
    CHECK(rotate_a(x, N) == x);
    CHECK(rotate_a(rotate_a(x, 3), N - 3) == x);
    CHECK(all.count(rotate_a(x, 1)) == 1);
  }
}

TEST_CASE("fixed dissections under d-fold rotation") {
  CHECK(fixed_a(2, 3, 2, 2).size() == 4);
  // d >= 3 with d not dividing k and no central polygon escape: empty.
  CHECK(fixed_a(1, 7, 2, 3).empty());
  for (const DissectionA& x : fixed_a(2, 3, 2, 2))
    CHECK(rotate_a(x, 4) == x);
}

TEST_CASE("the 24-gon example is fixed and maps to ((3,8),(0,1,1))") {
  DissectionA x;
  x.N = 24;
  x.chords = {Chord(3, 8),  Chord(11, 16), Chord(19, 24),
              Chord(8, 11), Chord(16, 19), Chord(3, 24)};
  std::sort(x.chords.begin(), x.chords.end());
  CHECK(rotate_a(x, 8) == x);
  const auto fixed = fixed_a(2, 11, 6, 3);
  CHECK(std::count(fixed.begin(), fixed.end(), x) == 1);
  const BijectionImage img = bijection_a(x, 2, 11, 3);
  CHECK(img.mu == std::vector<int>{3, 8});
  CHECK(img.nu == std::vector<int>{0, 1, 1});
  CHECK(bijection_a_inverse(img, 2, 11, 3) == x);
}

TEST_CASE("the empty dissection maps to the all-zero image") {
  DissectionA x;
  x.N = 8;
  const BijectionImage img = bijection_a(x, 2, 3, 2);
  CHECK(img.mu.empty());
  CHECK(img.nu == std::vector<int>{0});
  CHECK(bijection_a_inverse(img, 2, 3, 2) == x);
}

TEST_CASE("type A bijection round trips and fills the product set") {
  struct Case {
    int s, n, k, d;
  };
  for (const Case c : {Case{2, 5, 4, 2}, Case{1, 6, 2, 2}, Case{2, 4, 2, 2},
                       Case{1, 8, 4, 2}, Case{1, 7, 3, 3}, Case{2, 11, 6, 3}}) {
    const int N = c.s * c.n + 2;
    REQUIRE(N % c.d == 0);
    const auto fixed = fixed_a(c.s, c.n, c.k, c.d);
    std::set<BijectionImage> images;
    for (const DissectionA& x : fixed) {
      const BijectionImage img = bijection_a(x, c.s, c.n, c.d);
      CHECK(bijection_a_inverse(img, c.s, c.n, c.d) == x);
      images.insert(img);
    }
    CHECK(images.size() == fixed.size());
    // The image set is the full product of label multisets and 0/1 words.
    const int b = N / c.d;
    const int m = (c.n - 1) / c.d;
    const int r = c.k / c.d;
    Int expect = binomial(b + r - 1, r) * binomial(m, r);
    CHECK(Int(images.size()) == expect);
  }
}
