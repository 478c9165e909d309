#include <doctest.h>

#include <map>
#include <set>

#include "csl/rootsys.hpp"
#include "csl/polygons.hpp"

using namespace csl;

namespace {

RootVector rv(std::vector<long long> v) {
  RootVector r;
  for (long long x : v) r.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("positive root counts") {
  CHECK(build_root_system("A", 2).positive.size() == 3);
  CHECK(build_root_system("A", 3).positive.size() == 6);
  CHECK(build_root_system("B", 3).positive.size() == 9);
  CHECK(build_root_system("D", 4).positive.size() == 12);
  CHECK(build_root_system("E6").positive.size() == 36);
  CHECK(build_root_system("E7").positive.size() == 63);
  CHECK(build_root_system("E8").positive.size() == 120);
  CHECK(build_root_system("F4").positive.size() == 24);
  CHECK(build_root_system("H3").positive.size() == 15);
  CHECK(build_root_system("H4").positive.size() == 60);
}

TEST_CASE("the A2 system matches the worked example") {
  const RootSystem rs = build_root_system("A", 2);
  CHECK(rs.positive_index(rv({1, 0})) >= 0);
  CHECK(rs.positive_index(rv({0, 1})) >= 0);
  CHECK(rs.positive_index(rv({1, 1})) >= 0);
  CHECK(rs.in_plus[0]);
  CHECK(!rs.in_plus[1]);

  const AlmostPositiveRoots ap(rs);
  const int a1 = rs.positive_index(rv({1, 0}));
  const int a2 = rs.positive_index(rv({0, 1}));
  const int a12 = rs.positive_index(rv({1, 1}));
  const int m1 = ap.P + 0, m2 = ap.P + 1;
  // alpha1 -> -alpha1 -> alpha1+alpha2 -> -alpha2 -> alpha2 -> alpha1
  CHECK(ap.gamma[a1] == m1);
  CHECK(ap.gamma[m1] == a12);
  CHECK(ap.gamma[a12] == m2);
  CHECK(ap.gamma[m2] == a2);
  CHECK(ap.gamma[a2] == a1);
}

TEST_CASE("the involutions square to the identity") {
  for (const char* type : {"A", "B", "D"}) {
    const int rank = std::string(type) == "A" ? 3 : 4;
    const RootSystem rs = build_root_system(type, rank);
    const AlmostPositiveRoots ap(rs);
    for (int x = 0; x < ap.size(); ++x) {
      CHECK(ap.tau_plus[ap.tau_plus[x]] == x);
      CHECK(ap.tau_minus[ap.tau_minus[x]] == x);
    }
  }
  const RootSystem rs = build_root_system("H3");
  const AlmostPositiveRoots ap(rs);
  for (int x = 0; x < ap.size(); ++x) {
    CHECK(ap.tau_plus[ap.tau_plus[x]] == x);
    CHECK(ap.tau_minus[ap.tau_minus[x]] == x);
  }
}

namespace {

int perm_order(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<int> cur(n);
  for (int i = 0; i < n; ++i) cur[i] = i;
  for (int order = 1;; ++order) {
    for (int i = 0; i < n; ++i) cur[i] = perm[cur[i]];
    bool id = true;
    for (int i = 0; i < n; ++i)
      if (cur[i] != i) id = false;
    if (id) return order;
  }
}

}  // namespace

TEST_CASE("the deformed Coxeter permutation realizes the order sh+2 group") {
  // The abstract group has order sh+2. On the roots themselves the
  // permutation may identify the half turn with the identity; that happens
  // exactly when the half-turn element fixes every vertex, so the action
  // of every group element on faces is still well defined.
  struct Case {
    const char* type;
    int rank;
    int s;
  };
  for (const Case c : {Case{"A", 2, 1}, Case{"A", 2, 3}, Case{"A", 3, 2},
                       Case{"B", 2, 2}, Case{"B", 3, 1}, Case{"D", 4, 1},
                       Case{"F4", 4, 1}, Case{"H3", 3, 1}, Case{"E6", 6, 1}}) {
    RootComplex rc(c.type, c.rank, c.s);
    const int h = rc.root_system().datum.h;
    const int N = c.s * h + 2;
    const int order = perm_order(rc.complex().generator());
    if (order == N) continue;
    REQUIRE(order * 2 == N);
    const std::vector<int> half = rc.complex().generator_power(N / 2);
    for (int v = 0; v < rc.nverts(); ++v) CHECK(half[v] == v);
  }
}

TEST_CASE("every orbit meets the negative simple roots") {
  for (const char* type : {"A", "B", "D"}) {
    const int rank = std::string(type) == "A" ? 3 : 4;
    for (int s = 1; s <= 2; ++s) {
      RootComplex rc(type, rank, s);
      const int order = rc.complex().group_order();
      for (int v = 0; v < rc.nverts(); ++v) {
        int cur = v;
        bool hit = false;
        for (int i = 0; i < order && !hit; ++i) {
          if (rc.almost_positive().is_negative_simple(
                  rc.colored_root(cur).first))
            hit = true;
          cur = rc.gamma_s(cur);
        }
        CHECK(hit);
      }
    }
  }
}

TEST_CASE("compatibility is symmetric and rotation invariant") {
  for (int s = 1; s <= 2; ++s) {
    RootComplex rc("A", 3, s);
    for (int u = 0; u < rc.nverts(); ++u)
      for (int v = 0; v < rc.nverts(); ++v) {
        if (u == v) continue;
        CHECK(rc.compatible(u, v) == rc.compatible(v, u));
        CHECK(rc.compatible(u, v) ==
              rc.compatible(rc.gamma_s(u), rc.gamma_s(v)));
      }
  }
}

TEST_CASE("negative simple rule holds at the base") {
  RootComplex rc("B", 3, 2);
  const auto& ap = rc.almost_positive();
  for (int i = 0; i < 3; ++i) {
    const int neg = rc.vertex(ap.P + i, 1);
    for (int v = 0; v < rc.nverts(); ++v) {
      if (v == neg) continue;
      const int root = rc.colored_root(v).first;
      CHECK(rc.compatible(neg, v) == !ap.involves(root, i));
    }
  }
}

TEST_CASE("face counts of small cluster complexes") {
  RootComplex a2("A", 2, 1);
  CHECK(a2.faces(1).size() == 5);
  CHECK(a2.faces(2).size() == 5);
  RootComplex e6("E6", 6, 1);
  CHECK(e6.faces(1).size() == 42);
  // Facets agree with the Catalan number.
  RootComplex b2("B", 2, 2);
  CHECK(Int(b2.faces(2).size()) ==
        q_catalan(coxeter_datum("B", 2), 2).value_at_one());
}

TEST_CASE("classical cross validation against the polygon models") {
  struct Case {
    const char* type;
    int rank;
    int s;
  };
  for (const Case c : {Case{"A", 2, 1}, Case{"A", 2, 2}, Case{"B", 2, 1},
                       Case{"B", 2, 2}, Case{"D", 4, 1}}) {
    RootComplex rc(c.type, c.rank, c.s);
    for (int k = 0; k <= c.rank; ++k) {
      std::vector<Face> faces = rc.faces(k);
      auto hist = rc.complex().orbit_structure(faces);
      std::map<long long, long long> phist;
      size_t count = 0;
      if (std::string(c.type) == "A") {
        PolygonA m(c.s, c.rank + 1);
        auto pf = m.faces(k);
        count = pf.size();
        phist = m.complex().orbit_structure(pf);
      } else if (std::string(c.type) == "B") {
        PolygonB m(c.s, c.rank);
        auto pf = m.faces(k);
        count = pf.size();
        phist = m.complex().orbit_structure(pf);
      } else {
        PolygonD m(c.s, c.rank);
        auto pf = m.faces(k);
        count = pf.size();
        phist = m.complex().orbit_structure(pf);
      }
      CHECK(faces.size() == count);
      CHECK(hist == phist);
    }
  }
}

TEST_CASE("orbit structures are stable under the swapped bipartition") {
  for (const char* type : {"F4", "H3"}) {
    RootComplex a(type, 0, 1, false);
    RootComplex b(type, 0, 1, true);
    const int rank = a.root_system().rank;
    for (int k = 1; k <= rank; ++k)
      CHECK(a.orbit_structure(k) == b.orbit_structure(k));
  }
}
