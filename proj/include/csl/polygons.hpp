#pragma once

#include <set>
#include <string>
#include <vector>

#include "csl/complex.hpp"
#include "csl/face_polys.hpp"
#include "csl/peel.hpp"

namespace csl {

// ---------------------------------------------------------------------------
// Type A: s-divisible dissections of an (sn+2)-gon.
// ---------------------------------------------------------------------------

/// Dissection of an N-gon by pairwise noncrossing s-divisible diagonals.
struct DissectionA {
  int N = 0;
  std::vector<Chord> chords;  // sorted
  bool operator==(const DissectionA& o) const {
    return N == o.N && chords == o.chords;
  }
  bool operator<(const DissectionA& o) const { return chords < o.chords; }
};

class PolygonA {
 public:
  PolygonA(int s, int n);

  int s() const { return s_; }
  int n() const { return n_; }
  int N() const { return N_; }
  const CyclicComplex& complex() const { return cx_; }
  const std::vector<Chord>& vertex_chords() const { return verts_; }

  std::vector<Face> faces(int k, int threads = 1) const;
  DissectionA dissection(const Face& f) const;
  Face face_of(const DissectionA& x) const;
  std::string serialize(const Face& f) const;

 private:
  int s_, n_, N_;
  std::vector<Chord> verts_;
  CyclicComplex cx_;
};

std::vector<DissectionA> enumerate_a(int s, int n, int k);
DissectionA rotate_a(const DissectionA& x, int t);
// U(s,n,k,d): the dissections invariant under d-fold rotation, d | sn+2.
std::vector<DissectionA> fixed_a(int s, int n, int k, int d);

BijectionImage bijection_a(const DissectionA& x, int s, int n, int d);
DissectionA bijection_a_inverse(const BijectionImage& img, int s, int n, int d);

// Cells of a noncrossing dissection, each as the cyclic vertex list.
std::vector<std::vector<int>> dissection_cells(int N,
                                               const std::vector<Chord>& chords);

// ---------------------------------------------------------------------------
// Type B: centrally symmetric s-divisible dissections of a (2sn+2)-gon.
// ---------------------------------------------------------------------------

/// Either the diameter {i, i+M} (1 <= i <= M) or a centrally symmetric pair
/// of s-divisible diagonals, stored by its lexicographically least chord.
struct BDiagonal {
  bool diameter = false;
  Chord rep;
  bool operator==(const BDiagonal& o) const {
    return diameter == o.diameter && rep == o.rep;
  }
  bool operator<(const BDiagonal& o) const {
    if (diameter != o.diameter) return diameter < o.diameter;
    return rep < o.rep;
  }
};

struct FaceB {
  int N = 0;
  std::vector<BDiagonal> diagonals;  // sorted
  bool operator==(const FaceB& o) const {
    return N == o.N && diagonals == o.diagonals;
  }
  bool operator<(const FaceB& o) const { return diagonals < o.diagonals; }
};

class PolygonB {
 public:
  PolygonB(int s, int n);

  int s() const { return s_; }
  int n() const { return n_; }
  int N() const { return N_; }
  int M() const { return N_ / 2; }
  const CyclicComplex& complex() const { return cx_; }
  const std::vector<BDiagonal>& vertex_diagonals() const { return verts_; }

  std::vector<Face> faces(int k, int threads = 1) const;
  FaceB face_payload(const Face& f) const;
  Face face_of(const FaceB& x) const;
  std::string serialize(const Face& f) const;
  // All underlying chords of a face (both members of each pair).
  std::set<Chord> chord_set(const FaceB& x) const;

 private:
  int s_, n_, N_;
  std::vector<BDiagonal> verts_;
  CyclicComplex cx_;
};

std::vector<FaceB> enumerate_b(int s, int n, int k);
FaceB rotate_b(int s, int n, const FaceB& x, int t);
std::vector<FaceB> fixed_b(int s, int n, int k, int d);

BijectionImage bijection_b(const FaceB& x, int s, int n, int t);
FaceB bijection_b_inverse(const BijectionImage& img, int s, int n, int t);

// ---------------------------------------------------------------------------
// Type D: colored diameters and symmetric pairs of a (2s(n-1)+2)-gon.
// ---------------------------------------------------------------------------

enum class DColor : uint8_t { Red, Blue };

struct DDiagonal {
  enum class Kind : uint8_t { Diameter, SymPair };
  Kind kind = Kind::SymPair;
  int idx = 0;        // diameter initial point, 1..M
  DColor color = DColor::Red;
  Chord rep;          // sympair canonical chord
  bool operator==(const DDiagonal& o) const {
    return kind == o.kind && idx == o.idx && color == o.color && rep == o.rep;
  }
  bool operator<(const DDiagonal& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::Diameter) {
      if (idx != o.idx) return idx < o.idx;
      return color < o.color;
    }
    return rep < o.rep;
  }
};

struct FaceD {
  int N = 0;
  std::vector<DDiagonal> diagonals;  // sorted
  bool operator==(const FaceD& o) const {
    return N == o.N && diagonals == o.diagonals;
  }
  bool operator<(const FaceD& o) const { return diagonals < o.diagonals; }
};

class PolygonD {
 public:
  PolygonD(int s, int n);

  int s() const { return s_; }
  int n() const { return n_; }
  int N() const { return N_; }
  int M() const { return N_ / 2; }
  const CyclicComplex& complex() const { return cx_; }
  const std::vector<DDiagonal>& vertex_diagonals() const { return verts_; }

  std::vector<Face> faces(int k, int threads = 1) const;
  FaceD face_payload(const Face& f) const;
  Face face_of(const FaceD& x) const;
  std::string serialize(const Face& f) const;

  // One application of the deformed Coxeter rotation to a single diagonal.
  DDiagonal gamma_one(const DDiagonal& v) const;
  // Compatibility of two colored diameters with distinct endpoints, by
  // transporting the pair until either reaches the first diameter.
  bool diameters_compatible(int i, DColor ci, int j, DColor cj) const;

 private:
  int s_, n_, N_;
  std::vector<DDiagonal> verts_;
  CyclicComplex cx_;
};

std::vector<FaceD> enumerate_d(int s, int n, int k);
FaceD gamma_d(int s, int n, const FaceD& x, int t);
// W(s,n,k,d), d | 2s(n-1)+2.
std::vector<FaceD> fixed_d(int s, int n, int k, int d);
// 0 = no diameter, 1 = first diameter red, 2 = first diameter blue.
int t_class(const FaceD& x);

BijectionImage bijection_d_t1(const FaceD& x, int s, int n, int t);
FaceD bijection_d_t1_inverse(const BijectionImage& img, int s, int n, int t);
BijectionImage bijection_d_t0(const FaceD& x, int s, int n, int t);
FaceD bijection_d_t0_inverse(const BijectionImage& img, int s, int n, int t);

// ---------------------------------------------------------------------------
// Type I2(a): the (s+1)-regular facet graph on sa+2 vertices.
// ---------------------------------------------------------------------------

struct I2Graph {
  int s = 0;
  int a = 0;
  int nverts = 0;                        // sa + 2, labeled 0..nverts-1
  std::vector<std::pair<int, int>> edges;  // sorted pairs u < v
};

class I2Model {
 public:
  I2Model(int s, int a);

  const I2Graph& graph() const { return g_; }
  const CyclicComplex& complex() const { return cx_; }
  // Rotation step of the abstract generator (1 for a odd, 2 for a even).
  int rotation_step() const { return step_; }

  std::vector<Face> faces(int k, int threads = 1) const;
  std::string serialize(const Face& f) const;

 private:
  I2Graph g_;
  int step_;
  CyclicComplex cx_;
};

I2Graph build_i2(int s, int a);
// Y(s,a,d): edges fixed by the order-d element of the abstract group.
std::vector<std::pair<int, int>> fixed_i2_edges(int s, int a, int d);
std::vector<int> fixed_i2_vertices(int s, int a, int d);

// ---------------------------------------------------------------------------
// Noncrossing trees and the quadrangulation correspondence.
// ---------------------------------------------------------------------------

struct NCTree {
  int points = 0;                 // vertices 1..points on a circle
  std::vector<Chord> edges;       // sorted, noncrossing, spanning
  bool operator==(const NCTree& o) const {
    return points == o.points && edges == o.edges;
  }
  bool operator<(const NCTree& o) const { return edges < o.edges; }
};

std::vector<NCTree> enumerate_nc_trees(int points);
NCTree rotate_nc_tree(const NCTree& t, int steps);

// The tree on n+1 points maps to the unique quadrangulation of a (2n+2)-gon
// whose cells have the tree's doubled edges as their odd diagonals.
DissectionA nc_tree_to_quadrangulation(const NCTree& t);
NCTree quadrangulation_to_nc_tree(const DissectionA& q);

}  // namespace csl
