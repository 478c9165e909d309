#pragma once

#include <map>
#include <string>
#include <vector>

#include "csl/complex.hpp"
#include "csl/face_polys.hpp"
#include "csl/numbers.hpp"

namespace csl {

struct NoNegativeSimpleReached : std::runtime_error {
  explicit NoNegativeSimpleReached(const std::string& what)
      : std::runtime_error(what) {}
};

using RootVector = std::vector<QuadExt>;

/// Root system in simple-root coordinates with an exact Cartan pairing,
/// plus the bipartition of the diagram into two totally disconnected parts.
struct RootSystem {
  std::string type;
  int rank = 0;
  CoxeterDatum datum;
  std::vector<std::vector<QuadExt>> cartan;  // cartan[i][j] = <a_j, a_i^vee>
  std::vector<RootVector> positive;          // sorted
  std::vector<bool> in_plus;                 // bipartition flag per node

  RootVector reflect(int i, const RootVector& v) const;
  int positive_index(const RootVector& v) const;  // -1 if absent
};

RootSystem build_root_system(const std::string& type, int rank = 0,
                             bool swap_bipartition = false);

/// Phi_{>= -1} with the involutions and the deformed Coxeter permutation.
/// Elements are indices: 0..P-1 the positive roots, P..P+rank-1 the
/// negative simple roots.
struct AlmostPositiveRoots {
  explicit AlmostPositiveRoots(const RootSystem& rs);

  const RootSystem* rs;
  int P;  // number of positive roots
  std::vector<int> tau_plus, tau_minus, gamma;

  int size() const { return P + rs->rank; }
  bool is_negative_simple(int x) const { return x >= P; }
  // Does the simple-root expansion of x involve node i (0-based)?
  bool involves(int x, int i) const;
};

/// The generalized cluster complex of a root system: vertices are the s
/// colored copies of the positive roots together with the negative simple
/// roots; faces are the cliques of the compatibility relation.
class RootComplex {
 public:
  RootComplex(const std::string& type, int rank, int s,
              bool swap_bipartition = false);

  const RootSystem& root_system() const { return rs_; }
  const AlmostPositiveRoots& almost_positive() const { return ap_; }
  int s() const { return s_; }
  int nverts() const { return cx_.nverts(); }
  const CyclicComplex& complex() const { return cx_; }

  // Vertex index of a colored root; colors are 1..s, negative simples
  // always color 1.
  int vertex(int root_index, int color) const;
  std::pair<int, int> colored_root(int vertex) const;

  int gamma_s(int vertex) const { return cx_.generator()[vertex]; }
  bool compatible(int u, int v) const;

  std::vector<Face> faces(int k, int threads = 1) const;
  std::map<long long, long long> orbit_structure(int k, int threads = 1) const;

 private:
  RootSystem rs_;
  AlmostPositiveRoots ap_;
  int s_;
  CyclicComplex cx_;
};

}  // namespace csl
