#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csl/complex.hpp"
#include "csl/face_polys.hpp"
#include "csl/qpoly.hpp"

namespace csl {

struct DivisorCheck {
  int d = 1;
  Int lhs;                        // polynomial value at the primitive root
  std::optional<Int> lhs_closed;  // proposition closed form, when available
  Int rhs;                        // explicit fixed-point count
  bool pass = false;
  bool operator==(const DivisorCheck& o) const {
    return d == o.d && lhs == o.lhs && lhs_closed == o.lhs_closed &&
           rhs == o.rhs && pass == o.pass;
  }
};

struct OrbitCount {
  long long size = 0;
  long long count = 0;
  bool operator==(const OrbitCount& o) const {
    return size == o.size && count == o.count;
  }
};

struct CSPReport {
  std::string family;
  int s = 1;
  int n_or_a = 0;
  int k = 0;
  int group_order = 0;
  std::vector<DivisorCheck> checks;
  std::vector<Int> residues;        // X(q) mod q^N - 1
  std::vector<OrbitCount> orbits;   // descending by orbit size
  bool residues_match_orbits = false;
  bool pass = false;

  bool operator==(const CSPReport& o) const;

  std::string to_json() const;
  static CSPReport from_json(const std::string& text);
  std::string to_text() const;
  // Orbit structure in the "size(count), ..." notation.
  std::string orbit_text() const;
};

/// A sieving triple: an enumerated face set, the cyclic action provided by
/// the complex, and the candidate polynomial. X(1) = |X| is checked here.
struct CSPInstance {
  std::string family;
  int s = 1;
  int n_or_a = 0;
  int k = 0;
  const CyclicComplex* complex = nullptr;
  std::vector<Face> faces;
  QPolynomial xq;
  std::function<Int(int)> closed_form;  // optional second evaluation path

  CSPInstance(std::string family, int s, int n_or_a, int k,
              const CyclicComplex* cx, std::vector<Face> faces, QPolynomial xq,
              std::function<Int(int)> closed = nullptr);
};

CSPReport verify(const CSPInstance& inst);

// Verify the k-faces of a polygon-model complex against its face polynomial
// and the proposition closed forms.
CSPReport verify_polygon(const ComplexType& t, int k, int threads = 1);

// Theorem: the facets with X(q) = Cat^(s); classical families use the
// polygon models, exceptional types the root-system complex (s = 1 only).
CSPReport verify_facets_catalan(const std::string& type, int rank_or_param,
                                int s, int threads = 1);

}  // namespace csl
