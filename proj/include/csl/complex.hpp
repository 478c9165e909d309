#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace csl {

/// Fixed-capacity bitset sized at runtime (block count chosen per complex).
struct VertexSet {
  std::vector<uint64_t> w;

  explicit VertexSet(int blocks = 0) : w(blocks, 0) {}
  void set(int i) { w[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
  int count() const {
    int c = 0;
    for (uint64_t x : w) c += __builtin_popcountll(x);
    return c;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
    return *this;
  }
  bool operator==(const VertexSet& o) const { return w == o.w; }
  bool operator<(const VertexSet& o) const { return w < o.w; }
};

/// A face, stored as the sorted list of vertex indices.
using Face = std::vector<uint16_t>;

/// Compatibility graph of a complex together with a distinguished cyclic
/// symmetry: `gen` is the image of each vertex under the generator and
/// `group_order` the order of the abstract cyclic group. The faces of the
/// complex are exactly the cliques of the graph.
class CyclicComplex {
 public:
  CyclicComplex(int nverts, int group_order);

  int nverts() const { return nv_; }
  int group_order() const { return order_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  void set_generator(std::vector<int> gen);
  const std::vector<int>& generator() const { return gen_; }

  // Permutation of vertices under the generator applied `power` times
  // (interpreted mod group_order; the generator permutation itself may have
  // smaller order when the action is not faithful).
  std::vector<int> generator_power(int power) const;

  // All cliques of size exactly k, sorted lexicographically.
  std::vector<Face> cliques(int k, int threads = 1) const;
  // Cliques of every size 0..kmax in one backtracking pass.
  std::vector<std::vector<Face>> cliques_by_size(int kmax, int threads = 1) const;

  Face apply(const std::vector<int>& perm, const Face& f) const;

  // Faces fixed by the order-d element (d must divide group_order).
  std::vector<Face> fixed_faces(const std::vector<Face>& faces, int d) const;

  // Multiset of orbit sizes under the generator: map size -> multiplicity.
  std::map<long long, long long> orbit_structure(const std::vector<Face>& faces) const;

 private:
  void extend(Face& cur, const VertexSet& cand, int min_vertex, int k,
              std::vector<Face>& out) const;
  void extend_all(Face& cur, const VertexSet& cand, int min_vertex, int kmax,
                  std::vector<std::vector<Face>>& out) const;

  int nv_;
  int order_;
  int blocks_;
  std::vector<VertexSet> adj_;
  std::vector<int> gen_;
};

}  // namespace csl
