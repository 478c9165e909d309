#include "csl/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace csl {

namespace {

// Edges of the Coxeter diagram with their bond labels m(i,j) (0-based
// nodes). Only simply-laced bonds, the B/F double bond and the H 5-bond
// occur here.
struct Diagram {
  int rank;
  std::vector<std::tuple<int, int, int>> edges;  // (i, j, m)
};

Diagram diagram_of(const std::string& type, int rank) {
  Diagram d;
  d.rank = rank;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.push_back({i, i + 1, 3});
  };
  if (type == "A") {
    chain(rank);
  } else if (type == "B") {
    chain(rank - 1);
    if (rank >= 2) d.edges.push_back({rank - 2, rank - 1, 4});
  } else if (type == "D") {
    if (rank < 3)
      throw std::invalid_argument("type D root systems need rank >= 3");
    chain(rank - 1);
    d.edges.push_back({rank - 3, rank - 1, 3});
  } else if (type == "E6" || type == "E7" || type == "E8") {
    // Nodes 1-3-4-5-... in a chain, node 2 hanging off node 4.
    d.edges.push_back({0, 2, 3});
    d.edges.push_back({2, 3, 3});
    d.edges.push_back({1, 3, 3});
    for (int i = 3; i + 1 < rank; ++i) d.edges.push_back({i, i + 1, 3});
  } else if (type == "F4") {
    d.edges.push_back({0, 1, 3});
    d.edges.push_back({1, 2, 4});
    d.edges.push_back({2, 3, 3});
  } else if (type == "H3" || type == "H4") {
    d.edges.push_back({0, 1, 5});
    for (int i = 1; i + 1 < rank; ++i) d.edges.push_back({i, i + 1, 3});
  } else {
    throw std::invalid_argument("unsupported root system type: " + type);
  }
  return d;
}

// Cartan pairings for one bond. For the crystallographic double bond the
// pair is (-1, -2); the H bond is symmetric with -2cos(pi/5).
std::pair<QuadExt, QuadExt> bond_pair(const std::string& type, int m, int i,
                                      int j) {
  if (m == 3) return {QuadExt(-1), QuadExt(-1)};
  if (m == 4) {
    // <a_j, a_i^vee> = -1 toward the long root, -2 toward the short one.
    // In Bourbaki numbering the later node is short for both B and F.
    (void)i;
    (void)j;
    return {QuadExt(-1), QuadExt(-2)};
  }
  if (m == 5) {
    const QuadExt g = -QuadExt::golden();
    return {g, g};
  }
  throw std::logic_error("unsupported bond label");
}

}  // namespace

RootVector RootSystem::reflect(int i, const RootVector& v) const {
  QuadExt pairing;
  for (int j = 0; j < rank; ++j) {
    if (v[j].is_zero()) continue;
    pairing += cartan[i][j] * v[j];
  }
  RootVector w = v;
  w[i] -= pairing;
  return w;
}

int RootSystem::positive_index(const RootVector& v) const {
  auto it = std::lower_bound(positive.begin(), positive.end(), v);
  if (it != positive.end() && *it == v)
    return static_cast<int>(it - positive.begin());
  return -1;
}

RootSystem build_root_system(const std::string& type, int rank,
                             bool swap_bipartition) {
  RootSystem rs;
  rs.type = type;
  if (type == "A" || type == "B" || type == "D") {
    if ((type == "A" && rank < 1) || (type != "A" && rank < 2))
      throw std::invalid_argument("rank too small for type " + type);
    rs.rank = rank;
  } else {
    rs.rank = coxeter_datum(type).rank;
  }
  rs.datum = coxeter_datum(type, rs.rank);
  const Diagram dia = diagram_of(type, rs.rank);

  rs.cartan.assign(rs.rank, std::vector<QuadExt>(rs.rank, QuadExt(0)));
  for (int i = 0; i < rs.rank; ++i) rs.cartan[i][i] = QuadExt(2);
  for (auto [i, j, m] : dia.edges) {
    auto [cij, cji] = bond_pair(type, m, i, j);
    // cartan[i][j] = <a_j, a_i^vee>
    rs.cartan[i][j] = cij;
    rs.cartan[j][i] = cji;
  }

  // Two-color the diagram breadth-first from node 0.
  std::vector<std::vector<int>> adj(rs.rank);
  for (auto [i, j, m] : dia.edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> color(rs.rank, -1);
  for (int start = 0; start < rs.rank; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          throw std::logic_error("Coxeter diagram is not bipartite");
        }
      }
    }
  }
  rs.in_plus.resize(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    rs.in_plus[i] = (color[i] == 0) != swap_bipartition;

  // Close the simple roots under the reflections and keep the positives.
  std::set<RootVector> all;
  std::deque<RootVector> work;
  for (int i = 0; i < rs.rank; ++i) {
    RootVector e(rs.rank, QuadExt(0));
    e[i] = QuadExt(1);
    all.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    RootVector v = work.front();
    work.pop_front();
    for (int i = 0; i < rs.rank; ++i) {
      RootVector w = rs.reflect(i, v);
      if (all.insert(w).second) work.push_back(w);
    }
  }
  for (const RootVector& v : all) {
    int sign = 0;
    for (const QuadExt& c : v) {
      const int cs = c.sign();
      if (cs == 0) continue;
      if (sign == 0) sign = cs;
      else if (sign != cs)
        throw std::logic_error("root with mixed coordinate signs");
    }
    if (sign > 0) rs.positive.push_back(v);
  }
  std::sort(rs.positive.begin(), rs.positive.end());
  const size_t expected =
      static_cast<size_t>(rs.rank) * rs.datum.h / 2;
  if (rs.positive.size() != expected)
    throw std::logic_error("positive root count mismatch for " + type);
  return rs;
}

AlmostPositiveRoots::AlmostPositiveRoots(const RootSystem& system)
    : rs(&system), P(static_cast<int>(system.positive.size())) {
  const int n = rs->rank;
  auto vector_of = [&](int x) -> RootVector {
    if (x < P) return rs->positive[x];
    RootVector v(n, QuadExt(0));
    v[x - P] = QuadExt(-1);
    return v;
  };
  auto index_of = [&](const RootVector& v) -> int {
    int pi = rs->positive_index(v);
    if (pi >= 0) return pi;
    // Must be a negative simple root.
    int found = -1;
    for (int i = 0; i < n; ++i) {
      RootVector e(n, QuadExt(0));
      e[i] = QuadExt(-1);
      if (v == e) found = P + i;
    }
    if (found == -1)
      throw std::logic_error("involution left the almost positive roots");
    return found;
  };
  auto make_tau = [&](bool plus) {
    std::vector<int> tau(size());
    for (int x = 0; x < size(); ++x) {
      if (x >= P) {
        const int i = x - P;
        const bool fixed = plus ? !rs->in_plus[i] : rs->in_plus[i];
        if (fixed) {
          tau[x] = x;
          continue;
        }
      }
      RootVector v = vector_of(x);
      for (int i = 0; i < n; ++i)
        if (rs->in_plus[i] == plus) v = rs->reflect(i, v);
      tau[x] = index_of(v);
    }
    return tau;
  };
  tau_plus = make_tau(true);
  tau_minus = make_tau(false);
  gamma.resize(size());
  for (int x = 0; x < size(); ++x) gamma[x] = tau_minus[tau_plus[x]];
}

bool AlmostPositiveRoots::involves(int x, int i) const {
  if (x >= P) return (x - P) == i;
  return !rs->positive[x][i].is_zero();
}

RootComplex::RootComplex(const std::string& type, int rank, int s,
                         bool swap_bipartition)
    : rs_(build_root_system(type, rank, swap_bipartition)),
      ap_(rs_),
      s_(s),
      cx_(0, 0) {
  if (s < 1) throw std::invalid_argument("s must be >= 1");
  const int P = ap_.P;
  const int n = rs_.rank;
  const int nverts = s * P + n;
  const int order = s * rs_.datum.h + 2;
  cx_ = CyclicComplex(nverts, order);

  std::vector<int> gen(nverts);
  for (int v = 0; v < nverts; ++v) {
    auto [r, c] = colored_root(v);
    if (r < P && c < s_) {
      gen[v] = vertex(r, c + 1);
    } else {
      gen[v] = vertex(ap_.gamma[r], 1);
    }
  }
  cx_.set_generator(std::move(gen));

  // Transport every pair to a negative simple root and apply the support
  // rule there.
  const auto& g = cx_.generator();
  for (int u = 0; u < nverts; ++u)
    for (int v = u + 1; v < nverts; ++v) {
      int x = u, y = v;
      int guard = order;
      while (true) {
        const int rx = colored_root(x).first;
        const int ry = colored_root(y).first;
        if (ap_.is_negative_simple(rx)) {
          if (!ap_.involves(ry, rx - P)) cx_.add_edge(u, v);
          break;
        }
        if (ap_.is_negative_simple(ry)) {
          if (!ap_.involves(rx, ry - P)) cx_.add_edge(u, v);
          break;
        }
        x = g[x];
        y = g[y];
        if (--guard < 0)
          throw NoNegativeSimpleReached(
              "no negative simple root reached within the group order");
      }
    }
}

int RootComplex::vertex(int root_index, int color) const {
  if (ap_.is_negative_simple(root_index)) {
    if (color != 1)
      throw std::invalid_argument("negative simple roots carry color 1");
    return s_ * ap_.P + (root_index - ap_.P);
  }
  if (color < 1 || color > s_) throw std::invalid_argument("bad color");
  return (color - 1) * ap_.P + root_index;
}

std::pair<int, int> RootComplex::colored_root(int v) const {
  if (v >= s_ * ap_.P) return {ap_.P + (v - s_ * ap_.P), 1};
  return {v % ap_.P, v / ap_.P + 1};
}

bool RootComplex::compatible(int u, int v) const { return cx_.adjacent(u, v); }

std::vector<Face> RootComplex::faces(int k, int threads) const {
  if (k < 0 || k > rs_.rank)
    throw std::out_of_range("k out of range for the cluster complex");
  return cx_.cliques(k, threads);
}

std::map<long long, long long> RootComplex::orbit_structure(int k,
                                                            int threads) const {
  return cx_.orbit_structure(faces(k, threads));
}

}  // namespace csl
