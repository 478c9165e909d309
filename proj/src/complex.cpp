#include "csl/complex.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

namespace csl {

CyclicComplex::CyclicComplex(int nverts, int group_order)
    : nv_(nverts),
      order_(group_order),
      blocks_((nverts + 63) / 64),
      adj_(nverts, VertexSet(blocks_)) {}

void CyclicComplex::add_edge(int u, int v) {
  if (u == v) throw std::logic_error("self-loop in compatibility graph");
  adj_[u].set(v);
  adj_[v].set(u);
}

void CyclicComplex::set_generator(std::vector<int> gen) {
  if (static_cast<int>(gen.size()) != nv_)
    throw std::logic_error("generator permutation has wrong size");
  gen_ = std::move(gen);
}

std::vector<int> CyclicComplex::generator_power(int power) const {
  power = ((power % order_) + order_) % order_;
  std::vector<int> p(nv_);
  for (int i = 0; i < nv_; ++i) p[i] = i;
  for (int t = 0; t < power; ++t)
    for (int i = 0; i < nv_; ++i) p[i] = gen_[p[i]];
  return p;
}

void CyclicComplex::extend(Face& cur, const VertexSet& cand, int min_vertex,
                           int k, std::vector<Face>& out) const {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = min_vertex; v < nv_; ++v) {
    if (!cand.test(v)) continue;
    // Not enough vertices left to finish the clique.
    if (nv_ - v < k - static_cast<int>(cur.size())) break;
    cur.push_back(static_cast<uint16_t>(v));
    VertexSet next = cand;
    next &= adj_[v];
    extend(cur, next, v + 1, k, out);
    cur.pop_back();
  }
}

void CyclicComplex::extend_all(Face& cur, const VertexSet& cand, int min_vertex,
                               int kmax, std::vector<std::vector<Face>>& out) const {
  out[cur.size()].push_back(cur);
  if (static_cast<int>(cur.size()) == kmax) return;
  for (int v = min_vertex; v < nv_; ++v) {
    if (!cand.test(v)) continue;
    cur.push_back(static_cast<uint16_t>(v));
    VertexSet next = cand;
    next &= adj_[v];
    extend_all(cur, next, v + 1, kmax, out);
    cur.pop_back();
  }
}

std::vector<Face> CyclicComplex::cliques(int k, int threads) const {
  auto all = cliques_by_size(k, threads);
  return std::move(all[k]);
}

std::vector<std::vector<Face>> CyclicComplex::cliques_by_size(int kmax,
                                                              int threads) const {
  std::vector<std::vector<Face>> out(kmax + 1);
  out[0].push_back({});
  if (kmax == 0) return out;
  threads = std::max(1, std::min(threads, nv_));
  if (threads == 1) {
    for (int v = 0; v < nv_; ++v) {
      Face cur{static_cast<uint16_t>(v)};
      extend_all(cur, adj_[v], v + 1, kmax, out);
    }
    return out;
  }
  // Top-level branches are independent; stitch per-thread results back in
  // vertex order so the output is identical to the sequential run.
  std::vector<std::vector<std::vector<Face>>> parts(
      nv_, std::vector<std::vector<Face>>(kmax + 1));
  std::vector<std::thread> pool;
  std::atomic_int next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        int v = next.fetch_add(1);
        if (v >= nv_) return;
        Face cur{static_cast<uint16_t>(v)};
        extend_all(cur, adj_[v], v + 1, kmax, parts[v]);
      }
    });
  for (auto& th : pool) th.join();
  for (int v = 0; v < nv_; ++v)
    for (int k = 1; k <= kmax; ++k)
      out[k].insert(out[k].end(), parts[v][k].begin(), parts[v][k].end());
  return out;
}

Face CyclicComplex::apply(const std::vector<int>& perm, const Face& f) const {
  Face g(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    g[i] = static_cast<uint16_t>(perm[f[i]]);
  std::sort(g.begin(), g.end());
  return g;
}

std::vector<Face> CyclicComplex::fixed_faces(const std::vector<Face>& faces,
                                             int d) const {
  if (order_ % d != 0)
    throw std::invalid_argument("d does not divide the group order");
  const std::vector<int> perm = generator_power(order_ / d);
  std::vector<Face> out;
  for (const Face& f : faces)
    if (apply(perm, f) == f) out.push_back(f);
  return out;
}

std::map<long long, long long> CyclicComplex::orbit_structure(
    const std::vector<Face>& faces) const {
  std::set<Face> pending(faces.begin(), faces.end());
  std::map<long long, long long> hist;
  while (!pending.empty()) {
    Face start = *pending.begin();
    pending.erase(pending.begin());
    long long size = 1;
    Face cur = apply(gen_, start);
    while (cur != start) {
      if (pending.erase(cur) == 0)
        throw std::logic_error("orbit leaves the face set");
      cur = apply(gen_, cur);
      ++size;
    }
    ++hist[size];
  }
  return hist;
}

}  // namespace csl
