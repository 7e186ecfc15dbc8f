#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/pk_oracle.hpp"

namespace kpvc {

struct SolverCaps {
  int psi = 24;      // k >= 3
  int psi_k2 = 20;   // vertex cover branching is denser
  int forest = 20;
};

/// A k-path vertex cover with evidence. `optimal` means the search proved no
/// smaller cover exists.
struct CoverCertificate {
  int k = 0;
  VertexSet cover;
  bool optimal = false;
  int residual_longest_path = 0;

  int size() const { return static_cast<int>(cover.size()); }
};

namespace detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }

/// Adjacency bitmasks for graphs with at most 64 vertices.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit BitGraph(const Graph& g) : n(g.order()), adj(static_cast<std::size_t>(g.order()), 0) {
    require(n <= 64, "bitmask solver supports at most 64 vertices");
    for (auto [u, v] : g.edges()) {
      adj[u] |= bit(v);
      adj[v] |= bit(u);
    }
  }

  int degree_in(int v, Mask alive) const { return std::popcount(adj[v] & alive); }
};

inline bool extend_bits(const BitGraph& g, int k, Mask free, std::vector<int>& path) {
  if (static_cast<int>(path.size()) == k) return true;
  Mask next = g.adj[path.back()] & free;
  while (next) {
    int v = std::countr_zero(next);
    next &= next - 1;
    path.push_back(v);
    if (extend_bits(g, k, free & ~bit(v), path)) return true;
    path.pop_back();
  }
  return false;
}

// Same search order as find_path_avoiding: starts and neighbors ascending.
inline bool find_path_bits(const BitGraph& g, int k, Mask alive, std::vector<int>& path) {
  if (std::popcount(alive) < k) return false;
  if (k == 2) {
    for (Mask rest = alive; rest; rest &= rest - 1) {
      int s = std::countr_zero(rest);
      if (Mask nb = g.adj[s] & alive) {
        path = {s, std::countr_zero(nb)};
        return true;
      }
    }
    return false;
  }
  for (Mask rest = alive; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    if (!(g.adj[s] & alive)) continue;
    path.assign(1, s);
    if (extend_bits(g, k, alive & ~bit(s), path)) return true;
  }
  return false;
}

inline Mask path_mask(const std::vector<int>& path) {
  Mask m = 0;
  for (int v : path) m |= bit(v);
  return m;
}

// Number of vertex-disjoint P_k found greedily; each needs its own cover vertex.
inline int path_packing_bound(const BitGraph& g, int k, Mask alive, std::vector<int>& scratch) {
  int count = 0;
  while (find_path_bits(g, k, alive, scratch)) {
    ++count;
    alive &= ~path_mask(scratch);
  }
  return count;
}

// A P_k-free graph on r vertices has at most r(k-2)/2 edges, and deleting t
// vertices removes at most the t largest degrees' worth of edges.
inline int edge_density_bound(const BitGraph& g, int k, Mask alive) {
  std::vector<int> deg;
  long long twice_m = 0;
  for (Mask rest = alive; rest; rest &= rest - 1) {
    int d = g.degree_in(std::countr_zero(rest), alive);
    deg.push_back(d);
    twice_m += d;
  }
  std::sort(deg.rbegin(), deg.rend());
  const long long r = static_cast<long long>(deg.size());
  long long removed = 0;
  for (long long t = 0; t <= r; ++t) {
    if (t > 0) removed += deg[static_cast<std::size_t>(t - 1)];
    // remaining edges >= m - removed; need that <= (r - t)(k - 2)/2
    if (twice_m - 2 * removed <= (r - t) * (k - 2)) return static_cast<int>(t);
  }
  return static_cast<int>(r);
}

class PsiSearch {
 public:
  PsiSearch(const BitGraph& g, int k) : g_(g), k_(k) {}

  // Minimum cover of the vertices in `alive`, as a mask.
  Mask solve(Mask alive) {
    best_ = greedy(alive);
    best_size_ = std::popcount(best_);
    chosen_ = 0;
    branch(alive, 0);
    return best_;
  }

 private:
  // Repeatedly delete the max-degree vertex of the first witness (ties: lowest index).
  Mask greedy(Mask alive) {
    Mask cover = 0;
    std::vector<int> path;
    while (find_path_bits(g_, k_, alive, path)) {
      int pick = path.front();
      for (int v : path)
        if (g_.degree_in(v, alive) > g_.degree_in(pick, alive) ||
            (g_.degree_in(v, alive) == g_.degree_in(pick, alive) && v < pick))
          pick = v;
      cover |= bit(pick);
      alive &= ~bit(pick);
    }
    return cover;
  }

  void branch(Mask alive, int depth) {
    std::vector<int> path;
    if (!find_path_bits(g_, k_, alive, path)) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen_;
      }
      return;
    }
    if (depth + 1 >= best_size_) return;
    std::vector<int> scratch;
    int lb = path_packing_bound(g_, k_, alive, scratch);
    if (depth + lb >= best_size_) return;
    if (depth + edge_density_bound(g_, k_, alive) >= best_size_) return;
    std::sort(path.begin(), path.end());
    for (int v : path) {
      chosen_ |= bit(v);
      branch(alive & ~bit(v), depth + 1);
      chosen_ &= ~bit(v);
      if (depth + lb >= best_size_) return;
    }
  }

  const BitGraph& g_;
  int k_;
  Mask best_ = 0;
  int best_size_ = 0;
  Mask chosen_ = 0;
};

inline VertexSet mask_to_set(Mask m) {
  VertexSet out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

}  // namespace detail

/// Minimum k-path vertex cover by branching on the vertices of a P_k witness,
/// with a greedy incumbent and path-packing / edge-density lower bounds.
/// Solved per connected component.
inline CoverCertificate psi_exact(const Graph& g, int k, const SolverCaps& caps = {}) {
  require(k >= 2, "psi_exact: k must be at least 2");
  const int cap = k == 2 ? caps.psi_k2 : caps.psi;
  if (g.order() > cap || g.order() > 64)
    throw cap_exceeded("psi_exact: n=" + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap) +
                       " for k=" + std::to_string(k));
  detail::BitGraph bg(g);
  VertexSet cover;
  for (const auto& comp : connected_components(g)) {
    if (static_cast<int>(comp.size()) < k) continue;
    detail::Mask alive = 0;
    for (Vertex v : comp) alive |= detail::bit(v);
    detail::PsiSearch search(bg, k);
    auto part = detail::mask_to_set(search.solve(alive));
    cover.insert(cover.end(), part.begin(), part.end());
  }
  cover = normalize(std::move(cover));
  CoverCertificate cert{k, cover, true, residual_longest_path(g, cover)};
  ensure(cert.residual_longest_path < k, "psi_exact produced an invalid cover");
  return cert;
}

/// Optimal k-path vertex cover of a forest in linear time.
///
/// Post-order over each tree (rooted at its lowest vertex). h(v) is the number
/// of vertices on the tallest uncovered downward chain starting at v. With
/// h1 >= h2 the two tallest child chains (0 if absent), v is selected and h(v)
/// reset to 0 when h1 + h2 + 1 >= k; otherwise h(v) = h1 + 1.
inline CoverCertificate psi_tree_exact(const Graph& forest, int k) {
  require(k >= 2, "psi_tree_exact: k must be at least 2");
  require(is_forest(forest), "psi_tree_exact: input contains a cycle");
  const int n = forest.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1), order;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  order.reserve(static_cast<std::size_t>(n));
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      order.push_back(u);
      for (Vertex v : forest.neighbors(u))
        if (!seen[v]) {
          seen[v] = 1;
          parent[v] = u;
          stack.push_back(v);
        }
    }
  }
  std::vector<int> h(static_cast<std::size_t>(n), 0), top1(static_cast<std::size_t>(n), 0),
      top2(static_cast<std::size_t>(n), 0);
  VertexSet cover;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    if (top1[v] + top2[v] + 1 >= k) {
      cover.push_back(v);
      h[v] = 0;
    } else {
      h[v] = top1[v] + 1;
    }
    if (int p = parent[v]; p >= 0) {
      if (h[v] > top1[p]) {
        top2[p] = top1[p];
        top1[p] = h[v];
      } else if (h[v] > top2[p]) {
        top2[p] = h[v];
      }
    }
  }
  cover = normalize(std::move(cover));
  return CoverCertificate{k, cover, true, residual_longest_path(forest, cover)};
}

inline int alpha_exact(const Graph& g, const SolverCaps& caps = {}) { return g.order() - psi_exact(g, 2, caps).size(); }

inline int diss_exact(const Graph& g, const SolverCaps& caps = {}) { return g.order() - psi_exact(g, 3, caps).size(); }

struct ForestNumber {
  int value = 0;
  VertexSet forest;  // witness: induces a forest, |forest| == value
};

namespace detail {

// Vertices of a shortest cycle in G[alive], empty if acyclic.
inline std::vector<int> shortest_cycle(const BitGraph& g, Mask alive) {
  std::vector<int> best;
  std::vector<int> dist(static_cast<std::size_t>(g.n)), par(static_cast<std::size_t>(g.n));
  for (Mask rest = alive; rest; rest &= rest - 1) {
    int s = std::countr_zero(rest);
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    par[s] = -1;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      if (!best.empty() && 2 * dist[u] + 1 >= static_cast<int>(best.size())) break;
      for (Mask nb = g.adj[u] & alive; nb; nb &= nb - 1) {
        int v = std::countr_zero(nb);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          queue.push_back(v);
        } else if (par[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best.empty() || len < static_cast<int>(best.size())) {
            std::vector<int> a, b;
            for (int x = u; x >= 0; x = par[x]) a.push_back(x);
            for (int x = v; x >= 0; x = par[x]) b.push_back(x);
            // Paths to s share only s when the cycle is shortest through this BFS tree.
            std::vector<int> cyc;
            Mask in_a = 0;
            for (int x : a) in_a |= bit(x);
            int meet = -1;
            for (int x : b)
              if (in_a & bit(x)) {
                meet = x;
                break;
              }
            for (int x : a) {
              cyc.push_back(x);
              if (x == meet) break;
            }
            for (int x : b) {
              if (x == meet) break;
              cyc.push_back(x);
            }
            best = std::move(cyc);
          }
        }
      }
    }
  }
  return best;
}

inline Mask prune_low_degree(const BitGraph& g, Mask alive) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      int v = std::countr_zero(rest);
      if (g.degree_in(v, alive) <= 1) {
        alive &= ~bit(v);
        changed = true;
      }
    }
  }
  return alive;
}

class FeedbackSearch {
 public:
  explicit FeedbackSearch(const BitGraph& g) : g_(g) {}

  Mask solve(Mask alive) {
    best_ = 0;
    best_size_ = 0;
    // Incumbent: repeatedly delete a max-degree vertex of the 2-core.
    Mask core = prune_low_degree(g_, alive);
    while (core) {
      int pick = -1, pd = -1;
      for (Mask rest = core; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        if (g_.degree_in(v, core) > pd) {
          pd = g_.degree_in(v, core);
          pick = v;
        }
      }
      best_ |= bit(pick);
      core = prune_low_degree(g_, core & ~bit(pick));
    }
    best_size_ = std::popcount(best_);
    chosen_ = 0;
    branch(alive, 0);
    return best_;
  }

 private:
  int cycle_packing(Mask alive) const {
    int count = 0;
    for (;;) {
      alive = prune_low_degree(g_, alive);
      auto cyc = shortest_cycle(g_, alive);
      if (cyc.empty()) return count;
      ++count;
      for (int v : cyc) alive &= ~bit(v);
    }
  }

  void branch(Mask alive, int depth) {
    alive = prune_low_degree(g_, alive);
    if (!alive) {
      if (depth < best_size_) {
        best_size_ = depth;
        best_ = chosen_;
      }
      return;
    }
    if (depth + std::max(1, cycle_packing(alive)) >= best_size_) return;
    auto cyc = shortest_cycle(g_, alive);
    std::sort(cyc.begin(), cyc.end());
    for (int v : cyc) {
      chosen_ |= bit(v);
      branch(alive & ~bit(v), depth + 1);
      chosen_ &= ~bit(v);
    }
  }

  const BitGraph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
  Mask chosen_ = 0;
};

}  // namespace detail

/// Largest induced forest: complement of a minimum feedback vertex set, found by
/// branching on the vertices of a shortest cycle of the 2-core.
inline ForestNumber forest_number_exact(const Graph& g, const SolverCaps& caps = {}) {
  if (g.order() > caps.forest || g.order() > 64)
    throw cap_exceeded("forest_number_exact: n=" + std::to_string(g.order()) + " exceeds cap " +
                       std::to_string(caps.forest));
  detail::BitGraph bg(g);
  VertexSet fvs;
  for (const auto& comp : connected_components(g)) {
    detail::Mask alive = 0;
    for (Vertex v : comp) alive |= detail::bit(v);
    detail::FeedbackSearch search(bg);
    auto part = detail::mask_to_set(search.solve(alive));
    fvs.insert(fvs.end(), part.begin(), part.end());
  }
  ForestNumber out;
  out.forest = complement(g, normalize(std::move(fvs)));
  out.value = static_cast<int>(out.forest.size());
  ensure(induces_forest(g, out.forest), "forest_number_exact produced a non-forest witness");
  return out;
}

}  // namespace kpvc
