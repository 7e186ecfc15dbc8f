#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"

namespace kpvc {

// Vertex sequence of a path subgraph: consecutive entries adjacent, all distinct.
using PathWitness = std::vector<Vertex>;

inline bool is_path_in(const Graph& g, const PathWitness& p) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.order() || seen[p[i]]) return false;
    seen[p[i]] = 1;
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return false;
  }
  return true;
}

namespace detail {

// Depth-first extension of `path` inside the non-blocked vertices, neighbors in
// ascending order. Returns true once the path holds k vertices.
inline bool extend_path(const Graph& g, int k, std::vector<char>& blocked, PathWitness& path) {
  if (static_cast<int>(path.size()) == k) return true;
  for (Vertex v : g.neighbors(path.back())) {
    if (blocked[v]) continue;
    blocked[v] = 1;
    path.push_back(v);
    if (extend_path(g, k, blocked, path)) return true;
    path.pop_back();
    blocked[v] = 0;
  }
  return false;
}

}  // namespace detail

/// First P_k (in start-vertex, then neighbor, ascending order) in G minus `removed`.
inline std::optional<PathWitness> find_path_avoiding(const Graph& g, int k, const VertexSet& removed) {
  require(k >= 2, "path order k must be at least 2");
  std::vector<char> blocked(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) {
    require(v >= 0 && v < g.order(), "vertex " + std::to_string(v) + " out of range");
    blocked[v] = 1;
  }
  if (k > g.order()) return std::nullopt;
  PathWitness path;
  path.reserve(static_cast<std::size_t>(k));
  for (Vertex s = 0; s < g.order(); ++s) {
    if (blocked[s]) continue;
    blocked[s] = 1;
    path.assign(1, s);
    if (detail::extend_path(g, k, blocked, path)) return path;
    blocked[s] = 0;
  }
  return std::nullopt;
}

inline std::optional<PathWitness> find_path_of_order(const Graph& g, int k) { return find_path_avoiding(g, k, {}); }

struct CoverCheck {
  bool valid = false;
  std::optional<PathWitness> counterexample;  // a surviving P_k when !valid

  explicit operator bool() const { return valid; }
};

inline CoverCheck check_cover(const Graph& g, int k, const VertexSet& cover) {
  auto witness = find_path_avoiding(g, k, cover);
  return CoverCheck{!witness.has_value(), witness};
}

inline bool is_cover(const Graph& g, int k, const VertexSet& cover) { return check_cover(g, k, cover).valid; }

inline constexpr int kDefaultLongestPathCap = 20;

namespace detail {

// Subset DP. reach[mask] has bit v set iff some path visits exactly the vertices
// of `mask` (bit i = vertex i) and ends at v. Paths are grown one vertex at a
// time, so masks are processed in increasing numeric order.
inline int longest_path_subset_dp(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v)) nbr[v] |= 1U << u;
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (Vertex v = 0; v < n; ++v) reach[std::size_t{1} << v] = 1U << v;
  int best = 1;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    best = std::max(best, std::popcount(mask));
    while (ends) {
      int v = std::countr_zero(ends);
      ends &= ends - 1;
      std::uint32_t next = nbr[v] & ~mask;
      while (next) {
        int u = std::countr_zero(next);
        next &= next - 1;
        reach[mask | (1U << u)] |= 1U << u;
      }
    }
  }
  return best;
}

inline void longest_from(const Graph& g, Vertex v, int len, std::vector<char>& used, int& best, int limit) {
  best = std::max(best, len);
  if (best >= limit) return;
  for (Vertex u : g.neighbors(v)) {
    if (used[u]) continue;
    used[u] = 1;
    longest_from(g, u, len + 1, used, best, limit);
    used[u] = 0;
    if (best >= limit) return;
  }
}

// Exhaustive backtracking, stopping early once `limit` is reached.
inline int longest_path_backtracking(const Graph& g, int limit) {
  int best = g.order() > 0 ? 1 : 0;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const auto& comp : connected_components(g)) {
    const int comp_limit = std::min(limit, static_cast<int>(comp.size()));
    for (Vertex s : comp) {
      if (best >= comp_limit) break;
      used[s] = 1;
      longest_from(g, s, 1, used, best, comp_limit);
      used[s] = 0;
    }
  }
  return best;
}

}  // namespace detail

/// Number of vertices on a longest path subgraph. Subset DP up to 20 vertices;
/// above that only if `cap` is raised, via pruned backtracking.
inline int longest_path_order(const Graph& g, int cap = kDefaultLongestPathCap) {
  if (g.order() > cap)
    throw cap_exceeded("longest_path_order: n=" + std::to_string(g.order()) + " exceeds cap " + std::to_string(cap));
  if (g.order() <= 20) return detail::longest_path_subset_dp(g);
  return detail::longest_path_backtracking(g, g.order());
}

// Longest path order in G - removed, for graphs already known to be nearly path-free.
inline int residual_longest_path(const Graph& g, const VertexSet& removed) {
  auto rest = remove_vertices(g, removed).graph;
  return detail::longest_path_backtracking(rest, rest.order());
}

}  // namespace kpvc
