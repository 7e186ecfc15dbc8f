#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/rational.hpp"

namespace kpvc {

using Vertex = int;
// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted so every traversal in the library visits
/// vertices in ascending index order. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Edges may repeat and appear in either orientation; they are deduplicated.
  Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
    require(n >= 0, "negative vertex count");
    for (auto [u, v] : edges) {
      require(u >= 0 && u < n && v >= 0 && v < n,
              "edge (" + std::to_string(u) + "," + std::to_string(v) + ") index out of range for n=" +
                  std::to_string(n));
      require(u != v, "self-loop at vertex " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    std::size_t twice = 0;
    for (auto& list : adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      twice += list.size();
    }
    m_ = static_cast<int>(twice / 2);
  }

  Graph(int n, std::initializer_list<Edge> edges) : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  // Each edge once as (u, v) with u < v, lexicographically ordered.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  int max_degree() const {
    int d = 0;
    for (const auto& list : adj_) d = std::max(d, static_cast<int>(list.size()));
    return d;
  }

  int min_degree() const {
    if (adj_.empty()) return 0;
    int d = order();
    for (const auto& list : adj_) d = std::min(d, static_cast<int>(list.size()));
    return d;
  }

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

inline Graph build_graph(int n, std::span<const Edge> edges) { return Graph(n, edges); }

struct DegreeProfile {
  int min_degree = 0;
  int max_degree = 0;
  Rational average;  // 2m/n
  std::vector<int> sequence;  // by vertex index
};

inline DegreeProfile degree_profile(const Graph& g) {
  require(g.order() >= 1, "degree profile of the empty graph");
  DegreeProfile p;
  p.min_degree = g.min_degree();
  p.max_degree = g.max_degree();
  p.average = Rational(2 * g.size(), g.order());
  for (Vertex v = 0; v < g.order(); ++v) p.sequence.push_back(g.degree(v));
  return p;
}

inline VertexSet all_vertices(const Graph& g) {
  VertexSet out(static_cast<std::size_t>(g.order()));
  std::iota(out.begin(), out.end(), 0);
  return out;
}

inline VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline VertexSet complement(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : s) in[v] = 1;
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Subgraph induced by `keep` (sorted), relabelled 0..|keep|-1 in the order of `keep`.
/// `origin[i]` is the original index of new vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> origin;

  VertexSet lift(const VertexSet& local) const {
    VertexSet out;
    out.reserve(local.size());
    for (Vertex v : local) out.push_back(origin[v]);
    return normalize(std::move(out));
  }
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require(keep[i] >= 0 && keep[i] < g.order(), "induced subgraph vertex out of range");
    local[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : keep)
    for (Vertex v : g.neighbors(u))
      if (u < v && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  return {Graph(static_cast<int>(keep.size()), edges), keep};
}

inline InducedSubgraph remove_vertices(const Graph& g, const VertexSet& removed) {
  return induced_subgraph(g, complement(g, normalize(removed)));
}

// Connected components, each sorted; components ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_forest(const Graph& g) {
  return g.size() + static_cast<int>(connected_components(g).size()) == g.order();
}

inline bool induces_forest(const Graph& g, const VertexSet& s) { return is_forest(induced_subgraph(g, s).graph); }

// Length of a shortest cycle; 0 for forests.
inline int girth(const Graph& g) {
  int best = 0;
  const int n = g.order();
  std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (parent[u] != v) {
          int len = dist[u] + dist[v] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

inline bool is_regular(const Graph& g) { return g.order() > 0 && g.min_degree() == g.max_degree(); }

inline bool is_triangle_free(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u), b = g.neighbors(v);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      a[i] < b[j] ? ++i : ++j;
    }
  }
  return true;
}

// Vertex-disjoint union; vertices of later parts are shifted past earlier ones.
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::vector<Edge> edges;
  int offset = 0;
  for (const auto& part : parts) {
    for (auto [u, v] : part.edges()) edges.emplace_back(u + offset, v + offset);
    offset += part.order();
  }
  return Graph(offset, edges);
}

}  // namespace kpvc
