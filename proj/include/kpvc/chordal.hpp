#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"

namespace kpvc {

/// Vertex ordering; order[i] is eliminated i-th. A perfect elimination ordering
/// (PEO) when each vertex's later neighbors form a clique.
struct EliminationOrder {
  std::vector<Vertex> order;
  std::vector<int> position;  // inverse of order
};

/// Maximum cardinality search, ties broken by lowest index. The first vertex
/// picked is eliminated last; the result is a PEO iff G is chordal.
inline EliminationOrder mcs_order(const Graph& g) {
  const int n = g.order();
  EliminationOrder eo;
  eo.order.assign(static_cast<std::size_t>(n), -1);
  eo.position.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  for (int slot = n - 1; slot >= 0; --slot) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (eo.position[v] < 0 && (pick < 0 || weight[v] > weight[pick])) pick = v;
    eo.position[pick] = slot;
    eo.order[slot] = pick;
    for (Vertex u : g.neighbors(pick))
      if (eo.position[u] < 0) ++weight[u];
  }
  return eo;
}

inline VertexSet later_neighbors(const Graph& g, const EliminationOrder& eo, Vertex v) {
  VertexSet out;
  for (Vertex u : g.neighbors(v))
    if (eo.position[u] > eo.position[v]) out.push_back(u);
  return out;
}

// Single-pass check: the earliest later neighbor u of v must be adjacent to
// all other later neighbors of v.
inline bool is_perfect_elimination_order(const Graph& g, const EliminationOrder& eo) {
  for (Vertex v : eo.order) {
    auto later = later_neighbors(g, eo, v);
    if (later.empty()) continue;
    Vertex u = *std::min_element(later.begin(), later.end(),
                                 [&](Vertex a, Vertex b) { return eo.position[a] < eo.position[b]; });
    for (Vertex w : later)
      if (w != u && !g.has_edge(u, w)) return false;
  }
  return true;
}

inline bool is_chordal(const Graph& g) { return is_perfect_elimination_order(g, mcs_order(g)); }

inline EliminationOrder require_peo(const Graph& g, const char* who) {
  auto eo = mcs_order(g);
  require(is_perfect_elimination_order(g, eo), std::string(who) + ": graph is not chordal");
  return eo;
}

struct Coloring {
  std::vector<int> color;  // by vertex, 0-based
  int count = 0;

  std::vector<VertexSet> classes() const {
    std::vector<VertexSet> out(static_cast<std::size_t>(count));
    for (Vertex v = 0; v < static_cast<Vertex>(color.size()); ++v) out[color[v]].push_back(v);
    return out;
  }
};

// Greedy along the reverse PEO: colored neighbors are always a clique, so
// exactly omega colors are used.
inline Coloring chordal_color(const Graph& g) {
  auto eo = require_peo(g, "chordal_color");
  Coloring c;
  c.color.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> used;
  for (auto it = eo.order.rbegin(); it != eo.order.rend(); ++it) {
    Vertex v = *it;
    used.assign(static_cast<std::size_t>(g.degree(v)) + 1, 0);
    for (Vertex u : g.neighbors(v))
      if (c.color[u] >= 0 && c.color[u] <= g.degree(v)) used[c.color[u]] = 1;
    int col = 0;
    while (used[col]) ++col;
    c.color[v] = col;
    c.count = std::max(c.count, col + 1);
  }
  return c;
}

// All maximal cliques, each sorted, listed in lexicographic order.
inline std::vector<VertexSet> max_cliques(const Graph& g) {
  auto eo = require_peo(g, "max_cliques");
  std::vector<VertexSet> cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto c = later_neighbors(g, eo, v);
    c.push_back(v);
    cand.push_back(normalize(std::move(c)));
  }
  std::sort(cand.begin(), cand.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  std::vector<VertexSet> out;
  for (auto& c : cand) {
    bool contained = false;
    for (const auto& kept : out)
      if (std::includes(kept.begin(), kept.end(), c.begin(), c.end())) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int clique_number(const Graph& g) {
  int w = 0;
  for (const auto& c : max_cliques(g)) w = std::max(w, static_cast<int>(c.size()));
  return w;
}

/// Tree on the maximal cliques with the running-intersection property.
struct CliqueTree {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> edges;  // bag indices, first < second
};

/// Maximum-weight spanning tree of the clique intersection graph (weight
/// |B_i ∩ B_j|, zero weights allowed so disconnected graphs still give a tree),
/// by Kruskal over (weight desc, i asc, j asc).
inline CliqueTree clique_tree(const Graph& g) {
  CliqueTree ct;
  ct.bags = max_cliques(g);
  const int b = static_cast<int>(ct.bags.size());
  std::vector<std::tuple<int, int, int>> cand;
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j) {
      VertexSet common;
      std::set_intersection(ct.bags[i].begin(), ct.bags[i].end(), ct.bags[j].begin(), ct.bags[j].end(),
                            std::back_inserter(common));
      cand.emplace_back(-static_cast<int>(common.size()), i, j);
    }
  std::sort(cand.begin(), cand.end());
  std::vector<int> uf(static_cast<std::size_t>(b));
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (auto [w, i, j] : cand) {
    int a = find(i), c = find(j);
    if (a == c) continue;
    uf[a] = c;
    ct.edges.emplace_back(i, j);
  }
  return ct;
}

// For each vertex, the bags containing it must form a connected subtree.
inline bool has_running_intersection(const CliqueTree& ct, int n) {
  const int b = static_cast<int>(ct.bags.size());
  std::vector<std::vector<int>> tree(static_cast<std::size_t>(b));
  for (auto [i, j] : ct.edges) {
    tree[i].push_back(j);
    tree[j].push_back(i);
  }
  for (Vertex v = 0; v < n; ++v) {
    std::vector<char> holds(static_cast<std::size_t>(b), 0), seen(static_cast<std::size_t>(b), 0);
    int total = 0, start = -1;
    for (int i = 0; i < b; ++i)
      if (std::binary_search(ct.bags[i].begin(), ct.bags[i].end(), v)) {
        holds[i] = 1;
        ++total;
        if (start < 0) start = i;
      }
    if (total == 0) continue;
    int reached = 0;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++reached;
      for (int y : tree[x])
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    if (reached != total) return false;
  }
  return true;
}

enum class NodeKind { leaf, introduce, forget, join };

inline const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::leaf: return "leaf";
    case NodeKind::introduce: return "introduce";
    case NodeKind::forget: return "forget";
    case NodeKind::join: return "join";
  }
  return "?";
}

/// Rooted binary decomposition. Join nodes have two children with the same bag;
/// introduce/forget nodes differ from their single child by exactly one vertex.
struct NiceDecomposition {
  struct Node {
    NodeKind kind = NodeKind::leaf;
    VertexSet bag;
    std::vector<int> children;
    int parent = -1;
  };

  std::vector<Node> nodes;
  int root = -1;
  int vertex_count = 0;

  // Vertices appearing in bags of the subtree rooted at x (V_x).
  VertexSet subtree_vertices(int x) const {
    std::vector<char> in(static_cast<std::size_t>(vertex_count), 0);
    std::vector<int> stack{x};
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (Vertex v : nodes[y].bag) in[v] = 1;
      for (int c : nodes[y].children) stack.push_back(c);
    }
    VertexSet out;
    for (Vertex v = 0; v < vertex_count; ++v)
      if (in[v]) out.push_back(v);
    return out;
  }

  // |V_x| for every node in one post-order pass.
  std::vector<int> subtree_sizes() const {
    const std::size_t words = (static_cast<std::size_t>(vertex_count) + 63) / 64;
    std::vector<std::vector<std::uint64_t>> sets(nodes.size(), std::vector<std::uint64_t>(words, 0));
    std::vector<int> sizes(nodes.size(), 0);
    for (int x : post_order()) {
      auto& s = sets[x];
      for (Vertex v : nodes[x].bag) s[v / 64] |= std::uint64_t{1} << (v % 64);
      for (int c : nodes[x].children)
        for (std::size_t w = 0; w < words; ++w) s[w] |= sets[c][w];
      int count = 0;
      for (auto w : s) count += std::popcount(w);
      sizes[x] = count;
    }
    return sizes;
  }

  std::vector<int> post_order() const {
    std::vector<int> out, stack;
    if (root < 0) return out;
    stack.push_back(root);
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (int c : nodes[x].children) stack.push_back(c);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<int> depths() const {
    std::vector<int> d(nodes.size(), 0);
    auto order = post_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it)
      if (nodes[*it].parent >= 0) d[*it] = d[nodes[*it].parent] + 1;
    return d;
  }

  // Indented dump for debugging; not a stable format.
  std::string dump() const {
    std::string out;
    std::vector<std::pair<int, int>> stack;
    if (root >= 0) stack.emplace_back(root, 0);
    while (!stack.empty()) {
      auto [x, depth] = stack.back();
      stack.pop_back();
      out += std::string(static_cast<std::size_t>(2 * depth), ' ') + to_string(nodes[x].kind) + " {";
      for (std::size_t i = 0; i < nodes[x].bag.size(); ++i) out += (i ? "," : "") + std::to_string(nodes[x].bag[i]);
      out += "}\n";
      for (auto it = nodes[x].children.rbegin(); it != nodes[x].children.rend(); ++it) stack.emplace_back(*it, depth + 1);
    }
    return out;
  }
};

namespace detail {

class NiceBuilder {
 public:
  NiceBuilder(const CliqueTree& ct, int n) : ct_(ct), tree_(ct.bags.size()) {
    out_.vertex_count = n;
    for (auto [i, j] : ct.edges) {
      require(i >= 0 && j >= 0 && i < static_cast<int>(ct.bags.size()) && j < static_cast<int>(ct.bags.size()) && i != j,
              "nice_decomposition: malformed clique tree edge");
      tree_[i].push_back(j);
      tree_[j].push_back(i);
    }
    for (auto& adj : tree_) std::sort(adj.begin(), adj.end());
  }

  NiceDecomposition build() {
    if (ct_.bags.empty()) return out_;
    require(ct_.edges.size() + 1 == ct_.bags.size(), "nice_decomposition: clique tree is not a tree");
    for (const auto& bag : ct_.bags) require(!bag.empty(), "nice_decomposition: empty bag");
    out_.root = expand(0, -1);
    require(visited_ == ct_.bags.size(), "nice_decomposition: clique tree is disconnected");
    return std::move(out_);
  }

 private:
  int add(NodeKind kind, VertexSet bag, std::vector<int> children) {
    int id = static_cast<int>(out_.nodes.size());
    for (int c : children) out_.nodes[c].parent = id;
    out_.nodes.push_back({kind, std::move(bag), std::move(children), -1});
    return id;
  }

  // Chain from the node `from` (bag `have`) up to a node with bag `want`:
  // forget have \ want first, then introduce want \ have, ascending.
  int chain(int from, VertexSet have, const VertexSet& want) {
    for (Vertex v : set_difference(have, want)) {
      have.erase(std::find(have.begin(), have.end(), v));
      from = add(NodeKind::forget, have, {from});
    }
    for (Vertex v : set_difference(want, have)) {
      have.insert(std::upper_bound(have.begin(), have.end(), v), v);
      from = add(NodeKind::introduce, have, {from});
    }
    return from;
  }

  int expand(int b, int parent) {
    ++visited_;
    const auto& bag = ct_.bags[b];
    std::vector<int> branches;
    for (int c : tree_[b]) {
      if (c == parent) continue;
      int top = expand(c, b);
      branches.push_back(chain(top, ct_.bags[c], bag));
    }
    if (branches.empty()) {
      int leaf = add(NodeKind::leaf, {bag.front()}, {});
      return chain(leaf, {bag.front()}, bag);
    }
    int cur = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) cur = add(NodeKind::join, bag, {cur, branches[i]});
    return cur;
  }

  const CliqueTree& ct_;
  std::vector<std::vector<int>> tree_;
  NiceDecomposition out_;
  std::size_t visited_ = 0;
};

}  // namespace detail

/// Expand a clique tree (rooted at bag 0) into a nice decomposition: leaves hold
/// one vertex, introduce/forget chains interpolate between adjacent bags, and
/// bags with several children are merged through a chain of join nodes.
inline NiceDecomposition nice_decomposition(const CliqueTree& ct, int n) { return detail::NiceBuilder(ct, n).build(); }

inline NiceDecomposition nice_decomposition(const Graph& g) { return nice_decomposition(clique_tree(g), g.order()); }

// Empty string when every structural property holds, otherwise the first failure.
inline std::string check_nice_decomposition(const NiceDecomposition& d, const Graph& g) {
  const int omega = g.order() ? clique_number(g) : 0;
  if (g.order() == 0) return d.nodes.empty() ? "" : "nodes for an empty graph";
  if (d.root < 0) return "no root";
  std::vector<std::vector<int>> holders(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < static_cast<int>(d.nodes.size()); ++x) {
    const auto& node = d.nodes[x];
    if (static_cast<int>(node.bag.size()) > omega) return "bag larger than omega at node " + std::to_string(x);
    for (Vertex v : node.bag) holders[v].push_back(x);
    switch (node.kind) {
      case NodeKind::leaf:
        if (!node.children.empty()) return "leaf with children";
        break;
      case NodeKind::join:
        if (node.children.size() != 2) return "join without two children";
        for (int c : node.children)
          if (d.nodes[c].bag != node.bag) return "join child bag differs at node " + std::to_string(x);
        break;
      case NodeKind::introduce:
      case NodeKind::forget: {
        if (node.children.size() != 1) return "unary node without one child";
        const auto& child = d.nodes[node.children[0]].bag;
        const auto& big = node.kind == NodeKind::introduce ? node.bag : child;
        const auto& small = node.kind == NodeKind::introduce ? child : node.bag;
        if (big.size() != small.size() + 1 || !std::includes(big.begin(), big.end(), small.begin(), small.end()))
          return "unary node is not a one-vertex step at node " + std::to_string(x);
        break;
      }
    }
  }
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (int x : holders[u])
      if (std::binary_search(d.nodes[x].bag.begin(), d.nodes[x].bag.end(), v)) found = true;
    if (!found) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " in no bag";
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (holders[v].empty()) return "vertex " + std::to_string(v) + " in no bag";
    // Connected iff exactly one holder has a parent outside the holder set.
    int tops = 0;
    for (int x : holders[v]) {
      int p = d.nodes[x].parent;
      if (p < 0 || !std::binary_search(d.nodes[p].bag.begin(), d.nodes[p].bag.end(), v)) ++tops;
    }
    if (tops != 1) return "occurrences of vertex " + std::to_string(v) + " are not connected";
  }
  return "";
}

}  // namespace kpvc
