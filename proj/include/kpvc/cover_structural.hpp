#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/bounds.hpp"
#include "kpvc/chordal.hpp"
#include "kpvc/cover_common.hpp"
#include "kpvc/exact.hpp"

namespace kpvc {

/// Any n - k + 1 vertices (the highest-indexed ones) leave fewer than k.
inline AlgorithmResult cover_trivial(const Graph& g, int k) {
  require(k >= 2, "cover_trivial: k must be at least 2");
  AlgorithmResult r;
  r.algorithm = "trivial";
  r.k = k;
  for (Vertex v = std::max(0, k - 1); v < g.order(); ++v) r.cover.push_back(v);
  r.guarantee_name = "n-k+1";
  r.guarantee_value = std::max(0, g.order() - k + 1);
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

inline AlgorithmResult cover_tree_exact(const Graph& g, int k) {
  AlgorithmResult r;
  r.algorithm = "tree_exact";
  r.k = k;
  r.cover = psi_tree_exact(g, k).cover;
  r.guarantee_name = "n/k";
  r.guarantee_value = Rational(g.order(), k);
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

/// Chordal: keep the two largest color classes of an omega-coloring (they
/// induce a forest) and cover that forest optimally.
inline AlgorithmResult cover_chordal_classes(const Graph& g, int k) {
  require(k >= 2, "cover_chordal_classes: k must be at least 2");
  require(is_chordal(g), "cover_chordal_classes: graph is not chordal");
  AlgorithmResult r;
  r.algorithm = "chordal_classes";
  r.k = k;
  auto coloring = chordal_color(g);
  auto classes = coloring.classes();
  std::stable_sort(classes.begin(), classes.end(),
                   [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });
  VertexSet keep;
  for (std::size_t i = 0; i < std::min<std::size_t>(2, classes.size()); ++i) keep = set_union(keep, classes[i]);
  auto forest = induced_subgraph(g, keep);
  ensure(is_forest(forest.graph), "cover_chordal_classes: two color classes induce a cycle");
  r.trace.push_back({"select", -1, 0, g.order(), g.size(),
                     "chi " + std::to_string(coloring.count) + ", kept " + std::to_string(keep.size())});
  r.cover = set_union(complement(g, keep), forest.lift(psi_tree_exact(forest.graph, k).cover));
  r.guarantee_name = "(1-(2/chi)(k-1)/k) n";
  r.guarantee_value = formula::chordal_chi(k, coloring.count, g.order());
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

namespace detail {

struct DecompState {
  int k = 3;
  int omega = 1;
  bool all_steps_bounded = true;
  std::vector<TraceEvent> trace;
};

inline VertexSet chordal_decomp_rec(const Graph& g, DecompState& st) {
  const int n = g.order();
  const int limit = st.omega + st.k - 1;
  if (n <= limit) {
    VertexSet picks;
    for (Vertex v = std::max(0, st.k - 1); v < n; ++v) picks.push_back(v);
    return picks;
  }
  auto nice = nice_decomposition(g);
  auto sizes = nice.subtree_sizes();
  auto depth = nice.depths();
  std::vector<int> candidates;
  for (int x = 0; x < static_cast<int>(nice.nodes.size()); ++x) {
    if (sizes[x] < limit) continue;
    bool minimal = true;
    for (int c : nice.nodes[x].children)
      if (sizes[c] >= limit) minimal = false;
    if (minimal) candidates.push_back(x);
  }
  ensure(!candidates.empty(), "chordal_decomp: no node reaches omega + k - 1 vertices");
  std::stable_sort(candidates.begin(), candidates.end(), [&](int a, int b) { return depth[a] > depth[b]; });

  VertexSet chosen_vx, chosen_cover;
  bool chosen_ok = false;
  for (int x : candidates) {
    const VertexSet vx = nice.subtree_vertices(x);
    const VertexSet& sx = nice.nodes[x].bag;
    VertexSet cover = sx;
    auto inner = induced_subgraph(g, set_difference(vx, sx));
    for (const auto& comp : connected_components(inner.graph)) {
      auto part = induced_subgraph(inner.graph, comp);
      cover = set_union(cover, inner.lift(part.lift(chordal_decomp_rec(part.graph, st))));
    }
    const bool ok = Rational(static_cast<int>(cover.size()) * limit) <= Rational(st.omega * static_cast<int>(vx.size()));
    if (chosen_vx.empty() || ok) {
      chosen_vx = vx;
      chosen_cover = std::move(cover);
      chosen_ok = ok;
    }
    if (ok) break;
  }
  if (!chosen_ok) st.all_steps_bounded = false;
  st.trace.push_back({"select", -1, 0, n, g.size(),
                      "|V_x|=" + std::to_string(chosen_vx.size()) + " |T_x|=" + std::to_string(chosen_cover.size()) +
                          (chosen_ok ? "" : " above omega/(omega+k-1)")});
  auto rest = induced_subgraph(g, set_difference(all_vertices(g), chosen_vx));
  return set_union(chosen_cover, rest.lift(chordal_decomp_rec(rest.graph, st)));
}

}  // namespace detail

/// Chordal: repeatedly take a lowest node x of a nice decomposition with
/// |V_x| >= omega + k - 1, cover its bag plus the pieces of G[V_x - S_x],
/// and continue on G - V_x. Small graphs lose their n - k + 1 highest vertices.
/// Certified when every step costs at most omega/(omega+k-1) of |V_x|.
inline AlgorithmResult cover_chordal_decomp(const Graph& g, int k) {
  require(k >= 3, "cover_chordal_decomp: k must be at least 3");
  require(is_chordal(g), "cover_chordal_decomp: graph is not chordal");
  AlgorithmResult r;
  r.algorithm = "chordal_decomp";
  r.k = k;
  detail::DecompState st;
  st.k = k;
  st.omega = std::max(1, g.order() > 0 ? clique_number(g) : 1);
  r.cover = detail::chordal_decomp_rec(g, st);
  r.trace = std::move(st.trace);
  r.guarantee_name = "omega/(omega+k-1) n";
  r.guarantee_value = formula::chordal_omega(k, st.omega, g.order());
  r.guarantee_certified = st.all_steps_bounded;
  return detail::finish(g, std::move(r));
}

/// Everything outside an induced forest S, plus an optimal cover of G[S].
/// S defaults to a maximum induced forest.
inline AlgorithmResult cover_from_forest(const Graph& g, int k, std::optional<VertexSet> forest = std::nullopt,
                                         const SolverCaps& caps = {}) {
  require(k >= 2, "cover_from_forest: k must be at least 2");
  VertexSet s;
  if (forest) {
    s = normalize(*forest);
    for (Vertex v : s) require(v >= 0 && v < g.order(), "cover_from_forest: vertex out of range");
    require(induces_forest(g, s), "cover_from_forest: S does not induce a forest");
  } else {
    s = forest_number_exact(g, caps).forest;
  }
  AlgorithmResult r;
  r.algorithm = "from_forest";
  r.k = k;
  auto sub = induced_subgraph(g, s);
  r.cover = set_union(complement(g, s), sub.lift(psi_tree_exact(sub.graph, k).cover));
  r.trace.push_back({"select", -1, 0, g.order(), g.size(), "forest " + std::to_string(s.size())});
  r.guarantee_name = "n-((k-1)/k)|S|";
  r.guarantee_value = formula::forest_bound(g.order(), k, Rational(static_cast<int>(s.size())));
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

}  // namespace kpvc
