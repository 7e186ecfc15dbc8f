#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/bounds.hpp"
#include "kpvc/cover_common.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/rng.hpp"

namespace kpvc {

/// Weights induced by a vertex ordering: 1 with no earlier neighbor,
/// (k-2)/(k-1) with exactly one, 0 otherwise.
struct OrderingWeights {
  std::vector<Rational> weight;  // by vertex
  Rational total;
  VertexSet positive;  // Y
};

inline OrderingWeights ordering_weights(const Graph& g, int k, const std::vector<Vertex>& order) {
  require(k >= 3, "ordering_weights: k must be at least 3");
  require(static_cast<int>(order.size()) == g.order(), "ordering_weights: order is not a permutation");
  std::vector<int> pos(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    require(order[i] >= 0 && order[i] < g.order() && pos[order[i]] < 0, "ordering_weights: order is not a permutation");
    pos[order[i]] = static_cast<int>(i);
  }
  const Rational partial(k - 2, k - 1);
  OrderingWeights w;
  w.weight.assign(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    int earlier = 0;
    for (Vertex u : g.neighbors(v))
      if (pos[u] < pos[v]) ++earlier;
    if (earlier == 0) w.weight[v] = 1;
    else if (earlier == 1) w.weight[v] = partial;
    if (earlier <= 1) {
      w.positive.push_back(v);
      w.total += w.weight[v];
    }
  }
  return w;
}

/// E = (2k-3)/(k-1) * sum 1/(1+d(v)), the expected weight of a random ordering.
inline Rational ordering_threshold(const Graph& g, int k) { return formula::degree_sequence_mass(g, k); }

/// Exhaustive search over all n! orderings for one whose weight reaches E.
inline std::optional<std::vector<Vertex>> ordering_meeting_threshold(const Graph& g, int k) {
  require(g.order() <= 10, "ordering_meeting_threshold: n must be at most 10");
  const Rational e = ordering_threshold(g, k);
  std::vector<Vertex> order = all_vertices(g);
  do {
    if (ordering_weights(g, k, order).total >= e) return order;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

struct RandomOrderOptions {
  std::uint64_t seed = 0;
  int max_samples = 200;
};

/// Random vertex orderings: G[Y] is a forest whose components each hold at most
/// one weight-1 vertex; the cover is V minus Y plus an optimal tree cover of
/// G[Y]. Samples until the weight reaches E or max_samples is spent; returns
/// the smallest cover seen. Certified iff some sample reached E.
inline AlgorithmResult cover_random_order(const Graph& g, int k, const RandomOrderOptions& opt = {}) {
  require(k >= 3, "cover_random_order: k must be at least 3");
  require(g.order() == 0 || g.min_degree() >= 1, "cover_random_order: graph has an isolated vertex");
  require(opt.max_samples >= 1, "cover_random_order: max_samples must be positive");
  AlgorithmResult r;
  r.algorithm = "random_order";
  r.k = k;
  const Rational e = ordering_threshold(g, k);
  r.guarantee_name = "n - (2k-3)/(k-1) sum 1/(1+d(v))";
  r.guarantee_value = g.order() - e;
  SeededRng rng(opt.seed);
  std::optional<VertexSet> best;
  bool met = false;
  for (int sample = 0; sample < opt.max_samples && !met; ++sample) {
    std::vector<Vertex> order = all_vertices(g);
    rng.shuffle(order);
    auto w = ordering_weights(g, k, order);
    auto y = induced_subgraph(g, w.positive);
    ensure(is_forest(y.graph), "cover_random_order: G[Y] contains a cycle");
    for (const auto& comp : connected_components(y.graph)) {
      int ones = 0;
      for (Vertex v : comp) ones += w.weight[y.origin[v]] == 1 ? 1 : 0;
      ensure(ones <= 1, "cover_random_order: component of G[Y] with two weight-1 vertices");
    }
    auto tree = psi_tree_exact(y.graph, k);
    auto cover = set_union(complement(g, w.positive), y.lift(tree.cover));
    met = w.total >= e;
    r.trace.push_back({"sample", -1, 0, g.order(), g.size(),
                       "weight " + to_string(w.total) + " cover " + std::to_string(cover.size()) + (met ? " meets E" : "")});
    if (!best || cover.size() < best->size()) best = std::move(cover);
  }
  r.cover = std::move(*best);
  r.guarantee_certified = met;
  return detail::finish(g, std::move(r));
}

}  // namespace kpvc
