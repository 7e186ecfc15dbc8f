#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "kpvc/bounds.hpp"
#include "kpvc/cover_common.hpp"
#include "kpvc/error.hpp"
#include "kpvc/graph.hpp"

namespace kpvc {

namespace detail {

// Walk a component of a graph with max degree <= 2, starting at `start` and
// moving to the smaller unvisited neighbor first.
inline std::vector<Vertex> walk_component(const Graph& g, Vertex start) {
  std::vector<Vertex> seq{start};
  Vertex prev = -1, cur = start;
  while (true) {
    Vertex next = -1;
    for (Vertex u : g.neighbors(cur))
      if (u != prev && u != start) {
        next = u;
        break;
      }
    if (next < 0) break;
    seq.push_back(next);
    prev = cur;
    cur = next;
  }
  return seq;
}

inline VertexSet low_degree_picks(const Graph& g, int k, std::vector<TraceEvent>& trace) {
  VertexSet cover;
  for (const auto& comp : connected_components(g)) {
    const int nc = static_cast<int>(comp.size());
    bool cycle = nc >= 3;
    for (Vertex v : comp)
      if (g.degree(v) != 2) cycle = false;
    if (cycle) {
      auto seq = walk_component(g, comp.front());
      if (nc >= k)
        for (int i = 0; i < nc; i += k) cover.push_back(seq[i]);
      trace.push_back({"cycle", comp.front(), 2, nc, nc, ""});
    } else {
      Vertex end = comp.front();
      for (Vertex v : comp)
        if (g.degree(v) <= 1) {
          end = v;
          break;
        }
      auto seq = walk_component(g, end);
      for (int i = k - 1; i < nc; i += k) cover.push_back(seq[i]);
      trace.push_back({"path", end, 0, nc, nc - 1, ""});
    }
  }
  return cover;
}

}  // namespace detail

/// Max degree <= 2: every k-th vertex along each path, ceil(n_c/k) evenly spaced
/// picks on each cycle of order at least k. Optimal per component.
inline AlgorithmResult cover_low_degree(const Graph& g, int k) {
  require(k >= 3, "cover_low_degree: k must be at least 3");
  require(g.max_degree() <= 2, "cover_low_degree: max degree above 2");
  AlgorithmResult r;
  r.algorithm = "low_degree";
  r.k = k;
  r.cover = detail::low_degree_picks(g, k, r.trace);
  r.guarantee_name = "2min(n,m)/(k+1)";
  r.guarantee_value = Rational(2 * std::min(g.order(), g.size()), k + 1);
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

/// Delete max-degree vertices until the rest has max degree <= 1.
inline AlgorithmResult cover_edge_peel_psi3(const Graph& g, int k = 3) {
  require(k >= 3, "cover_edge_peel_psi3: k must be at least 3");
  AlgorithmResult r;
  r.algorithm = "edge_peel_psi3";
  r.k = k;
  detail::WorkingGraph w(g);
  w.peel_while([](const detail::WorkingGraph& s) { return s.max_degree() >= 2; }, r.cover, r.trace);
  r.guarantee_name = "m/2";
  r.guarantee_value = Rational(g.size(), 2);
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

/// Max degree <= 3: local search for a cut in which both sides induce max
/// degree <= 1; the smaller side is returned.
inline AlgorithmResult cover_subcubic_psi3(const Graph& g, int k = 3) {
  require(k >= 3, "cover_subcubic_psi3: k must be at least 3");
  require(g.max_degree() <= 3, "cover_subcubic_psi3: max degree above 3");
  AlgorithmResult r;
  r.algorithm = "subcubic_psi3";
  r.k = k;
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), 0), same(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) same[v] = g.degree(v);
  int cut = 0;
  for (bool moved = true; moved;) {
    moved = false;
    for (Vertex v = 0; v < n; ++v) {
      if (same[v] < 2) continue;
      for (Vertex u : g.neighbors(v)) same[u] += side[u] == side[v] ? -1 : 1;
      side[v] ^= 1;
      cut += same[v] - (g.degree(v) - same[v]);
      same[v] = g.degree(v) - same[v];
      r.trace.push_back({"move", v, g.degree(v), n, g.size(), "cut " + std::to_string(cut)});
      moved = true;
      break;
    }
  }
  VertexSet a, b;
  for (Vertex v = 0; v < n; ++v) (side[v] ? b : a).push_back(v);
  r.cover = b.size() <= a.size() ? b : a;
  r.guarantee_name = "n/2";
  r.guarantee_value = Rational(n, 2);
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

namespace detail {

// Peel while `pred` holds, run `base` on the residual graph, lift and join.
template <typename Pred, typename Base>
AlgorithmResult peel_then(const Graph& g, int k, Pred pred, Base base, AlgorithmResult r) {
  r.k = k;
  WorkingGraph w(g);
  w.peel_while(pred, r.cover, r.trace);
  auto rest = induced_subgraph(g, w.live_vertices());
  AlgorithmResult sub = base(rest.graph);
  for (Vertex v : sub.cover) r.cover.push_back(rest.origin[v]);
  append_trace(r.trace, sub.trace, rest.origin);
  if (!sub.guarantee_certified) r.guarantee_certified = false;
  return r;
}

}  // namespace detail

/// Peel while max degree >= 4, then the better of edge peeling and the cut search.
inline AlgorithmResult cover_nm4_psi3(const Graph& g, int k = 3) {
  require(k >= 3, "cover_nm4_psi3: k must be at least 3");
  AlgorithmResult r;
  r.algorithm = "nm4_psi3";
  r.guarantee_name = "(n+m)/4";
  r.guarantee_value = Rational(g.order() + g.size(), 4);
  r.guarantee_certified = true;
  r = detail::peel_then(
      g, k, [](const detail::WorkingGraph& s) { return s.max_degree() >= 4; },
      [k](const Graph& h) {
        auto a = cover_edge_peel_psi3(h, k);
        auto b = cover_subcubic_psi3(h, k);
        return b.size() < a.size() ? b : a;
      },
      std::move(r));
  return detail::finish(g, std::move(r));
}

/// Peel while m > 2n, then the (n+m)/4 construction. The (4n+m)/9 value is
/// reported but not certified.
inline AlgorithmResult cover_4nm9_psi3(const Graph& g, int k = 3) {
  require(k >= 3, "cover_4nm9_psi3: k must be at least 3");
  AlgorithmResult r;
  r.algorithm = "4nm9_psi3";
  r.guarantee_name = "(4n+m)/9";
  r.guarantee_value = Rational(4 * g.order() + g.size(), 9);
  r = detail::peel_then(
      g, k, [](const detail::WorkingGraph& s) { return s.size() > 2 * s.order(); },
      [k](const Graph& h) { return cover_nm4_psi3(h, k); }, std::move(r));
  r.guarantee_certified = false;
  return detail::finish(g, std::move(r));
}

/// Peel while max degree >= 3, then the max-degree-2 construction for k = 4.
inline AlgorithmResult cover_psi4(const Graph& g, int k = 4) {
  require(k >= 4, "cover_psi4: k must be at least 4");
  AlgorithmResult r;
  r.algorithm = "psi4";
  r.guarantee_name = "(n+3m)/10";
  r.guarantee_value = Rational(g.order() + 3 * g.size(), 10);
  r.guarantee_certified = true;
  r = detail::peel_then(
      g, k, [](const detail::WorkingGraph& s) { return s.max_degree() >= 3; },
      [](const Graph& h) { return cover_low_degree(h, 4); }, std::move(r));
  return detail::finish(g, std::move(r));
}

// ---------------------------------------------------------------------------
// Pair peeling on top of a base construction with a known (a, b).

struct PairBase {
  std::string id;
  Rational a, b;
  int min_k = 3;
};

inline const std::vector<PairBase>& pair_bases() {
  static const std::vector<PairBase> bases{
      {"edge_peel_psi3", 0, frac(1, 2), 3},
      {"nm4_psi3", frac(1, 4), frac(1, 4), 3},
      {"4nm9_psi3", frac(4, 9), frac(1, 9), 3},
      {"psi4", frac(1, 10), frac(3, 10), 4},
  };
  return bases;
}

inline const PairBase& find_pair_base(const std::string& id) {
  for (const auto& b : pair_bases())
    if (b.id == id) return b;
  throw invalid_input("unknown pair base algorithm '" + id + "'");
}

namespace detail {

inline AlgorithmResult run_pair_base(const Graph& g, int k, const std::string& id) {
  if (id == "edge_peel_psi3") return cover_edge_peel_psi3(g, k);
  if (id == "nm4_psi3") return cover_nm4_psi3(g, k);
  if (id == "4nm9_psi3") return cover_4nm9_psi3(g, k);
  if (id == "psi4") return cover_psi4(g, k);
  throw invalid_input("unknown pair base algorithm '" + id + "'");
}

// Covers for chain[0..level]: peel while m > x n / 2, then level - 1.
inline AlgorithmResult pair_chain_cover(const Graph& g, int k, const std::string& base,
                                        const std::vector<FeasiblePair>& chain, std::size_t level) {
  if (level == 0) return run_pair_base(g, k, base);
  const int x = chain[level].provenance.back().x;
  AlgorithmResult r;
  r.algorithm = "pair_peel";
  r.guarantee_name = to_string(chain[level].a) + " n + " + to_string(chain[level].b) + " m";
  r.guarantee_value = chain[level].value(g.order(), g.size());
  r.guarantee_certified = true;
  return peel_then(
      g, k, [x](const WorkingGraph& s) { return 2 * static_cast<std::int64_t>(s.size()) > std::int64_t{x} * s.order(); },
      [&](const Graph& h) { return pair_chain_cover(h, k, base, chain, level - 1); }, std::move(r));
}

}  // namespace detail

/// Peel max-degree vertices while m > x n / 2 (each has degree >= x + 1), then
/// run `base`, whose registered pair must equal `pair`. The guarantee is the
/// stepped pair a' n + b' m, certified iff the base is.
inline AlgorithmResult cover_pair_peel(const Graph& g, int k, const FeasiblePair& pair, int x, const std::string& base) {
  const auto& reg = find_pair_base(base);
  require(k >= reg.min_k, "cover_pair_peel: base '" + base + "' needs k >= " + std::to_string(reg.min_k));
  require(pair.a == reg.a && pair.b == reg.b,
          "cover_pair_peel: pair (" + to_string(pair.a) + ", " + to_string(pair.b) + ") does not match base '" + base + "'");
  require(pair_step_admissible(pair, x), "cover_pair_peel: x = " + std::to_string(x) + " violates (1-a-b)/b <= x <= (2-2a)/b");
  auto chain = pair_chain(pair, {x});
  return detail::finish(g, detail::pair_chain_cover(g, k, base, chain, 1));
}

/// Nested pair peeling along pair_chain(base pair, xs); the last threshold peels first.
inline AlgorithmResult cover_pair_chain(const Graph& g, int k, const std::string& base, const std::vector<int>& xs) {
  const auto& reg = find_pair_base(base);
  require(k >= reg.min_k, "cover_pair_chain: base '" + base + "' needs k >= " + std::to_string(reg.min_k));
  auto chain = pair_chain(make_pair(k, reg.a, reg.b), xs);
  return detail::finish(g, detail::pair_chain_cover(g, k, base, chain, xs.size()));
}

// ---------------------------------------------------------------------------
// Degree-constrained partitions.

struct LovaszPartition {
  VertexSet a, b;
  std::vector<Vertex> moves;
  std::vector<std::int64_t> potentials;  // (b+1)e(A) + (a+1)e(B), before the first move and after each
};

/// Split V into A, B with max degree of G[A] <= a and of G[B] <= b, given
/// max degree of G <= a + b + 1. Starts from A = V and moves the lowest-index
/// violating vertex to the other side until none remains.
inline LovaszPartition lovasz_partition(const Graph& g, int a, int b) {
  require(a >= 0 && b >= 0, "lovasz_partition: caps must be nonnegative");
  require(g.max_degree() <= a + b + 1, "lovasz_partition: max degree exceeds a + b + 1");
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), 0), same(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) same[v] = g.degree(v);
  std::int64_t ea = g.size(), eb = 0;
  auto potential = [&] { return std::int64_t{b + 1} * ea + std::int64_t{a + 1} * eb; };
  LovaszPartition out;
  out.potentials.push_back(potential());
  while (true) {
    Vertex v = -1;
    for (Vertex u = 0; u < n; ++u)
      if (same[u] > (side[u] ? b : a)) {
        v = u;
        break;
      }
    if (v < 0) break;
    const int other = g.degree(v) - same[v];
    (side[v] ? eb : ea) -= same[v];
    (side[v] ? ea : eb) += other;
    for (Vertex u : g.neighbors(v)) same[u] += side[u] == side[v] ? -1 : 1;
    side[v] ^= 1;
    same[v] = other;
    out.moves.push_back(v);
    out.potentials.push_back(potential());
    ensure(out.potentials.back() < out.potentials[out.potentials.size() - 2], "lovasz_partition: potential did not drop");
  }
  for (Vertex v = 0; v < n; ++v) (side[v] ? out.b : out.a).push_back(v);
  return out;
}

namespace detail {

// Cover of a graph with max degree <= cap (cap = 2 or cap >= 4).
inline VertexSet cover_with_cap(const Graph& g, int k, int cap, std::vector<TraceEvent>& trace) {
  ensure(g.max_degree() <= cap && (cap == 2 || cap >= 4), "cover_with_cap: bad cap");
  if (g.max_degree() <= 1 && k >= 3) return {};
  if (cap == 2) return low_degree_picks(g, k, trace);
  if (cap % 2 == 0) {
    auto part = lovasz_partition(g, cap - 2, 1);
    trace.push_back({"partition", -1, cap, g.order(), g.size(),
                     "caps (" + std::to_string(cap - 2) + ",1) |A|=" + std::to_string(part.a.size()) +
                         " |B|=" + std::to_string(part.b.size())});
    auto sa = induced_subgraph(g, part.a);
    auto ta = sa.lift(cover_with_cap(sa.graph, k, cap - 2, trace));
    auto option = set_union(part.b, ta);
    return option.size() < part.a.size() ? option : part.a;
  }
  const int a = (cap - 1 + 3) / 4;  // ceil((cap-1)/4)
  const int b = (cap - 1) / 2 - a;
  auto part = lovasz_partition(g, 2 * a, 2 * b);
  trace.push_back({"partition", -1, cap, g.order(), g.size(),
                   "caps (" + std::to_string(2 * a) + "," + std::to_string(2 * b) + ") |A|=" +
                       std::to_string(part.a.size()) + " |B|=" + std::to_string(part.b.size())});
  auto sa = induced_subgraph(g, part.a);
  auto sb = induced_subgraph(g, part.b);
  auto ta = sa.lift(cover_with_cap(sa.graph, k, 2 * a, trace));
  auto tb = sb.lift(cover_with_cap(sb.graph, k, 2 * b, trace));
  auto first = set_union(ta, part.b);
  auto second = set_union(tb, part.a);
  return second.size() < first.size() ? second : first;
}

}  // namespace detail

/// Recursive partition cover for max degree 2 or at least 4.
inline AlgorithmResult cover_bounded_degree(const Graph& g, int k) {
  require(k >= 3, "cover_bounded_degree: k must be at least 3");
  const int D = g.max_degree();
  require(D != 3, "cover_bounded_degree: max degree 3 is not covered by the partition bound");
  AlgorithmResult r;
  r.algorithm = "bounded_degree";
  r.k = k;
  const int cap = std::max(D, 2);
  r.cover = detail::cover_with_cap(g, k, cap, r.trace);
  r.guarantee_name = cap % 2 == 0 ? "((k-1)(D-2)+4)/((k-1)D+4) n" : "((k-1)(D-3)+8)/((k-1)(D-1)+8) n";
  r.guarantee_value = formula::max_degree_coefficient(k, cap) * g.order();
  r.guarantee_certified = true;
  return detail::finish(g, std::move(r));
}

/// Odd max degree 2d+1 >= 5: partition with caps (d, d), take the smaller side
/// whole and cover the larger side by the max-degree-d construction.
inline AlgorithmResult cover_halving(const Graph& g, int k) {
  require(k >= 3, "cover_halving: k must be at least 3");
  const int D = g.max_degree();
  require(D % 2 == 1 && D >= 5, "cover_halving: max degree must be odd and at least 5");
  const int d = (D - 1) / 2;
  AlgorithmResult r;
  r.algorithm = "halving";
  r.k = k;
  auto part = lovasz_partition(g, d, d);
  if (part.a.size() > part.b.size()) std::swap(part.a, part.b);
  r.trace.push_back({"partition", -1, D, g.order(), g.size(),
                     "caps (" + std::to_string(d) + "," + std::to_string(d) + ") |A|=" + std::to_string(part.a.size()) +
                         " |B|=" + std::to_string(part.b.size())});
  const int cap = formula::admissible_degree_cap(d);
  auto sb = induced_subgraph(g, part.b);
  auto tb = sb.lift(detail::cover_with_cap(sb.graph, k, cap, r.trace));
  r.cover = set_union(part.a, tb);
  if (D == 11 && k >= 6) {
    r.guarantee_name = "(3k+5)/(4k+4) n";
    r.guarantee_value = formula::halving11(k, g.order());
    r.guarantee_certified = true;
  } else {
    r.guarantee_name = "|A| + f(k," + std::to_string(cap) + ")|B|";
    r.guarantee_value = Rational(static_cast<int>(part.a.size())) +
                        formula::max_degree_coefficient(k, cap) * static_cast<int>(part.b.size());
    r.guarantee_certified = false;
  }
  return detail::finish(g, std::move(r));
}

}  // namespace kpvc
