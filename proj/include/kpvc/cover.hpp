#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/bounds.hpp"
#include "kpvc/chordal.hpp"
#include "kpvc/cover_common.hpp"
#include "kpvc/cover_degree.hpp"
#include "kpvc/cover_random.hpp"
#include "kpvc/cover_structural.hpp"

namespace kpvc {

struct CoverOptions {
  std::uint64_t seed = 0;
  int max_samples = 200;
  std::string pair_base = "4nm9_psi3";
  std::vector<int> xs{5};  // pair_peel thresholds, applied along pair_chain
  std::optional<VertexSet> forest;
  SolverCaps caps;
};

struct CoverAlgorithm {
  std::string id;
  std::string summary;
  // Empty when the algorithm accepts (G, k); otherwise why not.
  std::function<std::string(const GraphFacts&, int)> refuse;
  // The guarantee the algorithm certifies before running, if it can be known in advance.
  std::function<std::optional<Rational>(const GraphFacts&, int)> promise;
  std::function<AlgorithmResult(const Graph&, int, const CoverOptions&)> run;
};

namespace detail {

inline std::string need(bool ok, const char* why) { return ok ? std::string() : std::string(why); }

}  // namespace detail

inline const std::vector<CoverAlgorithm>& cover_algorithms() {
  using R = Rational;
  using detail::need;
  static const std::vector<CoverAlgorithm> algorithms{
      {"trivial", "delete n-k+1 vertices",
       [](const GraphFacts&, int) { return std::string(); },
       [](const GraphFacts& f, int k) -> std::optional<R> { return R(std::max(0, f.n - k + 1)); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_trivial(g, k); }},
      {"tree_exact", "optimal cover of a forest",
       [](const GraphFacts& f, int) { return need(f.forest, "not a forest"); },
       [](const GraphFacts& f, int k) -> std::optional<R> { return R(f.n, k); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_tree_exact(g, k); }},
      {"low_degree", "max degree <= 2: every k-th vertex per component",
       [](const GraphFacts& f, int k) { return k < 3 ? "needs k >= 3" : need(f.max_degree <= 2, "max degree above 2"); },
       [](const GraphFacts& f, int k) -> std::optional<R> { return R(2 * std::min(f.n, f.m), k + 1); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_low_degree(g, k); }},
      {"edge_peel_psi3", "peel while max degree >= 2",
       [](const GraphFacts&, int k) { return need(k >= 3, "needs k >= 3"); },
       [](const GraphFacts& f, int) -> std::optional<R> { return R(f.m, 2); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_edge_peel_psi3(g, k); }},
      {"subcubic_psi3", "cut local search, max degree <= 3",
       [](const GraphFacts& f, int k) { return k < 3 ? "needs k >= 3" : need(f.max_degree <= 3, "max degree above 3"); },
       [](const GraphFacts& f, int) -> std::optional<R> { return R(f.n, 2); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_subcubic_psi3(g, k); }},
      {"nm4_psi3", "peel while max degree >= 4, then the better psi_3 base",
       [](const GraphFacts&, int k) { return need(k >= 3, "needs k >= 3"); },
       [](const GraphFacts& f, int) -> std::optional<R> { return R(f.n + f.m, 4); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_nm4_psi3(g, k); }},
      {"4nm9_psi3", "peel while m > 2n, then nm4_psi3 (value not certified)",
       [](const GraphFacts&, int k) { return need(k >= 3, "needs k >= 3"); },
       [](const GraphFacts&, int) -> std::optional<R> { return std::nullopt; },
       [](const Graph& g, int k, const CoverOptions&) { return cover_4nm9_psi3(g, k); }},
      {"psi4", "peel while max degree >= 3, then low_degree",
       [](const GraphFacts&, int k) { return need(k >= 4, "needs k >= 4"); },
       [](const GraphFacts& f, int) -> std::optional<R> { return R(f.n + 3 * f.m, 10); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_psi4(g, k); }},
      {"pair_peel", "peel while m > xn/2 along a pair chain, then the base",
       [](const GraphFacts&, int k) { return need(k >= 3, "needs k >= 3"); },
       [](const GraphFacts&, int) -> std::optional<R> { return std::nullopt; },
       [](const Graph& g, int k, const CoverOptions& o) { return cover_pair_chain(g, k, o.pair_base, o.xs); }},
      {"bounded_degree", "recursive degree-constrained partition",
       [](const GraphFacts& f, int k) { return k < 3 ? "needs k >= 3" : need(f.max_degree != 3, "max degree 3 excluded"); },
       [](const GraphFacts& f, int k) -> std::optional<R> {
         return formula::max_degree_coefficient(k, std::max(f.max_degree, 2)) * f.n;
       },
       [](const Graph& g, int k, const CoverOptions&) { return cover_bounded_degree(g, k); }},
      {"halving", "partition with caps (d,d) for max degree 2d+1",
       [](const GraphFacts& f, int k) {
         return k < 3 ? "needs k >= 3" : need(f.max_degree % 2 == 1 && f.max_degree >= 5, "max degree not odd >= 5");
       },
       [](const GraphFacts& f, int k) -> std::optional<R> {
         if (f.max_degree == 11 && k >= 6) return formula::halving11(k, f.n);
         return std::nullopt;
       },
       [](const Graph& g, int k, const CoverOptions&) { return cover_halving(g, k); }},
      {"random_order", "best of random vertex orderings",
       [](const GraphFacts& f, int k) { return k < 3 ? "needs k >= 3" : need(f.n == 0 || f.min_degree >= 1, "isolated vertex"); },
       [](const GraphFacts&, int) -> std::optional<R> { return std::nullopt; },
       [](const Graph& g, int k, const CoverOptions& o) {
         return cover_random_order(g, k, RandomOrderOptions{o.seed, o.max_samples});
       }},
      {"chordal_classes", "two largest color classes of a chordal graph",
       [](const GraphFacts& f, int) { return need(f.chordal, "not chordal"); },
       [](const GraphFacts& f, int k) -> std::optional<R> { return formula::chordal_chi(k, f.chi, f.n); },
       [](const Graph& g, int k, const CoverOptions&) { return cover_chordal_classes(g, k); }},
      {"chordal_decomp", "nice-decomposition recursion on a chordal graph",
       [](const GraphFacts& f, int k) { return k < 3 ? "needs k >= 3" : need(f.chordal, "not chordal"); },
       [](const GraphFacts&, int) -> std::optional<R> { return std::nullopt; },
       [](const Graph& g, int k, const CoverOptions&) { return cover_chordal_decomp(g, k); }},
      {"from_forest", "complement of a maximum induced forest plus its tree cover",
       [](const GraphFacts& f, int) { return need(f.forest_number.has_value(), "forest number above cap"); },
       [](const GraphFacts& f, int k) -> std::optional<R> {
         return formula::forest_bound(f.n, k, R(*f.forest_number));
       },
       [](const Graph& g, int k, const CoverOptions& o) { return cover_from_forest(g, k, o.forest, o.caps); }},
  };
  return algorithms;
}

inline const CoverAlgorithm& find_cover_algorithm(const std::string& id) {
  for (const auto& a : cover_algorithms())
    if (a.id == id) return a;
  throw invalid_input("unknown cover algorithm '" + id + "'");
}

/// The accepted algorithm with the smallest guarantee certified in advance;
/// ties go to the earlier registry entry.
inline const CoverAlgorithm& choose_cover_algorithm(const GraphFacts& f, int k) {
  const CoverAlgorithm* best = nullptr;
  Rational best_value;
  for (const auto& a : cover_algorithms()) {
    if (!a.refuse(f, k).empty()) continue;
    auto v = a.promise(f, k);
    if (!v) continue;
    if (!best || *v < best_value) {
      best = &a;
      best_value = *v;
    }
  }
  ensure(best != nullptr, "choose_cover_algorithm: no algorithm accepted the graph");
  return *best;
}

inline AlgorithmResult run_cover(const Graph& g, int k, const std::string& id, const CoverOptions& opt = {}) {
  require(k >= 2, "k must be at least 2");
  auto facts = GraphFacts::of(g, opt.caps);
  const CoverAlgorithm& algo = id == "auto" ? choose_cover_algorithm(facts, k) : find_cover_algorithm(id);
  if (auto why = algo.refuse(facts, k); !why.empty()) throw invalid_input(algo.id + ": " + why);
  return algo.run(g, k, opt);
}

}  // namespace kpvc
