#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "kpvc/bounds.hpp"
#include "kpvc/cover.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/generators.hpp"
#include "kpvc/graph.hpp"

namespace kpvc {

// ---------------------------------------------------------------------------
// Corpora.

inline constexpr int kMaxEnumerationOrder = 6;

/// Graph number `mask` on n labeled vertices: bit i of mask selects the i-th
/// pair in the order (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline Graph labeled_graph(int n, std::uint32_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1U) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::uint32_t labeled_graph_count(int n) {
  require(n >= 0 && n <= kMaxEnumerationOrder, "labeled enumeration supports n <= 6");
  return std::uint32_t{1} << (n * (n - 1) / 2);
}

/// All 2^(n choose 2) labeled graphs on n vertices, in mask order.
inline std::vector<Graph> enumerate_labeled_graphs(int n) {
  const std::uint32_t count = labeled_graph_count(n);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::uint32_t mask = 0; mask < count; ++mask) out.push_back(labeled_graph(n, mask));
  return out;
}

struct CorpusEntry {
  std::string id;
  Graph graph;
  BoundFlags flags;
};

struct FamilySample {
  std::string family;  // family text, e.g. "gnm(8)" or "ktree(20,3)"
  int count = 1;
  std::uint64_t seed = 1;  // instance i uses seed + i
  BoundFlags flags;
};

struct CorpusSpec {
  std::vector<int> exhaustive_orders;  // labeled enumeration for each listed n
  std::vector<FamilySample> samples;
  std::vector<int> ks{3};
  std::uint64_t algorithm_seed = 1;
  int random_order_samples = 200;
  bool run_algorithms = true;
  bool keep_rows = true;
  int jobs = 1;
  SolverCaps caps;
};

inline std::vector<CorpusEntry> build_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  for (int n : spec.exhaustive_orders) {
    const std::uint32_t count = labeled_graph_count(n);
    for (std::uint32_t mask = 0; mask < count; ++mask)
      out.push_back({"L" + std::to_string(n) + ":" + std::to_string(mask), labeled_graph(n, mask), {}});
  }
  for (const auto& s : spec.samples) {
    require(s.count >= 0, "sample count must be nonnegative");
    for (int i = 0; i < s.count; ++i) {
      const std::uint64_t seed = s.seed + static_cast<std::uint64_t>(i);
      auto fs = parse_family(s.family, seed);
      out.push_back({s.family + "#" + std::to_string(seed), generate_family(fs), s.flags});
    }
  }
  return out;
}

// Sampled random graphs n = 7..10 used next to the exhaustive corpus.
inline CorpusSpec default_sweep_spec(int per_order = 500) {
  CorpusSpec spec;
  spec.exhaustive_orders = {1, 2, 3, 4, 5, 6};
  for (int n = 7; n <= 10; ++n) spec.samples.push_back({"gnm(" + std::to_string(n) + ")", per_order, 1000u * n, {}});
  spec.ks = {3, 4, 5};
  return spec;
}

// ---------------------------------------------------------------------------
// Reports.

struct BoundCheck {
  std::string name;
  BoundKind kind = BoundKind::upper;
  Rational value;
  bool pass = true;
  bool tight = false;
};

struct AlgorithmCheck {
  std::string algorithm;
  int size = 0;
  Rational guarantee;
  bool certified = false;
  bool valid = true;
  bool guarantee_met = true;
  std::string error;
};

struct VerifyRow {
  std::size_t index = 0;
  std::string graph_id;
  int n = 0, m = 0, k = 0;
  int psi = 0;
  std::vector<BoundCheck> bounds;
  std::vector<AlgorithmCheck> algorithms;
};

struct Violation {
  std::string graph_id;
  int k = 0;
  std::string check;
  std::string detail;
};

struct TightHit {
  std::string graph_id;
  int k = 0;
  std::string bound;
};

struct VerifyTotals {
  std::int64_t graphs = 0;
  std::int64_t instances = 0;  // (graph, k) pairs
  std::int64_t bound_checks = 0;
  std::int64_t algorithm_runs = 0;
  std::int64_t uncertified_misses = 0;  // |cover| above an uncertified value
  std::int64_t residual_checks = 0;
};

struct VerifyReport {
  std::vector<VerifyRow> rows;
  std::vector<Violation> violations;
  std::vector<TightHit> tightness;
  std::map<std::string, std::int64_t> tight_counts;
  VerifyTotals totals;

  bool ok() const { return violations.empty(); }
};

namespace detail {

// FNV-1a, for per-graph seeds that do not depend on scheduling.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct InstanceResult {
  std::optional<VerifyRow> row;
  std::vector<Violation> violations;
  std::vector<TightHit> tightness;
  VerifyTotals totals;
};

inline void check_instance(const CorpusEntry& e, const GraphFacts& facts, int k, const CorpusSpec& spec,
                           InstanceResult& out) {
  const Graph& g = e.graph;
  auto violation = [&](std::string check, std::string detail) {
    out.violations.push_back({e.id, k, std::move(check), std::move(detail)});
  };
  VerifyRow row;
  row.graph_id = e.id;
  row.n = g.order();
  row.m = g.size();
  row.k = k;
  ++out.totals.instances;

  CoverCertificate cert;
  try {
    cert = psi_exact(g, k, spec.caps);
  } catch (const cap_exceeded& ex) {
    violation("psi_exact", ex.what());
    return;
  }
  row.psi = cert.size();
  if (!is_cover(g, k, cert.cover)) violation("psi_exact", "certificate is not a cover");

  auto residual = remove_vertices(g, cert.cover).graph;
  ++out.totals.residual_checks;
  if (Rational(residual.size()) > erdos_gallai_bound(residual.order(), k))
    violation("erdos_gallai", "residual has " + std::to_string(residual.size()) + " edges on " +
                                  std::to_string(residual.order()) + " vertices");
  if (cert.cover.empty() && Rational(g.size()) > erdos_gallai_bound(g.order(), k))
    violation("erdos_gallai", "P_k-free graph above n(k-2)/2 edges");

  for (const auto& rec : evaluate_bounds(facts, k, e.flags)) {
    if (!rec.applicable) continue;
    ++out.totals.bound_checks;
    BoundCheck bc{rec.name, rec.kind, *rec.value, rec.satisfied_by(row.psi), rec.tight_at(row.psi)};
    if (!bc.pass)
      violation("bound:" + rec.name, std::string(to_string(rec.kind)) + " value " + to_string(*rec.value) +
                                         " vs psi " + std::to_string(row.psi));
    if (bc.tight) out.tightness.push_back({e.id, k, rec.name});
    if (spec.keep_rows) row.bounds.push_back(std::move(bc));
  }

  if (spec.run_algorithms) {
    CoverOptions opt;
    opt.seed = spec.algorithm_seed ^ fnv1a(e.id);
    opt.max_samples = spec.random_order_samples;
    opt.xs = nm9_chain_thresholds();
    opt.caps = spec.caps;
    if (facts.forest_number) opt.forest = facts.forest_witness;
    for (const auto& algo : cover_algorithms()) {
      if (!algo.refuse(facts, k).empty()) continue;
      ++out.totals.algorithm_runs;
      AlgorithmCheck ac;
      ac.algorithm = algo.id;
      try {
        auto r = algo.run(g, k, opt);
        ac.size = r.size();
        ac.guarantee = r.guarantee_value;
        ac.certified = r.guarantee_certified;
        ac.valid = is_cover(g, k, r.cover);
        ac.guarantee_met = r.guarantee_met();
      } catch (const std::exception& ex) {
        ac.valid = false;
        ac.error = ex.what();
      }
      if (!ac.valid) violation("algorithm:" + algo.id, ac.error.empty() ? "invalid cover" : ac.error);
      else if (ac.certified && !ac.guarantee_met)
        violation("algorithm:" + algo.id, "cover " + std::to_string(ac.size) + " above certified " + to_string(ac.guarantee));
      else if (ac.guarantee < row.psi)
        violation("algorithm:" + algo.id, "guarantee " + to_string(ac.guarantee) + " below psi " + std::to_string(row.psi));
      if (ac.valid && !ac.certified && !ac.guarantee_met) ++out.totals.uncertified_misses;
      if (spec.keep_rows) row.algorithms.push_back(std::move(ac));
    }
  }
  if (spec.keep_rows) out.row = std::move(row);
}

inline std::vector<InstanceResult> check_entry(const CorpusEntry& e, const CorpusSpec& spec) {
  std::vector<InstanceResult> out(spec.ks.size());
  GraphFacts facts;
  try {
    facts = GraphFacts::of(e.graph, spec.caps);
  } catch (const std::exception& ex) {
    out[0].violations.push_back({e.id, 0, "graph_facts", ex.what()});
    return out;
  }
  for (std::size_t i = 0; i < spec.ks.size(); ++i) check_instance(e, facts, spec.ks[i], spec, out[i]);
  return out;
}

// Run `work(i)` for i in [0, count) on `jobs` threads; results are indexed, so
// the merged output does not depend on scheduling.
template <typename T, typename Work>
std::vector<T> parallel_map(std::size_t count, int jobs, Work work) {
  std::vector<T> out(count);
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(count, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = work(i);
    return out;
  }
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += static_cast<std::size_t>(jobs)) out[i] = work(i);
    });
  for (auto& th : threads) th.join();
  return out;
}

}  // namespace detail

/// Exact psi_k against every applicable bound and every cover algorithm, for
/// each corpus graph and each k. Violations are collected, never thrown.
inline VerifyReport verify_corpus(const std::vector<CorpusEntry>& corpus, const CorpusSpec& spec) {
  for (int k : spec.ks) require(k >= 2, "verify: k must be at least 2");
  require(!spec.ks.empty(), "verify: empty k list");
  auto results = detail::parallel_map<std::vector<detail::InstanceResult>>(
      corpus.size(), spec.jobs, [&](std::size_t i) { return detail::check_entry(corpus[i], spec); });
  VerifyReport report;
  report.totals.graphs = static_cast<std::int64_t>(corpus.size());
  for (std::size_t i = 0; i < results.size(); ++i)
    for (auto& r : results[i]) {
      if (r.row) {
        r.row->index = i;
        report.rows.push_back(std::move(*r.row));
      }
      for (auto& v : r.violations) report.violations.push_back(std::move(v));
      for (auto& t : r.tightness) {
        ++report.tight_counts[t.bound];
        if (spec.keep_rows) report.tightness.push_back(std::move(t));
      }
      report.totals.instances += r.totals.instances;
      report.totals.bound_checks += r.totals.bound_checks;
      report.totals.algorithm_runs += r.totals.algorithm_runs;
      report.totals.uncertified_misses += r.totals.uncertified_misses;
      report.totals.residual_checks += r.totals.residual_checks;
    }
  return report;
}

inline VerifyReport verify_all(const CorpusSpec& spec) { return verify_corpus(build_corpus(spec), spec); }

// ---------------------------------------------------------------------------
// Scans.

inline std::vector<std::string> bound_names() {
  std::vector<std::string> out;
  for (const auto& r : evaluate_bounds(GraphFacts{}, 3)) out.push_back(r.name);
  return out;
}

/// (graph, k) instances where the named bound equals psi_k exactly.
inline std::vector<TightHit> tightness_scan(const std::vector<CorpusEntry>& corpus, const std::vector<int>& ks,
                                            const std::string& bound, const SolverCaps& caps = {}) {
  auto names = bound_names();
  require(std::find(names.begin(), names.end(), bound) != names.end(), "unknown bound '" + bound + "'");
  std::vector<TightHit> out;
  for (const auto& e : corpus) {
    auto facts = GraphFacts::of(e.graph, caps);
    for (int k : ks) {
      auto records = evaluate_bounds(facts, k, e.flags);
      const BoundRecord* rec = find_bound(records, bound);
      if (!rec || !rec->applicable) continue;
      if (rec->tight_at(psi_exact(e.graph, k, caps).size())) out.push_back({e.id, k, bound});
    }
  }
  return out;
}

struct ConjectureHit {
  std::string graph_id;
  std::string conjecture;  // "planar_psi3_2n_3" or "chordal_omega_minus_1"
  int k = 0;
  int n = 0;
  int psi = 0;
  Rational bound;
  bool counterexample = false;
  bool exact = false;  // psi equals the bound
};

struct ConjectureReport {
  std::vector<ConjectureHit> counterexamples;
  std::vector<ConjectureHit> near_tight;  // within one vertex of the bound
  std::int64_t checked = 0;
};

// Planar families by construction: octahedron unions, grids, wheels, prisms,
// stacked triangulations, cycles and trees.
inline std::vector<CorpusEntry> planar_corpus(std::uint64_t seed = 1) {
  std::vector<std::string> fixed{"octahedron", "union(2*octahedron)", "union(3*octahedron)", "union(octahedron,cycle(4))",
                                 "dodecahedron"};
  for (int r = 2; r <= 4; ++r)
    for (int c = r; c * r <= 20; ++c) fixed.push_back("grid(" + std::to_string(r) + "," + std::to_string(c) + ")");
  for (int rim = 3; rim <= 15; ++rim) fixed.push_back("wheel(" + std::to_string(rim) + ")");
  for (int p = 3; p <= 9; ++p) fixed.push_back("prism(" + std::to_string(p) + ")");
  for (int n = 3; n <= 12; ++n) fixed.push_back("cycle(" + std::to_string(n) + ")");
  std::vector<CorpusEntry> out;
  for (const auto& f : fixed) out.push_back({f, generate_family(parse_family(f)), {true, false}});
  for (int n = 4; n <= 16; n += 2)
    for (std::uint64_t i = 0; i < 3; ++i) {
      const std::string f = "apollonian(" + std::to_string(n) + ")";
      out.push_back({f + "#" + std::to_string(seed + i), generate_family(parse_family(f, seed + i)), {true, false}});
    }
  for (int n = 5; n <= 15; n += 5)
    for (std::uint64_t i = 0; i < 2; ++i) {
      const std::string f = "random_tree(" + std::to_string(n) + ")";
      out.push_back({f + "#" + std::to_string(seed + i), generate_family(parse_family(f, seed + i)), {true, true}});
    }
  for (auto& e : out) e.flags.triangle_free = is_triangle_free(e.graph);
  return out;
}

inline std::vector<CorpusEntry> chordal_corpus(std::uint64_t seed = 1, int count = 40, int max_n = 16) {
  std::vector<CorpusEntry> out;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    const int n = 5 + static_cast<int>(s * 7 % static_cast<std::uint64_t>(max_n - 4));
    const int width = 1 + static_cast<int>(s % 4);
    const std::string f = i % 2 == 0 ? "ktree(" + std::to_string(n) + "," + std::to_string(width) + ")"
                                     : "interval(" + std::to_string(n) + ")";
    out.push_back({f + "#" + std::to_string(s), generate_family(parse_family(f, s)), {}});
  }
  for (int n = 2; n <= 12; ++n) {
    const std::string f = "complete(" + std::to_string(n) + ")";
    out.push_back({f, generate_family(parse_family(f)), {}});
  }
  return out;
}

/// Hunts counterexamples to psi_3 <= 2n/3 on planar graphs and to
/// psi_k <= (omega-1)/(omega+k-2) n on chordal graphs.
inline ConjectureReport conjecture_scan(const std::vector<CorpusEntry>& planar, const std::vector<CorpusEntry>& chordal,
                                        const std::vector<int>& chordal_ks = {3, 4, 5}, const SolverCaps& caps = {}) {
  ConjectureReport report;
  auto record = [&](ConjectureHit hit) {
    ++report.checked;
    hit.counterexample = hit.psi > hit.bound;
    hit.exact = hit.bound == hit.psi;
    if (hit.counterexample) report.counterexamples.push_back(hit);
    else if (hit.bound - hit.psi < 1) report.near_tight.push_back(hit);
  };
  for (const auto& e : planar) {
    const int n = e.graph.order();
    record({e.id, "planar_psi3_2n_3", 3, n, psi_exact(e.graph, 3, caps).size(), Rational(2 * n, 3)});
  }
  for (const auto& e : chordal) {
    require(is_chordal(e.graph), "conjecture_scan: chordal corpus entry " + e.id + " is not chordal");
    const int n = e.graph.order();
    const int omega = n > 0 ? clique_number(e.graph) : 0;
    for (int k : chordal_ks)
      record({e.id, "chordal_omega_minus_1", k, n, psi_exact(e.graph, k, caps).size(),
              formula::chordal_omega_conjecture(k, omega, n)});
  }
  return report;
}

struct CubicGirthRow {
  std::string graph_id;
  int n = 0, girth = 0, k = 0;
  bool applicable = false;  // girth > k
  int psi = 0;
  bool pass = true;  // psi > n/4 when applicable
};

inline std::vector<CorpusEntry> cubic_corpus() {
  std::vector<std::string> fams{"complete(4)", "complete_bipartite(3,3)", "prism(3)", "prism(4)", "prism(5)", "prism(6)",
                                "prism(8)",    "petersen",                "heawood",  "dodecahedron"};
  std::vector<CorpusEntry> out;
  for (const auto& f : fams) out.push_back({f, generate_family(parse_family(f)), {}});
  return out;
}

/// For 3-regular graphs of girth greater than k, psi_k must exceed n/4.
inline std::vector<CubicGirthRow> cubic_girth_check(const std::vector<CorpusEntry>& corpus, const std::vector<int>& ks,
                                                    const SolverCaps& caps = {}) {
  std::vector<CubicGirthRow> out;
  for (const auto& e : corpus) {
    require(is_regular(e.graph) && e.graph.max_degree() == 3, "cubic_girth_check: " + e.id + " is not 3-regular");
    const int girth = kpvc::girth(e.graph);
    for (int k : ks) {
      CubicGirthRow row{e.id, e.graph.order(), girth, k, girth > k, 0, true};
      if (row.applicable) {
        row.psi = psi_exact(e.graph, k, caps).size();
        row.pass = 4 * row.psi > row.n;
      }
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace kpvc
