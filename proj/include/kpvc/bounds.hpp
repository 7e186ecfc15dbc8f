#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kpvc/chordal.hpp"
#include "kpvc/error.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/rational.hpp"

namespace kpvc {

// ---------------------------------------------------------------------------
// Feasible pairs: psi_k(G) <= a*n + b*m for every graph G.

struct PairStep {
  Rational parent_a, parent_b;
  int x = 0;
  Rational q, w;
  Rational y;  // x(a + b + bx - 1)/(x + 2); zero for general steps
  bool general = false;
};

struct FeasiblePair {
  int k = 3;
  Rational a, b;
  std::vector<PairStep> provenance;

  Rational value(int n, int m) const { return a * n + b * m; }
};

inline FeasiblePair make_pair(int k, Rational a, Rational b) {
  require(a >= 0 && b >= 0, "feasible pair coefficients must be nonnegative");
  return FeasiblePair{k, std::move(a), std::move(b), {}};
}

// (1 - a - b)/b <= x <= (2 - 2a)/b
inline bool pair_step_admissible(const FeasiblePair& p, int x) {
  if (p.b <= 0 || x <= 0) return false;
  return (1 - p.a - p.b) / p.b <= x && x <= (2 - 2 * p.a) / p.b;
}

/// One peeling step: from a feasible (a, b) and threshold x, the pair
///   a' = a + bx - x(1 + b - a)/(x + 2),  b' = (2 - 2a - bx)/(x + 2).
inline FeasiblePair pair_step(const FeasiblePair& p, int x) {
  require(p.b > 0, "pair_step: b must be positive");
  require(x > 0, "pair_step: x must be a positive integer");
  require((1 - p.a - p.b) / p.b <= x, "pair_step: x below (1-a-b)/b");
  require(x <= (2 - 2 * p.a) / p.b, "pair_step: x above (2-2a)/b");
  FeasiblePair out;
  out.k = p.k;
  out.a = p.a + p.b * x - Rational(x) * (1 + p.b - p.a) / (x + 2);
  out.b = (2 - 2 * p.a - p.b * x) / (x + 2);
  out.provenance = p.provenance;
  PairStep step;
  step.parent_a = p.a;
  step.parent_b = p.b;
  step.x = x;
  step.y = Rational(x) * (p.a + p.b + p.b * x - 1) / (x + 2);
  step.q = step.y / x;
  step.w = 2 * step.q;
  out.provenance.push_back(step);
  return out;
}

/// The general recursion (a', b') = (a + qx, b - w), valid when
///   w <= 2q,  a + qx < 1,  w <= ((a + b - 1) + (q + b)x)/(x + 1).
/// pair_step is the case q = (a + b + bx - 1)/(x + 2), w = 2q.
inline FeasiblePair pair_step_general(const FeasiblePair& p, const Rational& q, const Rational& w, int x) {
  require(x > 0, "pair_step_general: x must be a positive integer");
  require(q >= 0 && w >= 0, "pair_step_general: q and w must be nonnegative");
  require(w <= 2 * q, "pair_step_general: w exceeds 2q");
  require(p.a + q * x < 1, "pair_step_general: a + qx must stay below 1");
  require(w <= ((p.a + p.b - 1) + (q + p.b) * x) / (x + 1), "pair_step_general: w above ((a+b-1)+(q+b)x)/(x+1)");
  FeasiblePair out;
  out.k = p.k;
  out.a = p.a + q * x;
  out.b = p.b - w;
  ensure(out.b >= 0, "pair_step_general produced negative b");
  out.provenance = p.provenance;
  PairStep step;
  step.parent_a = p.a;
  step.parent_b = p.b;
  step.x = x;
  step.q = q;
  step.w = w;
  step.general = true;
  out.provenance.push_back(step);
  return out;
}

inline std::vector<FeasiblePair> pair_chain(const FeasiblePair& base, const std::vector<int>& xs) {
  std::vector<FeasiblePair> chain{base};
  for (int x : xs) chain.push_back(pair_step(chain.back(), x));
  return chain;
}

// psi_3 <= (4n + m)/9 and the ten pairs obtained from it with x = 5..14.
inline FeasiblePair nm9_pair() { return make_pair(3, frac(4, 9), frac(1, 9)); }

inline std::vector<int> nm9_chain_thresholds() { return {5, 6, 7, 8, 9, 10, 11, 12, 13, 14}; }

// ---------------------------------------------------------------------------
// Closed-form values shared by the bound catalog and the cover constructions.

namespace formula {

inline Rational erdos_gallai(int n, int k) {
  require(n >= 0 && k >= 2, "erdos_gallai_bound: need n >= 0, k >= 2");
  return Rational(n * (k - 2), 2);
}

// Coefficient of n for graphs of maximum degree at most D (D = 2 or D >= 4).
inline Rational max_degree_coefficient(int k, int D) {
  require(k >= 3, "max-degree bound needs k >= 3");
  require(D == 2 || D >= 4, "max-degree bound needs D = 2 or D >= 4");
  if (D % 2 == 0) return Rational((k - 1) * (D - 2) + 4, (k - 1) * D + 4);
  return Rational((k - 1) * (D - 3) + 8, (k - 1) * (D - 1) + 8);
}

// Smallest admissible cap D >= max(actual, 2); 3 is excluded.
inline int admissible_degree_cap(int actual) {
  if (actual <= 2) return 2;
  return actual == 3 ? 4 : actual;
}

// ceil((D-1)/2) / ceil((D+1)/2)
inline Rational psi3_max_degree_coefficient(int D) {
  if (D <= 0) return 0;
  return Rational(D / 2, (D + 2) / 2);  // ceil((D-1)/2) = floor(D/2), ceil((D+1)/2) = floor((D+2)/2)
}

inline Rational chordal_chi(int k, int chi, int n) {
  chi = std::max(chi, 2);
  return (1 - Rational(2, chi) * Rational(k - 1, k)) * n;
}

inline Rational chordal_omega(int k, int omega, int n) { return Rational(omega, omega + k - 1) * n; }

inline Rational chordal_omega_conjecture(int k, int omega, int n) {
  return Rational(std::max(omega - 1, 0), omega + k - 2) * n;
}

inline Rational degree_sequence_mass(const Graph& g, int k) {
  Rational s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += Rational(1, 1 + g.degree(v));
  return Rational(2 * k - 3, k - 1) * s;
}

inline Rational forest_bound(int n, int k, const Rational& forest_size) {
  return n - Rational(k - 1, k) * forest_size;
}

inline Rational halving11(int k, int n) { return Rational(3 * k + 5, 4 * k + 4) * n; }

}  // namespace formula

inline Rational erdos_gallai_bound(int n, int k) { return formula::erdos_gallai(n, k); }

// ---------------------------------------------------------------------------
// Bound catalog.

enum class BoundKind { upper, lower };

inline const char* to_string(BoundKind k) { return k == BoundKind::upper ? "upper" : "lower"; }

struct BoundRecord {
  std::string name;
  BoundKind kind = BoundKind::upper;
  std::optional<Rational> value;  // present iff applicable
  bool applicable = false;
  std::string reason;
  std::optional<std::string> certified_algorithm;
  int proven_for_k = 0;  // nonzero for values proven at one fixed k
  bool strict = false;   // lower bound holds strictly

  bool via_smaller_k(int k) const { return applicable && proven_for_k != 0 && proven_for_k < k; }

  // Does the exact value satisfy this record? Inapplicable records always pass.
  bool satisfied_by(int psi) const {
    if (!applicable) return true;
    if (kind == BoundKind::upper) return psi <= *value;
    return strict ? *value < psi : *value <= psi;
  }

  bool tight_at(int psi) const { return applicable && *value == psi; }
};

struct BoundFlags {
  bool planar = false;
  bool triangle_free = false;
};

/// Everything the catalog needs about a graph, computed once.
struct GraphFacts {
  int n = 0, m = 0;
  int min_degree = 0, max_degree = 0;
  bool isolate_free = false;
  bool forest = false;
  bool chordal = false;
  int omega = 0, chi = 0;  // chordal only
  bool regular = false;
  int girth = 0;
  std::optional<int> forest_number;
  VertexSet forest_witness;
  Rational degree_mass_unit;  // sum 1/(1+d(v))

  static GraphFacts of(const Graph& g, const SolverCaps& caps = {}) {
    GraphFacts f;
    f.n = g.order();
    f.m = g.size();
    f.min_degree = g.min_degree();
    f.max_degree = g.max_degree();
    f.isolate_free = f.n > 0 && f.min_degree >= 1;
    f.forest = is_forest(g);
    f.chordal = is_chordal(g);
    if (f.chordal && f.n > 0) {
      f.omega = clique_number(g);
      f.chi = chordal_color(g).count;
    }
    f.regular = is_regular(g);
    f.girth = kpvc::girth(g);
    if (f.n <= caps.forest) {
      auto a = forest_number_exact(g, caps);
      f.forest_number = a.value;
      f.forest_witness = std::move(a.forest);
    }
    for (Vertex v = 0; v < f.n; ++v) f.degree_mass_unit += Rational(1, 1 + g.degree(v));
    return f;
  }
};

// Which k a record covers: a formula valid for every k >= min_k, or a value
// proven at one fixed k that carries over to larger k through psi_k <= psi_{k0}.
struct BoundScope {
  int min_k = 2;
  bool fixed = false;
};

inline BoundScope from_k(int k0) { return {k0, false}; }
inline BoundScope at_k(int k0) { return {k0, true}; }

namespace detail {

class Catalog {
 public:
  explicit Catalog(int k) : k_(k) {}

  void upper(std::string name, BoundScope scope, bool ok, const std::string& why_not, const std::function<Rational()>& value,
             std::optional<std::string> algorithm = std::nullopt, std::string note = "") {
    add(std::move(name), BoundKind::upper, scope, ok, why_not, value, std::move(algorithm), std::move(note), false);
  }

  void lower(std::string name, bool ok, const std::string& why_not, const std::function<Rational()>& value, bool strict = false) {
    add(std::move(name), BoundKind::lower, from_k(2), ok, why_not, value, std::nullopt, "", strict);
  }

  std::vector<BoundRecord> take() { return std::move(out_); }

 private:
  void add(std::string name, BoundKind kind, BoundScope scope, bool ok, const std::string& why_not,
           const std::function<Rational()>& value, std::optional<std::string> algorithm, std::string note, bool strict) {
    BoundRecord r;
    r.name = std::move(name);
    r.kind = kind;
    r.proven_for_k = scope.fixed ? scope.min_k : 0;
    r.strict = strict;
    if (ok && scope.min_k > k_) {
      ok = false;
      r.reason = "needs k >= " + std::to_string(scope.min_k);
    } else if (!ok) {
      r.reason = why_not;
    }
    r.applicable = ok;
    if (ok) {
      r.value = value();
      r.certified_algorithm = std::move(algorithm);
      r.reason = std::move(note);
      if (r.via_smaller_k(k_)) {
        if (!r.reason.empty()) r.reason += "; ";
        r.reason += "via psi_k <= psi_" + std::to_string(scope.min_k);
      }
    }
    out_.push_back(std::move(r));
  }

  int k_;
  std::vector<BoundRecord> out_;
};

}  // namespace detail

/// Every closed-form bound in the catalog, applicable or not, in a fixed order.
inline std::vector<BoundRecord> evaluate_bounds(const GraphFacts& f, int k, const BoundFlags& flags = {}) {
  require(k >= 2, "evaluate_bounds: k must be at least 2");
  const int n = f.n, m = f.m;
  const int D = f.max_degree;
  detail::Catalog c(k);
  using R = Rational;

  c.upper("order_minus_k_plus_1", from_k(2), true, "", [&] { return R(std::max(0, n - k + 1)); });
  c.upper("forest_n_over_k", from_k(2), f.forest, "not a forest", [&] { return R(n, k); }, "tree_exact");

  // psi_3 bounds in terms of n and m.
  c.upper("psi3_2n_plus_m_over_6", at_k(3), true, "", [&] { return R(2 * n + m, 6); });
  c.upper("psi3_m_over_2", at_k(3), true, "", [&] { return R(m, 2); }, "edge_peel_psi3");
  c.upper("psi3_subcubic_n_over_2", at_k(3), D <= 3, "max degree above 3", [&] { return R(n, 2); }, "subcubic_psi3");
  c.upper("psi3_ell", at_k(3), n > 0 && m > 0, "needs m >= 1", [&] {
    int ell = static_cast<int>(ceil_of(R(m, n))) - 1;
    return R(ell, ell + 2) * n + R(m, (ell + 1) * (ell + 2));
  });
  c.upper("psi3_n_plus_m_over_4", at_k(3), true, "", [&] { return R(n + m, 4); }, "nm4_psi3");
  c.upper("psi3_4n_plus_m_over_9", at_k(3), true, "", [&] { return R(4 * n + m, 9); });
  {
    auto chain = pair_chain(nm9_pair(), nm9_chain_thresholds());
    for (std::size_t i = 1; i < chain.size(); ++i) {
      const auto& p = chain[i];
      c.upper("psi3_pair_x" + std::to_string(p.provenance.back().x), at_k(3), true, "", [&] { return p.value(n, m); }, std::nullopt,
              to_string(p.a) + " n + " + to_string(p.b) + " m");
    }
  }

  // Degree-based.
  c.upper("maxdeg2_n", from_k(3), D <= 2, "max degree above 2", [&] { return R(2 * n, k + 1); }, "low_degree");
  c.upper("maxdeg2_m", from_k(3), D <= 2, "max degree above 2", [&] { return R(2 * m, k + 1); }, "low_degree");
  c.upper("psi4_n_plus_3m_over_10", at_k(4), true, "", [&] { return R(n + 3 * m, 10); }, "psi4");
  c.upper("psi3_maxdeg", at_k(3), true, "", [&] { return formula::psi3_max_degree_coefficient(D) * n; });
  {
    const int cap = formula::admissible_degree_cap(D);
    c.upper("maxdeg_k", from_k(3), true, "", [&] { return formula::max_degree_coefficient(k, cap) * n; }, "bounded_degree",
            "degree cap " + std::to_string(cap));
  }
  c.upper("maxdeg11_halving", from_k(6), D == 11, "max degree is not 11", [&] { return formula::halving11(k, n); }, "halving");
  c.upper("degree_sequence", from_k(3), f.isolate_free, "isolated vertex present",
          [&] { return n - R(2 * k - 3, k - 1) * f.degree_mass_unit; }, "random_order");
  c.upper("average_degree", from_k(3), f.isolate_free, "isolated vertex present", [&] {
    R avg(2 * m, n);
    return (1 - R(2 * k - 3, k - 1) / (avg + 1)) * n;
  });

  // Chordal.
  c.upper("chordal_chi", from_k(2), f.chordal, "not chordal", [&] { return formula::chordal_chi(k, f.chi, n); }, "chordal_classes",
          f.chi < 2 ? "edgeless; evaluated with chi = 2" : "");
  c.upper("chordal_omega", from_k(3), f.chordal && n > 0, "not chordal", [&] { return formula::chordal_omega(k, f.omega, n); },
          "chordal_decomp");

  // Forest number.
  c.upper("forest_number", from_k(2), f.forest_number.has_value(), "forest number above solver cap",
          [&] { return formula::forest_bound(n, k, R(*f.forest_number)); }, "from_forest");

  // Planar, caller-asserted; refuse when Euler's edge bound is violated.
  const bool planar_ok = flags.planar && n > 0 && (n < 3 || m <= 3 * n - 6);
  const std::string planar_why = !flags.planar ? "not asserted planar" : "fails m <= 3n - 6 (or empty)";
  c.upper("planar_psi3_11_15", at_k(3), planar_ok, planar_why, [&] { return R(11, 15) * n; });
  c.upper("planar_psi6_2_3", at_k(6), planar_ok, planar_why, [&] { return R(2, 3) * n; });
  c.upper("planar_forest_borodin", from_k(2), planar_ok, planar_why, [&] { return formula::forest_bound(n, k, R(2, 5) * n); });
  const bool tf_ok = planar_ok && flags.triangle_free && (n < 3 || m <= 2 * n - 4);
  const std::string tf_why = !flags.triangle_free ? "not asserted triangle-free planar" : "fails m <= 2n - 4";
  c.upper("planar_tf_psi3_2n_3", at_k(3), tf_ok, tf_why, [&] { return R(2, 3) * n - R(4, 9); });
  c.upper("planar_tf_psi3_121_192", at_k(3), tf_ok, tf_why, [&] { return R(121, 192) * n - R(3, 8); });
  c.upper("planar_tf_forest_kls", from_k(2), tf_ok, tf_why,
          [&] { return formula::forest_bound(n, k, R(71, 128) * n + R(9, 16)); });

  // Lower bounds.
  const int d = f.min_degree;
  c.lower("regular_lower", k >= 3 && f.regular && d >= k - 1, "needs k >= 3 and a d-regular graph with d >= k-1",
          [&] { return R(d - k + 2, 2 * d - k + 2) * n; });
  c.lower("minmax_degree_lower", k >= 3 && n > 0 && d >= k - 1, "needs k >= 3 and min degree >= k-1",
          [&] { return R(d - k + 2, d + D - k + 2) * n; });
  c.lower("cubic_girth_strict", k >= 3 && f.regular && d == 3 && f.girth > k, "needs a 3-regular graph with girth > k",
          [&] { return R(n, 4); }, true);
  return c.take();
}

inline std::vector<BoundRecord> evaluate_bounds(const Graph& g, int k, const BoundFlags& flags = {},
                                                const SolverCaps& caps = {}) {
  return evaluate_bounds(GraphFacts::of(g, caps), k, flags);
}

inline const BoundRecord* find_bound(const std::vector<BoundRecord>& records, const std::string& name) {
  for (const auto& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Chordal comparison table: 1 - (2/w)(k-1)/k against w/(w+k-1).

enum class BestMarker { left, right, both };

inline const char* to_string(BestMarker b) {
  switch (b) {
    case BestMarker::left: return "left";
    case BestMarker::right: return "right";
    case BestMarker::both: return "both";
  }
  return "?";
}

struct ChordalTableCell {
  int k = 0, omega = 0;
  Rational by_chi, by_omega;
  BestMarker best = BestMarker::both;
};

inline std::vector<std::vector<ChordalTableCell>> table_chordal(const std::vector<int>& ks, const std::vector<int>& omegas) {
  std::vector<std::vector<ChordalTableCell>> rows;
  for (int k : ks) {
    require(k >= 2, "table_chordal: k must be at least 2");
    auto& row = rows.emplace_back();
    for (int w : omegas) {
      require(w >= 2, "table_chordal: omega must be at least 2");
      ChordalTableCell cell{k, w, 1 - Rational(2, w) * Rational(k - 1, k), Rational(w, w + k - 1)};
      cell.best = cell.by_chi < cell.by_omega ? BestMarker::left
                  : cell.by_omega < cell.by_chi ? BestMarker::right
                                                : BestMarker::both;
      row.push_back(cell);
    }
  }
  return rows;
}

}  // namespace kpvc
