#include <gtest/gtest.h>

#include "kpvc/bounds.hpp"
#include "kpvc/exact.hpp"
#include "kpvc/generators.hpp"
#include "kpvc/graph_io.hpp"
#include "kpvc/harness.hpp"
#include "support/oracles.hpp"

using namespace kpvc;

namespace {

Graph fam(const std::string& text, std::uint64_t seed = 1) { return generate_family(parse_family(text, seed)); }

BoundRecord get(const std::vector<BoundRecord>& recs, const std::string& name) {
  const BoundRecord* r = find_bound(recs, name);
  if (!r) throw std::runtime_error("missing record " + name);
  return *r;
}

}  // namespace

TEST(FeasiblePairs, ChainFromFourNinthsMatchesPublishedList) {
  const std::vector<std::pair<Rational, Rational>> expected{
      {frac(11, 21), frac(5, 63)}, {frac(7, 12), frac(5, 84)},  {frac(17, 27), frac(5, 108)}, {frac(2, 3), frac(1, 27)},
      {frac(23, 33), frac(1, 33)}, {frac(13, 18), frac(5, 198)}, {frac(29, 39), frac(5, 234)}, {frac(16, 21), frac(5, 273)},
      {frac(7, 9), frac(1, 63)},   {frac(19, 24), frac(1, 72)}};
  auto chain = pair_chain(nm9_pair(), nm9_chain_thresholds());
  ASSERT_EQ(chain.size(), 11u);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(chain[i + 1].a, expected[i].first) << i;
    EXPECT_EQ(chain[i + 1].b, expected[i].second) << i;
    EXPECT_EQ(chain[i + 1].provenance.size(), i + 1);
    EXPECT_EQ(chain[i + 1].provenance.back().x, static_cast<int>(i) + 5);
  }
}

TEST(FeasiblePairs, StepFormulaByHand) {
  // From (1/4, 1/4) with x = 3: a' = 1/4 + 3/4 - 3(1)/5 = 2/5, b' = (2 - 1/2 - 3/4)/5 = 3/20.
  auto p = pair_step(make_pair(3, frac(1, 4), frac(1, 4)), 3);
  EXPECT_EQ(p.a, frac(2, 5));
  EXPECT_EQ(p.b, frac(3, 20));
  EXPECT_EQ(p.provenance.back().y, frac(3, 20));
}

TEST(FeasiblePairs, AdmissibilityWindow) {
  auto base = nm9_pair();
  // (1 - a - b)/b = 4, (2 - 2a)/b = 10
  EXPECT_FALSE(pair_step_admissible(base, 3));
  EXPECT_TRUE(pair_step_admissible(base, 4));
  EXPECT_TRUE(pair_step_admissible(base, 10));
  EXPECT_FALSE(pair_step_admissible(base, 11));
  EXPECT_THROW(pair_step(base, 3), invalid_input);
  EXPECT_THROW(pair_step(base, 11), invalid_input);
  EXPECT_THROW(pair_step(make_pair(3, 1, 0), 1), invalid_input);
  EXPECT_THROW(make_pair(3, -1, 1), invalid_input);
}

TEST(FeasiblePairs, GeneralStepReducesToPlainStep) {
  auto base = nm9_pair();
  for (int x = 5; x <= 9; ++x) {
    auto plain = pair_step(base, x);
    Rational q = (base.a + base.b + base.b * x - 1) / (x + 2);
    auto general = pair_step_general(base, q, 2 * q, x);
    EXPECT_EQ(general.a, plain.a);
    EXPECT_EQ(general.b, plain.b);
    EXPECT_TRUE(general.provenance.back().general);
  }
}

TEST(FeasiblePairs, GeneralStepConstraints) {
  auto base = nm9_pair();
  EXPECT_THROW(pair_step_general(base, frac(1, 100), frac(3, 100), 5), invalid_input);  // w > 2q
  EXPECT_THROW(pair_step_general(base, frac(1, 5), frac(1, 10), 5), invalid_input);    // a + qx >= 1
  EXPECT_THROW(pair_step_general(base, frac(1, 50), frac(1, 25), 0), invalid_input);
  auto ok = pair_step_general(base, frac(1, 100), frac(1, 100), 5);
  EXPECT_EQ(ok.a, frac(4, 9) + frac(5, 100));
  EXPECT_EQ(ok.b, frac(1, 9) - frac(1, 100));
}

TEST(FeasiblePairs, ChainValuesUpperBoundPsi3OnSmallGraphs) {
  auto chain = pair_chain(nm9_pair(), nm9_chain_thresholds());
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      int psi = oracle::psi(g, 3);
      for (const auto& p : chain) ASSERT_LE(Rational(psi), p.value(n, g.size()));
    }
}

TEST(Formulas, ErdosGallai) {
  EXPECT_EQ(erdos_gallai_bound(10, 4), Rational(10));
  EXPECT_EQ(erdos_gallai_bound(7, 3), frac(7, 2));
  EXPECT_EQ(erdos_gallai_bound(5, 2), Rational(0));
  EXPECT_THROW(erdos_gallai_bound(5, 1), invalid_input);
}

TEST(Formulas, MaxDegreeCoefficient) {
  for (int D : {2, 4, 6, 8, 10}) EXPECT_EQ(formula::max_degree_coefficient(3, D), Rational(D, D + 2)) << D;
  EXPECT_EQ(formula::max_degree_coefficient(4, 4), frac(10, 16));
  EXPECT_EQ(formula::max_degree_coefficient(3, 5), frac(12, 16));
  EXPECT_EQ(formula::max_degree_coefficient(5, 7), frac(24, 32));
  EXPECT_THROW(formula::max_degree_coefficient(3, 3), invalid_input);
  EXPECT_THROW(formula::max_degree_coefficient(2, 4), invalid_input);
  EXPECT_EQ(formula::admissible_degree_cap(0), 2);
  EXPECT_EQ(formula::admissible_degree_cap(3), 4);
  EXPECT_EQ(formula::admissible_degree_cap(7), 7);
}

TEST(Formulas, Psi3MaxDegree) {
  EXPECT_EQ(formula::psi3_max_degree_coefficient(1), Rational(0));
  EXPECT_EQ(formula::psi3_max_degree_coefficient(2), frac(1, 2));
  EXPECT_EQ(formula::psi3_max_degree_coefficient(3), frac(1, 2));
  EXPECT_EQ(formula::psi3_max_degree_coefficient(4), frac(2, 3));
  EXPECT_EQ(formula::psi3_max_degree_coefficient(5), frac(2, 3));
}

TEST(Formulas, ChordalAndForest) {
  EXPECT_EQ(formula::chordal_chi(3, 3, 9), Rational(5));
  EXPECT_EQ(formula::chordal_chi(3, 1, 6), Rational(2));  // treated as chi = 2
  EXPECT_EQ(formula::chordal_omega(3, 5, 7), Rational(5));
  EXPECT_EQ(formula::chordal_omega_conjecture(3, 3, 8), Rational(4));
  EXPECT_EQ(formula::forest_bound(6, 3, 3), Rational(4));
  EXPECT_EQ(formula::forest_bound(5, 3, 4), frac(7, 3));
  EXPECT_EQ(formula::halving11(6, 23), frac(23 * 23, 28));
}

TEST(Catalog, CycleFourAtK3) {
  auto recs = evaluate_bounds(fam("cycle(4)"), 3);
  EXPECT_EQ(*get(recs, "psi3_n_plus_m_over_4").value, Rational(2));
  EXPECT_EQ(*get(recs, "psi3_m_over_2").value, Rational(2));
  EXPECT_EQ(*get(recs, "psi3_4n_plus_m_over_9").value, frac(20, 9));
  EXPECT_EQ(*get(recs, "maxdeg2_n").value, Rational(2));
  EXPECT_EQ(*get(recs, "order_minus_k_plus_1").value, Rational(2));
  EXPECT_FALSE(get(recs, "forest_n_over_k").applicable);
  EXPECT_EQ(get(recs, "forest_n_over_k").reason, "not a forest");
  EXPECT_FALSE(get(recs, "chordal_chi").applicable);
  EXPECT_EQ(*get(recs, "regular_lower").value, frac(4, 3));
  EXPECT_EQ(*get(recs, "forest_number").value, Rational(2));
  for (const auto& r : recs) EXPECT_TRUE(r.satisfied_by(2)) << r.name;
}

TEST(Catalog, OctahedronValues) {
  auto recs = evaluate_bounds(fam("octahedron"), 3, {true, false});
  EXPECT_EQ(*get(recs, "psi3_n_plus_m_over_4").value, frac(9, 2));
  EXPECT_EQ(*get(recs, "forest_number").value, Rational(4));
  EXPECT_EQ(*get(recs, "planar_psi3_11_15").value, frac(22, 5));
  EXPECT_EQ(*get(recs, "maxdeg_k").value, Rational(4));
  EXPECT_FALSE(get(recs, "planar_tf_psi3_2n_3").applicable);
  EXPECT_EQ(*get(recs, "regular_lower").value, frac(18, 7));
}

TEST(Catalog, PetersenLowerBounds) {
  auto p = fam("petersen");
  auto r3 = evaluate_bounds(p, 3);
  EXPECT_EQ(*get(r3, "regular_lower").value, Rational(4));
  EXPECT_TRUE(get(r3, "regular_lower").tight_at(4));
  auto r4 = evaluate_bounds(p, 4);
  const auto strict = get(r4, "cubic_girth_strict");
  ASSERT_TRUE(strict.applicable);
  EXPECT_TRUE(strict.strict);
  EXPECT_EQ(*strict.value, frac(5, 2));
  EXPECT_FALSE(strict.satisfied_by(2));
  EXPECT_TRUE(strict.satisfied_by(3));
  EXPECT_FALSE(get(evaluate_bounds(p, 5), "cubic_girth_strict").applicable);
}

TEST(Catalog, FixedKRecordsCarryToLargerK) {
  auto recs = evaluate_bounds(fam("cycle(6)"), 5);
  const auto r = get(recs, "psi3_n_plus_m_over_4");
  EXPECT_TRUE(r.applicable);
  EXPECT_TRUE(r.via_smaller_k(5));
  EXPECT_EQ(r.reason, "via psi_k <= psi_3");
  const auto psi4 = get(evaluate_bounds(fam("cycle(6)"), 3), "psi4_n_plus_3m_over_10");
  EXPECT_FALSE(psi4.applicable);
  EXPECT_EQ(psi4.reason, "needs k >= 4");
}

TEST(Catalog, PlanarGates) {
  auto k5 = fam("complete(5)");  // m = 10 > 3n - 6 = 9
  EXPECT_FALSE(get(evaluate_bounds(k5, 3, {true, false}), "planar_psi3_11_15").applicable);
  EXPECT_FALSE(get(evaluate_bounds(fam("cycle(5)"), 3), "planar_psi3_11_15").applicable);
  auto c5 = evaluate_bounds(fam("cycle(5)"), 3, {true, true});
  EXPECT_EQ(*get(c5, "planar_tf_psi3_2n_3").value, frac(10, 3) - frac(4, 9));
  EXPECT_FALSE(get(evaluate_bounds(fam("octahedron"), 3, {true, true}), "planar_tf_psi3_2n_3").applicable);
}

TEST(Catalog, DegreeSequenceNeedsNoIsolates) {
  auto recs = evaluate_bounds(fam("union(path(3),empty(1))"), 3);
  EXPECT_FALSE(get(recs, "degree_sequence").applicable);
  auto p3 = evaluate_bounds(fam("path(3)"), 3);
  // 3 - (3/2)(1/2 + 1/3 + 1/2) = 1
  EXPECT_EQ(*get(p3, "degree_sequence").value, Rational(1));
}

TEST(Catalog, ChordalRecords) {
  auto recs = evaluate_bounds(fam("complete(5)"), 3);
  EXPECT_EQ(*get(recs, "chordal_omega").value, frac(25, 7));
  EXPECT_EQ(*get(recs, "chordal_chi").value, Rational(5) - frac(2, 5) * frac(2, 3) * 5);
  EXPECT_TRUE(get(recs, "chordal_omega").satisfied_by(3));
}

TEST(Catalog, HalvingNeedsDegreeEleven) {
  auto g = fam("star(11)");
  auto r6 = evaluate_bounds(g, 6);
  EXPECT_EQ(*get(r6, "maxdeg11_halving").value, frac(23 * 12, 28));
  EXPECT_EQ(get(evaluate_bounds(g, 5), "maxdeg11_halving").reason, "needs k >= 6");
  EXPECT_FALSE(get(evaluate_bounds(fam("star(10)"), 6), "maxdeg11_halving").applicable);
}

TEST(Catalog, OrderIsStable) {
  auto a = evaluate_bounds(fam("petersen"), 3);
  auto b = evaluate_bounds(fam("cycle(4)"), 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].name, b[i].name);
  EXPECT_EQ(a.front().name, "order_minus_k_plus_1");
}

TEST(Catalog, EveryUpperBoundHoldsOnSmallGraphs) {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : enumerate_labeled_graphs(n))
      for (int k = 2; k <= 5; ++k) {
        int psi = oracle::psi(g, k);
        for (const auto& r : evaluate_bounds(g, k)) ASSERT_TRUE(r.satisfied_by(psi)) << r.name << "\n" << write_graph(g);
      }
}

TEST(Table, MatchesPublishedCells) {
  auto rows = table_chordal({2, 3, 4, 5, 6}, {2, 3, 4, 5});
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][2].by_chi, frac(2, 3));
  EXPECT_EQ(rows[1][2].by_omega, frac(2, 3));
  EXPECT_EQ(rows[1][2].best, BestMarker::both);
  EXPECT_EQ(rows[2][1].best, BestMarker::both);
  EXPECT_EQ(rows[0][3].best, BestMarker::left);
  EXPECT_EQ(rows[3][1].by_chi, frac(7, 15));
  EXPECT_EQ(rows[3][1].best, BestMarker::right);
  EXPECT_EQ(rows[4][3].by_omega, frac(1, 2));
  EXPECT_THROW(table_chordal({1}, {2}), invalid_input);
  EXPECT_THROW(table_chordal({3}, {1}), invalid_input);
}
