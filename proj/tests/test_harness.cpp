#include <gtest/gtest.h>

#include "kpvc/harness.hpp"
#include "kpvc/report_io.hpp"
#include "support/oracles.hpp"

using namespace kpvc;

TEST(Enumeration, CountsAndBitOrder) {
  EXPECT_EQ(labeled_graph_count(0), 1u);
  EXPECT_EQ(labeled_graph_count(4), 64u);
  EXPECT_EQ(labeled_graph_count(6), 32768u);
  EXPECT_THROW(labeled_graph_count(7), invalid_input);
  Graph g = labeled_graph(4, 0b000001);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_EQ(labeled_graph(4, 0b001000), Graph(4, {{1, 2}}));
  EXPECT_EQ(labeled_graph(4, 0b100000), Graph(4, {{2, 3}}));
  EXPECT_EQ(enumerate_labeled_graphs(5).size(), 1024u);
}

TEST(Corpus, IdsAndSeeds) {
  CorpusSpec spec;
  spec.exhaustive_orders = {3};
  spec.samples = {{"gnm(7)", 3, 70, {}}};
  auto corpus = build_corpus(spec);
  ASSERT_EQ(corpus.size(), 11u);
  EXPECT_EQ(corpus[0].id, "L3:0");
  EXPECT_EQ(corpus[7].id, "L3:7");
  EXPECT_EQ(corpus[8].id, "gnm(7)#70");
  EXPECT_EQ(corpus[10].id, "gnm(7)#72");
  EXPECT_EQ(corpus[9].graph, generate_family(parse_family("gnm(7)", 71)));
}

TEST(Corpus, DefaultSweepShape) {
  auto spec = default_sweep_spec(5);
  EXPECT_EQ(spec.exhaustive_orders, (std::vector<int>{1, 2, 3, 4, 5, 6}));
  EXPECT_EQ(spec.ks, (std::vector<int>{3, 4, 5}));
  ASSERT_EQ(spec.samples.size(), 4u);
  EXPECT_EQ(spec.samples[0].family, "gnm(7)");
  EXPECT_EQ(spec.samples[3].count, 5);
}

TEST(Verify, SmallExhaustiveCorpusIsClean) {
  CorpusSpec spec;
  spec.exhaustive_orders = {1, 2, 3, 4, 5};
  spec.ks = {3, 4};
  auto report = verify_all(spec);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.totals.graphs, 1 + 2 + 8 + 64 + 1024);
  EXPECT_EQ(report.totals.instances, 2 * report.totals.graphs);
  EXPECT_GT(report.totals.algorithm_runs, 0);
  EXPECT_GT(report.totals.bound_checks, 0);
  for (const auto& row : report.rows) ASSERT_EQ(row.psi, oracle::psi(labeled_graph(row.n, static_cast<std::uint32_t>(std::stoul(row.graph_id.substr(row.graph_id.find(':') + 1)))), row.k));
}

TEST(Verify, DetectsCorruptedBound) {
  // A row whose psi is forced above an upper bound must register as failing.
  BoundRecord r{"fake", BoundKind::upper, Rational(1), true, "", std::nullopt, 0, false};
  EXPECT_FALSE(r.satisfied_by(2));
  BoundRecord s{"fake_lower", BoundKind::lower, Rational(2), true, "", std::nullopt, 0, true};
  EXPECT_FALSE(s.satisfied_by(2));
  EXPECT_TRUE(s.satisfied_by(3));
}

TEST(Verify, ParallelMatchesSerial) {
  CorpusSpec spec;
  spec.samples = {{"gnm(8)", 20, 5, {}}};
  spec.ks = {3, 4};
  auto serial = verify_all(spec);
  spec.jobs = 3;
  auto parallel = verify_all(spec);
  ASSERT_EQ(serial.rows.size(), parallel.rows.size());
  for (std::size_t i = 0; i < serial.rows.size(); ++i) {
    EXPECT_EQ(serial.rows[i].graph_id, parallel.rows[i].graph_id);
    EXPECT_EQ(serial.rows[i].psi, parallel.rows[i].psi);
    ASSERT_EQ(serial.rows[i].algorithms.size(), parallel.rows[i].algorithms.size());
    for (std::size_t j = 0; j < serial.rows[i].algorithms.size(); ++j)
      EXPECT_EQ(serial.rows[i].algorithms[j].size, parallel.rows[i].algorithms[j].size);
  }
}

TEST(Verify, ReportSerializations) {
  CorpusSpec spec;
  spec.exhaustive_orders = {3};
  auto report = verify_all(spec);
  auto j = to_json(report);
  EXPECT_EQ(j["totals"]["graphs"], 8);
  EXPECT_EQ(j["totals"]["violations"], 0);
  EXPECT_EQ(j["rows"].size(), 8u);
  auto csv = to_csv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "graph,n,m,k,psi,item_type,item,value,status");
  EXPECT_NE(csv.find("L3:7,3,3,3,1,upper,psi3_n_plus_m_over_4,3/2,pass"), std::string::npos);
}

TEST(Tightness, NmOver4OnlyOnFourCycles) {
  CorpusSpec spec;
  spec.exhaustive_orders = {4, 5, 6};
  auto hits = tightness_scan(build_corpus(spec), {3}, "psi3_n_plus_m_over_4");
  EXPECT_EQ(hits.size(), 3u);  // the three labeled C4
  for (const auto& h : hits) {
    auto mask = static_cast<std::uint32_t>(std::stoul(h.graph_id.substr(3)));
    EXPECT_TRUE(oracle::union_of_cycles(labeled_graph(4, mask), 4)) << h.graph_id;
  }
  EXPECT_THROW(tightness_scan({}, {3}, "nosuch"), invalid_input);
}

TEST(Conjectures, OctahedronIsExact) {
  auto planar = planar_corpus();
  std::vector<CorpusEntry> oct{planar.front()};
  ASSERT_EQ(oct[0].id, "octahedron");
  auto rep = conjecture_scan(oct, {}, {3});
  EXPECT_TRUE(rep.counterexamples.empty());
  ASSERT_EQ(rep.near_tight.size(), 1u);
  EXPECT_TRUE(rep.near_tight[0].exact);
  EXPECT_EQ(rep.near_tight[0].bound, Rational(4));
}

TEST(Conjectures, CorporaAreWellFormed) {
  for (const auto& e : planar_corpus()) {
    EXPECT_TRUE(e.flags.planar);
    EXPECT_TRUE(e.graph.order() < 3 || e.graph.size() <= 3 * e.graph.order() - 6) << e.id;
    EXPECT_EQ(e.flags.triangle_free, is_triangle_free(e.graph));
  }
  for (const auto& e : chordal_corpus()) EXPECT_TRUE(is_chordal(e.graph)) << e.id;
  EXPECT_THROW(conjecture_scan({}, {{"c4", generate_family(parse_family("cycle(4)")), {}}}), invalid_input);
}

TEST(CubicGirth, PetersenAndFriends) {
  auto rows = cubic_girth_check(cubic_corpus(), {3, 4, 5});
  for (const auto& r : rows) EXPECT_TRUE(r.pass) << r.graph_id << " k=" << r.k;
  bool petersen_k4 = false;
  for (const auto& r : rows)
    if (r.graph_id == "petersen" && r.k == 4) {
      petersen_k4 = r.applicable && r.psi >= 3;
    }
  EXPECT_TRUE(petersen_k4);
  EXPECT_THROW(cubic_girth_check({{"c5", generate_family(parse_family("cycle(5)")), {}}}, {3}), invalid_input);
}

TEST(BoundNames, StableCatalogList) {
  auto names = bound_names();
  EXPECT_EQ(names.front(), "order_minus_k_plus_1");
  EXPECT_NE(std::find(names.begin(), names.end(), "psi3_pair_x14"), names.end());
  EXPECT_NE(std::find(names.begin(), names.end(), "cubic_girth_strict"), names.end());
}
