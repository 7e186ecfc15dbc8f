#include <gtest/gtest.h>

#include <set>

#include "kpvc/chordal.hpp"
#include "kpvc/generators.hpp"
#include "kpvc/graph.hpp"
#include "kpvc/graph_io.hpp"
#include "kpvc/harness.hpp"

using namespace kpvc;

namespace {

Graph fam(const std::string& text, std::uint64_t seed = 1) { return generate_family(parse_family(text, seed)); }

int degree_sum(const Graph& g) {
  int s = 0;
  for (Vertex v = 0; v < g.order(); ++v) s += g.degree(v);
  return s;
}

}  // namespace

TEST(BuildGraph, PathOnThreeVertices) {
  Graph g = build_graph(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(BuildGraph, DuplicateEdgesCollapse) {
  Graph g = build_graph(4, std::vector<Edge>{{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1);
}

TEST(BuildGraph, RejectsBadEdges) {
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{0, 2}}), invalid_input);
  EXPECT_THROW(build_graph(2, std::vector<Edge>{{-1, 0}}), invalid_input);
  EXPECT_THROW(build_graph(3, std::vector<Edge>{{1, 1}}), invalid_input);
}

TEST(BuildGraph, AdjacencyIsSortedAndSymmetric) {
  Graph g(5, {{4, 0}, {2, 0}, {3, 0}, {1, 4}});
  auto nb = g.neighbors(0);
  EXPECT_TRUE(std::is_sorted(nb.begin(), nb.end()));
  for (auto [u, v] : g.edges()) {
    EXPECT_LT(u, v);
    EXPECT_TRUE(g.has_edge(v, u));
  }
}

TEST(Generators, CompleteMinusPerfectMatching) {
  Graph g = fam("complete_minus_pm(6)");
  EXPECT_EQ(g.order(), 6);
  EXPECT_EQ(g.size(), 12);
  EXPECT_THROW(fam("complete_minus_pm(5)"), invalid_input);
  EXPECT_EQ(fam("octahedron"), g);
}

TEST(Generators, NamedGraphs) {
  EXPECT_EQ(fam("cycle(4)").size(), 4);
  EXPECT_EQ(fam("path(7)").size(), 6);
  EXPECT_EQ(fam("complete(5)").size(), 10);
  EXPECT_EQ(fam("star(5)").order(), 6);
  EXPECT_EQ(fam("complete_bipartite(3,3)").size(), 9);
  Graph p = fam("petersen");
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 15);
  EXPECT_EQ(girth(p), 5);
  EXPECT_EQ(girth(fam("heawood")), 6);
  EXPECT_EQ(girth(fam("dodecahedron")), 5);
  EXPECT_EQ(fam("dodecahedron").order(), 20);
  EXPECT_EQ(fam("grid(3,4)").size(), 17);
  EXPECT_EQ(fam("wheel(5)").size(), 10);
  EXPECT_EQ(fam("prism(4)").size(), 12);
}

TEST(Generators, KTreeIsChordalWithExpectedCliqueNumber) {
  Graph g = fam("ktree(20,3)", 7);
  EXPECT_EQ(g.order(), 20);
  EXPECT_TRUE(is_chordal(g));
  EXPECT_EQ(clique_number(g), 4);
}

TEST(Generators, ChordalFamiliesStayChordal) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    EXPECT_TRUE(is_chordal(fam("interval(15)", seed))) << seed;
    for (int w = 1; w <= 4; ++w) {
      Graph g = fam("ktree(16," + std::to_string(w) + ")", seed);
      EXPECT_TRUE(is_chordal(g));
      EXPECT_EQ(clique_number(g), w + 1);
    }
  }
}

TEST(Generators, BoundedDegreeRespectsCap) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = fam("bounded_degree(20,40,4)", seed);
    EXPECT_LE(g.max_degree(), 4);
  }
}

TEST(Generators, HandshakeIdentity) {
  for (const char* f : {"petersen", "gnm(12,30)", "ktree(15,2)", "interval(12)", "bounded_degree(15,30,5)",
                        "apollonian(12)", "random_tree(11)", "union(3*octahedron,cycle(4))", "path_power(9,2)"}) {
    Graph g = fam(f);
    EXPECT_EQ(2 * g.size(), degree_sum(g)) << f;
  }
}

TEST(Generators, DeterministicForSameSeed) {
  for (const char* f : {"gnm(15,25)", "ktree(20,3)", "interval(15)", "bounded_degree(20,35,4)", "random_tree(12)"}) {
    EXPECT_EQ(fam(f, 99), fam(f, 99)) << f;
  }
  EXPECT_NE(fam("gnm(15,25)", 1), fam("gnm(15,25)", 2));
}

TEST(Generators, DisjointUnion) {
  Graph g = fam("union(3*octahedron,cycle(4))");
  EXPECT_EQ(g.order(), 22);
  EXPECT_EQ(g.size(), 40);
  EXPECT_EQ(connected_components(g).size(), 4u);
}

TEST(Generators, FamilyTextRoundTrip) {
  for (const char* f : {"petersen", "gnm(10,20)", "union(2*octahedron,cycle(4))", "grid(2,3)"}) {
    auto spec = parse_family(f, 5);
    EXPECT_EQ(parse_family(to_string(spec), 5), spec) << f;
  }
  EXPECT_THROW(parse_family("cycle(4"), parse_error);
  EXPECT_THROW(fam("nosuchfamily"), invalid_input);
}

TEST(GraphIo, ParsesEdgeList) {
  Graph g = parse_graph("3 2\n0 1\n1 2\n");
  EXPECT_EQ(g, fam("path(3)"));
}

TEST(GraphIo, WriteIsCanonical) {
  Graph g = parse_graph("4 3\n3 2\n1 0\n2 1\n");
  EXPECT_EQ(write_graph(g), "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(write_graph(parse_graph(write_graph(g))), write_graph(g));
}

TEST(GraphIo, RejectsMalformedInput) {
  EXPECT_THROW(parse_graph(""), parse_error);
  EXPECT_THROW(parse_graph("x y"), parse_error);
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), parse_error);
  EXPECT_THROW(parse_graph("3 1\n0 1\n1 2\n"), parse_error);
  EXPECT_THROW(parse_graph("3 1\n0 3\n"), parse_error);
  EXPECT_THROW(parse_graph("3 1\n1 1\n"), parse_error);
}

TEST(GraphIo, RoundTripOnEveryGraphUpToSix) {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_labeled_graphs(n)) {
      ASSERT_EQ(parse_graph(write_graph(g)), g);
      ASSERT_EQ(parse_graph6(write_graph6(g)), g);
    }
}

// Edge sets decoded by networkx.from_graph6_bytes.
struct Graph6Case {
  const char* text;
  int n;
  std::vector<Edge> edges;
};

TEST(GraphIo, Graph6MatchesIndependentDecoder) {
  const std::vector<Graph6Case> cases{
      {"D?{", 5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}},
      {"DQc", 5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}},
      {"A_", 2, {{0, 1}}},
      {"Bw", 3, {{0, 1}, {0, 2}, {1, 2}}},
      {"C~", 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},
      {"E?bw", 6, {{0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}}},
      {"FCxv?", 7, {{0, 3}, {0, 4}, {0, 6}, {1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6}, {3, 5}}},
      {"G?zTb_", 8, {{0, 4}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {1, 7}, {2, 4}, {2, 6}, {2, 7}, {3, 5}, {3, 6}, {3, 7}}},
      {"IheA@GUAo",
       10,
       {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}}},
      {"J??????????", 11, {}},
  };
  for (const auto& c : cases) {
    Graph g = parse_graph6(c.text);
    EXPECT_EQ(g.order(), c.n) << c.text;
    EXPECT_EQ(g.edges(), c.edges) << c.text;
    EXPECT_EQ(write_graph6(g), c.text);
  }
}

TEST(GraphIo, Graph6LongSizeField) {
  // networkx.to_graph6_bytes(nx.path_graph(63))
  const std::string text =
      "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@??"
      "???@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G??????"
      "?@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G";
  Graph g = parse_graph6(">>graph6<<" + text + "\n");
  EXPECT_EQ(g, fam("path(63)"));
  EXPECT_EQ(write_graph6(g), text);
}

TEST(GraphIo, Graph6Errors) {
  EXPECT_THROW(parse_graph6(""), parse_error);
  EXPECT_THROW(parse_graph6("D?"), parse_error);    // too short
  EXPECT_THROW(parse_graph6("D?{?"), parse_error);  // too long
  EXPECT_THROW(parse_graph6("D ?{"), parse_error);  // byte below 63
}

TEST(DegreeProfile, Examples) {
  auto p = degree_profile(fam("petersen"));
  EXPECT_EQ(p.min_degree, 3);
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.average, Rational(3));
  auto q = degree_profile(fam("path(4)"));
  EXPECT_EQ(q.min_degree, 1);
  EXPECT_EQ(q.max_degree, 2);
  EXPECT_EQ(q.average, frac(3, 2));
  EXPECT_EQ(q.sequence, (std::vector<int>{1, 2, 2, 1}));
  auto r = degree_profile(fam("complete_minus_pm(6)"));
  EXPECT_EQ(r.min_degree, 4);
  EXPECT_EQ(r.average, Rational(4));
  EXPECT_THROW(degree_profile(Graph(0, {})), invalid_input);
}

TEST(Structure, ComponentsForestsAndGirth) {
  Graph g = fam("union(cycle(5),path(3),empty(2))");
  EXPECT_EQ(connected_components(g).size(), 4u);
  EXPECT_FALSE(is_forest(g));
  EXPECT_EQ(girth(g), 5);
  EXPECT_TRUE(is_forest(fam("random_tree(12)")));
  EXPECT_EQ(girth(fam("random_tree(12)")), 0);
  EXPECT_TRUE(is_triangle_free(fam("petersen")));
  EXPECT_FALSE(is_triangle_free(fam("octahedron")));
  auto sub = induced_subgraph(fam("cycle(6)"), {0, 1, 2, 4});
  EXPECT_EQ(sub.graph.size(), 2);
  EXPECT_EQ(sub.lift({3}), (VertexSet{4}));
}
