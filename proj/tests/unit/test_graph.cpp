#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/named_graphs.hpp"

using namespace ramsey;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, e);
}

// Brute force: try every injective map of pattern vertices into host vertices.
bool has_copy_naive(const Graph& host, const Graph& pattern) {
  const int n = host.order();
  const int k = pattern.order();
  if (k > n) return false;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + k, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<Vertex> chosen;
    for (int i = 0; i < n; ++i)
      if (pick[i]) chosen.push_back(i);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool ok = true;
      for (const Edge& e : pattern.edges())
        if (!host.adjacent(chosen[perm[e.u]], chosen[perm[e.v]])) {
          ok = false;
          break;
        }
      if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

TEST(Bitset, BasicOps) {
  Bitset a(130);
  a.set(0);
  a.set(64);
  a.set(129);
  EXPECT_EQ(a.count(), 3);
  EXPECT_EQ(a.first(), 0);
  EXPECT_EQ(a.next(1), 64);
  EXPECT_EQ(a.next(65), 129);
  EXPECT_EQ(a.next(130), -1);
  Bitset b(130);
  b.set(64);
  EXPECT_EQ((a & b).count(), 1);
  EXPECT_EQ((a | b).count(), 3);
  a.reset(64);
  EXPECT_FALSE(a.test(64));
}

TEST(Graph, ConstructionAndErrors) {
  const Graph g(4, {{0, 1}, {1, 0}, {2, 3}});
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_THROW(Graph(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::exception);
  EXPECT_TRUE(g.has_isolated_vertex() == false);
  EXPECT_TRUE(Graph(3, {{0, 1}}).has_isolated_vertex());
}

TEST(Graph, NamedGraphs) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(star_graph(4).order(), 5);
  EXPECT_EQ(star_graph(4).degree(0), 4);
  const Graph j = named_graph("k2+e3");
  EXPECT_EQ(j.order(), 5);
  EXPECT_EQ(j.edge_count(), 1u + 6u);
  EXPECT_EQ(named_graph("p3"), path_graph(3));
  EXPECT_EQ(named_graph("star-3"), star_graph(3));
  EXPECT_THROW(named_graph("bogus"), std::invalid_argument);
}

TEST(Graph, JoinComplementInduced) {
  const Graph j = join(complete_graph(2), edgeless_graph(3));
  EXPECT_EQ(j.edge_count(), 7u);
  const Graph c = complement(cycle_graph(5));
  EXPECT_EQ(c.edge_count(), 5u);
  EXPECT_TRUE(has_copy_naive(c, cycle_graph(5)));
  const Subgraph s = delete_vertices(complete_graph(5), make_vertex_set(5, {1, 3}));
  EXPECT_EQ(s.graph, complete_graph(3));
  EXPECT_EQ(s.labels, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(edge_density(complete_graph(4), Bitset::full(4)), Rational(1));
  EXPECT_EQ(edge_density(path_graph(3), Bitset::full(3)), Rational(2, 3));
  EXPECT_EQ(edge_density(path_graph(3), make_vertex_set(3, {1})), Rational(0));
}

TEST(Graph, DisjointUnionAndDegrees) {
  const Graph u = disjoint_union(complete_graph(3), path_graph(3));
  EXPECT_EQ(u.order(), 6);
  EXPECT_EQ(u.edge_count(), 5u);
  EXPECT_EQ(max_degree(u), 2);
}

TEST(MonoPair, Examples) {
  const TwoColoring red = TwoColoring::uniform(6, Color::Red);
  const PairCheck ok = validate_mono_pair(red, make_vertex_set(6, {0, 1}), make_vertex_set(6, {2, 3, 4, 5}));
  EXPECT_EQ(ok.status, PairCheck::Status::Monochromatic);
  EXPECT_EQ(ok.color, Color::Red);

  // Pentagon: cycle red, diagonals blue. X = {0}, Y = {1, 4} is red; adding 2 breaks it.
  const TwoColoring pent = pentagon_coloring();
  EXPECT_EQ(validate_mono_pair(pent, make_vertex_set(5, {0}), make_vertex_set(5, {1, 4})).status,
            PairCheck::Status::Monochromatic);
  const PairCheck bad = validate_mono_pair(pent, make_vertex_set(5, {0}), make_vertex_set(5, {1, 2}));
  EXPECT_EQ(bad.status, PairCheck::Status::Violated);
  ASSERT_TRUE(bad.violation.has_value());

  EXPECT_EQ(validate_mono_pair(pent, make_vertex_set(5, {0}), VertexSet(5)).status, PairCheck::Status::Vacuous);
  EXPECT_THROW(validate_mono_pair(pent, VertexSet(5), make_vertex_set(5, {1})), std::invalid_argument);
  EXPECT_THROW(validate_mono_pair(pent, make_vertex_set(5, {1}), make_vertex_set(5, {1})), std::invalid_argument);
}

TEST(MonoPair, XInsideMustBeMonochromaticToo) {
  std::vector<Edge> blue = {{0, 1}};
  const TwoColoring c{Graph(4, blue)};
  // X = {0,1} has a blue edge, X-Y edges are red: not a pair.
  EXPECT_EQ(validate_mono_pair(c, make_vertex_set(4, {0, 1}), make_vertex_set(4, {2, 3})).status,
            PairCheck::Status::Violated);
}

TEST(Coloring, InducedAndMonochromatic) {
  const TwoColoring pent = pentagon_coloring();
  EXPECT_EQ(monochromatic_subgraph(pent, Color::Red), cycle_graph(5));
  const SubColoring s = induced_coloring(pent, make_vertex_set(5, {0, 2, 4}));
  EXPECT_EQ(s.coloring.order(), 3);
  EXPECT_EQ(s.labels, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(s.coloring.color(0, 1), pent.color(0, 2));
  EXPECT_EQ(s.coloring.color(0, 2), pent.color(0, 4));
}

TEST(Embedding, CheckRejectsWrongColor) {
  const TwoColoring pent = pentagon_coloring();
  Embedding e{path_graph(3), {0, 1, 2}, Color::Red};
  EXPECT_TRUE(check_embedding(pent, e));
  e.color = Color::Blue;
  EXPECT_FALSE(check_embedding(pent, e));
  Embedding dup{path_graph(3), {0, 1, 0}, Color::Red};
  EXPECT_FALSE(check_embedding(pent, dup));
}

TEST(Embed, AgreesWithBruteForce) {
  std::mt19937_64 rng(7);
  const std::vector<Graph> patterns = {complete_graph(3), path_graph(4), cycle_graph(4), star_graph(3),
                                       complete_graph(4), cycle_graph(5)};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + trial % 5;
    const TwoColoring c(random_graph(n, 0.5, rng));
    for (const Graph& p : patterns)
      for (Color col : {Color::Blue, Color::Red}) {
        const EmbedResult r = greedy_embed(c, p, col);
        const bool naive = has_copy_naive(c.graph(col), p);
        ASSERT_NE(r.status, SearchStatus::Inconclusive);
        EXPECT_EQ(r.status == SearchStatus::Found, naive) << "trial " << trial;
        if (r.embedding) {
          EXPECT_TRUE(check_embedding(c, *r.embedding));
        }
      }
  }
}

TEST(Embed, WithinRestrictsHost) {
  const TwoColoring red = TwoColoring::uniform(6, Color::Red);
  EXPECT_EQ(greedy_embed(red, complete_graph(3), Color::Red, make_vertex_set(6, {0, 5})).status,
            SearchStatus::Failure);
  const EmbedResult r = greedy_embed(red, complete_graph(3), Color::Red, make_vertex_set(6, {1, 3, 5}));
  ASSERT_TRUE(r.embedding);
  for (Vertex v : r.embedding->host) EXPECT_TRUE(v == 1 || v == 3 || v == 5);
}

TEST(Embed, NodeCapGivesInconclusive) {
  const TwoColoring c = TwoColoring::uniform(30, Color::Blue);
  // K_31 cannot fit into K_30 but the search must explore before it knows; cap it at one node.
  const EmbedResult r = greedy_embed(c, cycle_graph(12), Color::Red, EmbedOptions{.node_cap = 1});
  EXPECT_NE(r.status, SearchStatus::Found);
}

TEST(GraphIO, EdgeListRoundTrip) {
  const Graph g = named_graph("k2+c5");
  EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
  EXPECT_EQ(parse_edge_list("# comment\n5\n0 1\n").order(), 5);
  EXPECT_EQ(parse_edge_list("0 1\n2 3\n").order(), 4);
}

TEST(GraphIO, EdgeListErrorsCarryLineNumbers) {
  try {
    parse_edge_list("0 1\n1 x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("0 0\n"), ParseError);
  EXPECT_THROW(parse_edge_list("3\n0 5\n"), ParseError);
}

TEST(GraphIO, Graph6KnownValues) {
  EXPECT_EQ(write_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(parse_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(parse_graph6(">>graph6<<Bw"), complete_graph(3));
  EXPECT_EQ(write_graph6(edgeless_graph(1)), "@");
  EXPECT_EQ(parse_graph("Bw\n"), complete_graph(3));
  EXPECT_THROW(parse_graph6("B\x01"), ParseError);
  EXPECT_THROW(parse_graph6("D"), ParseError);
}

TEST(GraphIO, Graph6RoundTripProperty) {
  std::mt19937_64 rng(3);
  for (int n : {0, 1, 2, 5, 17, 62, 63, 64, 100, 300}) {
    const Graph g = random_graph(n, 0.3, rng);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g) << n;
  }
}

TEST(GraphIO, Coloring) {
  const TwoColoring pent = pentagon_coloring();
  EXPECT_EQ(parse_coloring(write_coloring(pent)), pent);
  EXPECT_EQ(parse_coloring("3\n1 0 1"), parse_coloring("3 101"));
  EXPECT_THROW(parse_coloring("3\n10"), ParseError);
  EXPECT_THROW(parse_coloring("3\n102"), ParseError);
  EXPECT_EQ(named_coloring("all-red:4"), TwoColoring::uniform(4, Color::Red));
  EXPECT_EQ(named_coloring("random:8:0.5:9"), random_coloring(8, 0.5, 9));
  EXPECT_NE(random_coloring(12, 0.5, 1), random_coloring(12, 0.5, 2));
}
