#include <random>

#include <gtest/gtest.h>

#include "ramsey/decomposition.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/named_graphs.hpp"

using namespace ramsey;

TEST(BasePair, BoundFormula) {
  EXPECT_EQ(base_pair_bound(6, {2, 2}), Rational(-3));
  EXPECT_EQ(base_pair_bound(100, {1, 1}), Rational(48));
  EXPECT_EQ(base_pair_bound(7, {1, 2}), Rational(7, 3) - 3);
}

TEST(BasePair, AllRed) {
  const BasePairResult r = find_base_pair(TwoColoring::uniform(6, Color::Red), {2, 2});
  EXPECT_FALSE(r.partial);
  EXPECT_EQ(r.pair.color, Color::Red);
  EXPECT_EQ(r.pair.x.count(), 2);
  EXPECT_EQ(r.pair.y.count(), 4);
}

TEST(BasePair, RandomColoringsSatisfyTheBound) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 8 + static_cast<int>(seed % 40);
    const TwoColoring c = random_coloring(n, 0.5, seed);
    for (PairBudget b : {PairBudget{1, 1}, PairBudget{2, 3}, PairBudget{3, 3}, PairBudget{4, 2}}) {
      const BasePairResult r = find_base_pair(c, b);
      ASSERT_TRUE(is_valid_mono_pair(c, r.pair));
      EXPECT_GE(Rational(r.pair.y.count()), base_pair_bound(n, b));
      if (!r.partial) {
        EXPECT_EQ(r.pair.x.count(), r.pair.color == Color::Red ? b.k : b.l);
      }
    }
  }
}

TEST(BasePair, Errors) {
  EXPECT_THROW(find_base_pair(pentagon_coloring(), {0, 2}), std::invalid_argument);
  EXPECT_THROW(find_base_pair(TwoColoring(Graph(0)), {1, 1}), std::invalid_argument);
}

TEST(SparseSubset, AlreadySparseReturnsEverything) {
  const TwoColoring red = TwoColoring::uniform(20, Color::Red);
  const SparseSubsetResult r = find_sparse_subset(red, complete_graph(3), Rational(1, 8), Color::Blue);
  EXPECT_EQ(r.kind, SparseSubsetResult::Kind::Sparse);
  EXPECT_EQ(r.s.count(), 20);
  EXPECT_EQ(r.density, 0);
}

TEST(SparseSubset, DenseColourYieldsPattern) {
  const TwoColoring red = TwoColoring::uniform(20, Color::Red);
  const SparseSubsetResult r = find_sparse_subset(red, complete_graph(4), Rational(1, 8), Color::Red);
  ASSERT_EQ(r.kind, SparseSubsetResult::Kind::Embedded);
  ASSERT_TRUE(r.embedding);
  EXPECT_TRUE(check_embedding(red, *r.embedding));
  EXPECT_EQ(r.embedding->color, Color::Red);
}

TEST(SparseSubset, EpsRange) {
  const TwoColoring c = pentagon_coloring();
  EXPECT_THROW(find_sparse_subset(c, complete_graph(3), Rational(1, 4), Color::Red), std::invalid_argument);
  EXPECT_THROW(find_sparse_subset(c, complete_graph(3), Rational(0), Color::Red), std::invalid_argument);
}

TEST(PairInSparse, FindsLargeCliquePair) {
  // Blue is empty, so red is complete: any vertex set works.
  const TwoColoring red = TwoColoring::uniform(40, Color::Red);
  const SparsePairResult r = find_pair_in_sparse(red, Rational(1, 8), 8, Color::Blue);
  ASSERT_TRUE(r.found);
  EXPECT_TRUE(r.hypotheses_hold);
  EXPECT_EQ(r.pair->color, Color::Red);
  EXPECT_GE(r.pair->x.count(), 8);
  EXPECT_TRUE(is_valid_mono_pair(red, *r.pair));
}

TEST(PairInSparse, RejectsDenseInput) {
  EXPECT_THROW(find_pair_in_sparse(TwoColoring::uniform(10, Color::Blue), Rational(1, 8), 2, Color::Blue),
               PreconditionError);
  EXPECT_THROW(find_pair_in_sparse(TwoColoring::uniform(10, Color::Red), Rational(1, 6), 2, Color::Blue),
               std::invalid_argument);
  EXPECT_THROW(find_pair_in_sparse(TwoColoring::uniform(10, Color::Red), Rational(1, 8), 0, Color::Blue),
               std::invalid_argument);
}

TEST(PairInSparse, SeededRestartsAreDeterministic) {
  std::vector<Edge> blue;
  for (int i = 0; i + 1 < 60; i += 2) blue.emplace_back(i, i + 1);  // perfect matching: density 1/59
  const TwoColoring c{Graph(60, blue)};
  const SparsePairResult a = find_pair_in_sparse(c, Rational(1, 8), 10, Color::Blue, {4, 99});
  const SparsePairResult b = find_pair_in_sparse(c, Rational(1, 8), 10, Color::Blue, {4, 99});
  ASSERT_TRUE(a.found);
  EXPECT_EQ(a.pair->x, b.pair->x);
  EXPECT_EQ(a.pair->y, b.pair->y);
  EXPECT_TRUE(is_valid_mono_pair(c, *a.pair));
}

TEST(Amplify, ParametersAndErrors) {
  const auto [eps, t] = amplification_parameters(27, 100);
  EXPECT_LE(eps, Rational(1, 512));  // 2^(-9)
  EXPECT_GT(eps, Rational(1, 513));
  EXPECT_EQ(t, 640);  // 2^6 * 10
  const TwoColoring red = TwoColoring::uniform(10, Color::Red);
  MonoPair p{make_vertex_set(10, {0}), make_vertex_set(10, {1, 2}), Color::Red};
  EXPECT_THROW(amplify_pair(red, p, 26, 100, complete_graph(2), complete_graph(2)), std::invalid_argument);
}

TEST(Amplify, SmallYFails) {
  const TwoColoring red = TwoColoring::uniform(10, Color::Red);
  MonoPair p{make_vertex_set(10, {0}), make_vertex_set(10, {1, 2}), Color::Red};
  const AmplifyOutcome o = amplify_pair(red, p, 27, 100, complete_graph(2), complete_graph(2));
  EXPECT_EQ(o.kind, AmplifyOutcome::Kind::Failure);
}

TEST(Amplify, AllRedLargeInstance) {
  const TwoColoring red = TwoColoring::uniform(200, Color::Red);
  MonoPair p{make_vertex_set(200, {0}), Bitset::full(200), Color::Red};
  p.y.reset(0);
  const auto [eps, t] = amplification_parameters(27, 2);
  ASSERT_LE(t, 199);
  const AmplifyOutcome o = amplify_pair(red, p, 27, 2, complete_graph(3), complete_graph(3));
  ASSERT_NE(o.kind, AmplifyOutcome::Kind::Failure);
  if (o.pair) {
    EXPECT_TRUE(is_valid_mono_pair(red, *o.pair));
    EXPECT_GE(mpz_class(o.pair->x.count()), t);
  }
}

TEST(Extract, AllRedK6) {
  const TwoColoring red = TwoColoring::uniform(6, Color::Red);
  const ExtractResult r = extract_ramsey_witness(red, complete_graph(3), complete_graph(3), 3);
  ASSERT_TRUE(r.embedding);
  EXPECT_EQ(r.embedding->color, Color::Red);
  EXPECT_TRUE(check_embedding(red, *r.embedding));
  EXPECT_FALSE(r.trace.stages.empty());
}

TEST(Extract, PentagonFailsWithTrace) {
  const ExtractResult r = extract_ramsey_witness(pentagon_coloring(), complete_graph(3), complete_graph(3), 3);
  EXPECT_FALSE(r.embedding);
  EXPECT_TRUE(r.proven_absent);
  EXPECT_FALSE(r.trace.stages.empty());
  EXPECT_NE(r.trace.to_json_lines().find("\"stage\""), std::string::npos);
}

TEST(Extract, WithPeeledCores) {
  const Graph g1 = named_graph("k2+e3");
  const Graph g2 = complete_graph(3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TwoColoring c = random_coloring(12, 0.5, seed);
    const ExtractResult r = extract_ramsey_witness(c, g1, g2, 7, peeled_core_provider(g1, g2, 7),
                                                   Bitset::full(g1.order()), Bitset::full(g2.order()));
    if (r.embedding) {
      EXPECT_TRUE(check_embedding(c, *r.embedding));
    }
    EXPECT_TRUE(r.embedding || r.proven_absent);
  }
}

TEST(Extract, BadM) {
  EXPECT_THROW(extract_ramsey_witness(pentagon_coloring(), complete_graph(3), complete_graph(3), 0),
               std::invalid_argument);
}
