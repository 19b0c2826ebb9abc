#include <gtest/gtest.h>

#include "ramsey/embed.hpp"
#include "ramsey/named_graphs.hpp"
#include "ramsey/oracle.hpp"

using namespace ramsey;

namespace {

// Arrows by enumerating every colouring of K_n; no symmetry breaking, no pruning.
bool arrows_naive(int n, const Graph& g1, const Graph& g2) {
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    std::vector<Edge> blue;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if ((mask >> bit) & 1U) blue.emplace_back(i, j);
    const TwoColoring c{Graph(n, blue)};
    if (greedy_embed(c, g1, Color::Blue).status != SearchStatus::Found &&
        greedy_embed(c, g2, Color::Red).status != SearchStatus::Found)
      return false;
  }
  return true;
}

}  // namespace

TEST(Arrows, AgreesWithNaiveEnumeration) {
  const std::vector<Graph> pats = {complete_graph(2), path_graph(3), complete_graph(3), star_graph(3), cycle_graph(4)};
  for (const Graph& a : pats)
    for (const Graph& b : pats)
      for (int n = 1; n <= 6; ++n) {
        const ArrowsResult r = arrows(n, a, b);
        ASSERT_NE(r.verdict, Arrow::Inconclusive);
        EXPECT_EQ(r.verdict == Arrow::True, arrows_naive(n, a, b)) << n;
        if (r.verdict == Arrow::False) {
          ASSERT_TRUE(r.witness);
          EXPECT_EQ(greedy_embed(*r.witness, a, Color::Blue).status, SearchStatus::Failure);
          EXPECT_EQ(greedy_embed(*r.witness, b, Color::Red).status, SearchStatus::Failure);
        }
      }
}

TEST(Exact, KnownValues) {
  const ExactResult k3 = exact_ramsey(complete_graph(3), complete_graph(3), 7);
  EXPECT_EQ(k3.status, ExactResult::Status::Exact);
  EXPECT_EQ(k3.value, 6);
  ASSERT_TRUE(k3.witness);
  EXPECT_EQ(k3.witness->order(), 5);
  EXPECT_EQ(k3.witness->graph(Color::Blue).edge_count(), 5u);
  EXPECT_TRUE(k3.certificate.exhaustive);

  const ExactResult p3 = exact_ramsey(path_graph(3), path_graph(3), 5);
  EXPECT_EQ(p3.value, 3);
  const ExactResult c4 = exact_ramsey(cycle_graph(4), cycle_graph(4), 7);
  EXPECT_EQ(c4.value, 6);
  const ExactResult k3p3 = exact_ramsey(complete_graph(3), path_graph(3), 6);
  EXPECT_EQ(k3p3.value, 5);
}

TEST(Exact, NMaxReachedGivesLowerBound) {
  const ExactResult r = exact_ramsey(complete_graph(3), complete_graph(3), 5);
  EXPECT_EQ(r.status, ExactResult::Status::LowerBoundOnly);
}

TEST(Exact, BudgetExhaustionIsInconclusive) {
  OracleOptions o;
  o.budget = 10;
  const ArrowsResult r = arrows(6, complete_graph(3), complete_graph(3), o);
  EXPECT_EQ(r.verdict, Arrow::Inconclusive);
  EXPECT_FALSE(r.stats.exhaustive);
}

TEST(Exact, ThreadCountDoesNotChangeResult) {
  OracleOptions one, four;
  four.threads = 4;
  for (int n = 4; n <= 6; ++n) {
    const ArrowsResult a = arrows(n, complete_graph(3), complete_graph(3), one);
    const ArrowsResult b = arrows(n, complete_graph(3), complete_graph(3), four);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  }
  EXPECT_EQ(exact_ramsey(cycle_graph(4), complete_graph(3), 8, one).to_json().dump(),
            exact_ramsey(cycle_graph(4), complete_graph(3), 8, four).to_json().dump());
}

TEST(Exact, Monotonicity) {
  // Adding an edge to a pattern can only raise the Ramsey number.
  const int p3 = exact_ramsey(path_graph(3), complete_graph(3), 7).value;
  const int k3 = exact_ramsey(complete_graph(3), complete_graph(3), 7).value;
  EXPECT_LE(p3, k3);
}

TEST(Dominance, ExactValuesBelowBounds) {
  const ExactResult k3 = exact_ramsey(complete_graph(3), complete_graph(3), 7);
  const HypothesisReport r = dominance_check(complete_graph(3), complete_graph(3), k3);
  EXPECT_TRUE(r.passed());
  EXPECT_NE(r.find("c1"), nullptr);
  EXPECT_NE(r.find("t1"), nullptr);
}
