#include <random>

#include <gtest/gtest.h>

#include "ramsey/decomposition.hpp"
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

// Smallest k admitting a proper colouring, by plain backtracking.
int chromatic_naive(const Graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  std::vector<int> col(n, -1);
  for (int k = 1;; ++k) {
    std::function<bool(int)> go = [&](int v) {
      if (v == n) return true;
      for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v; ++u)
          if (g.adjacent(u, v) && col[u] == c) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (go(v + 1)) return true;
      }
      return false;
    };
    if (go(0)) return k;
  }
}

}  // namespace

TEST(Peel, Examples) {
  const PeelResult star = peel_high_degree(star_graph(9), 1);
  EXPECT_TRUE(star.u.test(0));
  EXPECT_EQ(star.core.graph.max_degree(), 0);
  EXPECT_EQ(peel_high_degree(edgeless_graph(5), 3).core.graph.max_degree(), 0);
  EXPECT_EQ(peel_high_degree(complete_graph(4), 10).u.count(), 4);
  EXPECT_THROW(peel_high_degree(complete_graph(4), -1), std::invalid_argument);
}

TEST(Peel, CountingBoundProperty) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(5 + i % 40, 0.05 + 0.01 * (i % 30), rng);
    const long m = static_cast<long>(g.edge_count());
    if (m == 0) continue;
    for (long a : {1L, 3L, 9L}) {
      const long budget = ceil_scaled_sqrt(a, m).get_si();
      const int d = peel_high_degree(g, budget).core.graph.max_degree();
      EXPECT_LE(a * a * d * d, 4 * m);
    }
  }
}

TEST(ConditionI, PassesForGraphsWithinEdgeBudget) {
  const long m = 1L << 20;  // log^3 m / 8 = 1000, so the alpha range is non-empty
  std::mt19937_64 rng(9);
  const Graph g1 = random_graph(60, 0.2, rng);
  const Graph g2 = named_graph("k3+c5");
  const HypothesisReport r = check_condition_I(g1, g2, m);
  // g1 may have isolated vertices; that precondition is the only permitted failure.
  for (const Clause& c : r.clauses())
    if (c.id.rfind("pre.", 0) != 0 && c.gating) {
      EXPECT_EQ(c.verdict, Tri::True) << c.id;
    }
}

TEST(ConditionI, EmptyRangeIsVacuous) {
  const HypothesisReport r = check_condition_I(complete_graph(3), complete_graph(3), 40);
  EXPECT_TRUE(default_alpha_samples(40).empty());
  EXPECT_NE(r.find("range"), nullptr);
}

TEST(ConditionII, SizeAndRamseyClauses) {
  const Graph g = complete_graph(4);
  const LogQty small(Interval::exact(10, 128));
  const HypothesisReport ok = check_condition_II(g, g, Bitset::full(4), Bitset::full(4), 100, small, small);
  EXPECT_TRUE(ok.passed());
  const LogQty huge(Interval::exact(1000, 128));
  EXPECT_FALSE(check_condition_II(g, g, Bitset::full(4), Bitset::full(4), 100, huge, small).passed());
  // |V| = 4 needs 16 <= m^3.
  EXPECT_FALSE(check_condition_II(g, g, Bitset::full(4), Bitset::full(4), 2, small, small).passed());
}

TEST(LowDegreeCore, BoundHolds) {
  std::mt19937_64 rng(2);
  for (long m : {27L, 1000L, 1L << 20}) {
    const Graph h = random_graph(30, 0.3, rng);
    const LowDegreeCore c = find_low_degree_core(h, m);
    // 4 Δ < log m  <=>  2^(4Δ) < m
    EXPECT_LT(std::pow(2.0, 4 * c.max_degree), double(m));
    // |S| <= m^(3/2) - 27 sqrt(m); at m = 27 the right side is 0.
    const double room = std::pow(double(m), 1.5) - 27 * std::sqrt(double(m));
    EXPECT_EQ(c.report.passed(), c.s.count() <= room + 1e-9) << m;
  }
  EXPECT_THROW(find_low_degree_core(complete_graph(3), 26), std::invalid_argument);
}

TEST(DegreeProfile, ExactChromaticNumberMatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_graph(3 + i % 9, 0.45, rng);
    const DegreeProfile p = degree_profile_coloring(g);
    EXPECT_TRUE(p.exact);
    EXPECT_EQ(p.k, std::max(chromatic_naive(g), g.order() > 0 ? 1 : 0)) << i;
    for (const Edge& e : g.edges()) EXPECT_NE(p.color_of[e.u], p.color_of[e.v]);
    int r = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (p.color_of[v] != 0) r = std::max(r, g.degree(v));
    EXPECT_EQ(p.r, r);
  }
}

TEST(DegreeProfile, OddCycleAndLargeGraph) {
  EXPECT_EQ(degree_profile_coloring(cycle_graph(5)).k, 3);
  EXPECT_EQ(degree_profile_coloring(cycle_graph(6)).k, 2);
  const DegreeProfile big = degree_profile_coloring(cycle_graph(25));
  EXPECT_FALSE(big.exact);
  EXPECT_GE(big.k, 3);
}

TEST(Main2Hypotheses, FixturePasses) {
  const Main2Check c = check_main2_hypotheses(5, 3, cycle_graph(5), 1000000);
  EXPECT_TRUE(c.report.passed());
  ASSERT_TRUE(c.certificates);
  EXPECT_EQ(c.certificates->g2.order(), 8);
  EXPECT_TRUE(c.certificates->u2.test(0));
}

TEST(Main2Hypotheses, LTooLargeNamesClause) {
  const Main2Check c = check_main2_hypotheses(5, 30000, cycle_graph(5), 1000000);
  ASSERT_FALSE(c.report.passed());
  EXPECT_EQ(c.report.first_failure()->id, "pre.l");
}
