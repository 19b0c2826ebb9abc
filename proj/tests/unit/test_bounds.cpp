#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "ramsey/bounds.hpp"
#include "ramsey/interval.hpp"

using namespace ramsey;

namespace {

mpq_class q(long a, long b = 1) { return mpq_class(a, b); }

bool exact_is(const Interval& x, long v) { return x.is_exact() && x.contains(q(v)); }

}  // namespace

TEST(Interval, RationalOpsEncloseExactValues) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (int i = 0; i < 300; ++i) {
    long an = d(rng), bn = d(rng), ad = std::abs(d(rng)) + 1, bd = std::abs(d(rng)) + 1;
    mpq_class a(an, ad), b(bn, bd);
    a.canonicalize();
    b.canonicalize();
    for (mpfr_prec_t p : {24, 64, 200}) {
      const Interval ia = Interval::from_rational(a, p);
      const Interval ib = Interval::from_rational(b, p);
      EXPECT_TRUE((ia + ib).contains(a + b));
      EXPECT_TRUE((ia - ib).contains(a - b));
      EXPECT_TRUE((ia * ib).contains(a * b));
      if (b != 0) {
        EXPECT_TRUE((ia / ib).contains(a / b));
      }
    }
  }
}

TEST(Interval, TranscendentalsExactWhereRepresentable) {
  EXPECT_TRUE(exact_is(sqrt(Interval::exact(3600, 128)), 60));
  EXPECT_TRUE(exact_is(cbrt(Interval::exact(64, 128)), 4));
  EXPECT_TRUE(exact_is(log2(Interval::exact(1024, 128)), 10));
  EXPECT_TRUE(exact_is(exp2(Interval::exact(7, 128)), 128));
  const Interval s2 = sqrt(Interval::exact(2, 128));
  EXPECT_FALSE(s2.is_exact());
  EXPECT_LT(s2.lo_double(), std::sqrt(2.0) + 1e-15);
  EXPECT_GT(s2.hi_double(), std::sqrt(2.0) - 1e-15);
}

TEST(Interval, ComparisonsAreThreeValued) {
  const Interval two = Interval::exact(2, 64);
  const Interval three = Interval::exact(3, 64);
  EXPECT_EQ(less(two, three), Tri::True);
  EXPECT_EQ(less(three, two), Tri::False);
  EXPECT_EQ(less_equal(two, two), Tri::True);
  EXPECT_EQ(equal(two, two), Tri::True);
  const Interval wide = Interval::hull(two, three);
  EXPECT_EQ(less(wide, Interval::from_rational(q(5, 2), 64)), Tri::Indecisive);
  EXPECT_EQ(tri_and(Tri::True, Tri::Indecisive), Tri::Indecisive);
  EXPECT_EQ(tri_and(Tri::False, Tri::Indecisive), Tri::False);
  EXPECT_EQ(tri_or(Tri::True, Tri::Indecisive), Tri::True);
  EXPECT_EQ(tri_not(Tri::Indecisive), Tri::Indecisive);
}

TEST(IntegerHelpers, ScaledSqrtAgreesWithBruteForce) {
  for (long m = 1; m <= 3000; m += 7)
    for (const mpq_class& a : {q(1), q(27), q(1, 2), q(16, 3)}) {
      const mpz_class c = ceil_scaled_sqrt(a, m);
      const mpz_class f = floor_scaled_sqrt(a, m);
      // k >= a sqrt(m)  <=>  k^2 >= a^2 m for k >= 0
      EXPECT_GE(mpq_class(c * c), a * a * m);
      EXPECT_LT(mpq_class((c - 1) * (c - 1)), a * a * m);
      EXPECT_LE(mpq_class(f * f), a * a * m);
      EXPECT_GT(mpq_class((f + 1) * (f + 1)), a * a * m);
    }
  EXPECT_EQ(binomial(6, 3), 20);
  EXPECT_EQ(binomial(4, 0), 1);
}

TEST(Bounds, ClassicalExamples) {
  EXPECT_TRUE(exact_is(bound_erdos_szekeres(5).log2(), 10));
  EXPECT_TRUE(exact_is(bound_erdos_szekeres(1).log2(), 2));
  EXPECT_TRUE(exact_is(bound_erdos_szekeres(60).log2(), 120));
  EXPECT_TRUE(exact_is(bound_erdos_lower(4).log2(), 2));
  EXPECT_TRUE(bound_erdos_lower(3).log2().contains(q(3, 2)));
  EXPECT_THROW(bound_erdos_lower(2), std::domain_error);
  EXPECT_TRUE(exact_is(bound_sudakov(36).log2(), 1500));
  EXPECT_TRUE(exact_is(bound_sudakov(1).log2(), 250));
}

TEST(Bounds, LowerNeverExceedsUpper) {
  for (long n = 3; n <= 1000000; n = n * 3 / 2 + 1)
    EXPECT_EQ(at_most(bound_erdos_lower(n), bound_erdos_szekeres(n)), Tri::True) << n;
}

TEST(Bounds, AlonMatchesFloatingFormula) {
  for (long h : {10L, 1000L, 100000L})
    for (long p : {2L, 5L, 50L})
      for (long r : {1L, 2L, 3L})
        for (long k = 2; k <= r + 1; ++k) {
          const LogQty b = bound_alon(h, p, k, r);
          const double lnp = std::log(double(p));
          double expect = (2.0 * r - k + 2) * (k - 1) / 2.0 * std::log2(100.0 * p / lnp) + r * std::log2(double(h));
          if (k > r) expect += std::log2(lnp);
          EXPECT_NEAR(b.log2().lo_double(), expect, 1e-9 * std::max(1.0, std::abs(expect)));
        }
  EXPECT_THROW(bound_alon(5, 5, 2, 0), std::domain_error);
  EXPECT_THROW(bound_alon(5, 1, 2, 1), std::domain_error);
}

TEST(Bounds, CorollaryEdges) {
  const BoundResult one = bound_corollary_edges(1, 1);
  EXPECT_TRUE(exact_is(one.bound.log2(), 250));
  EXPECT_TRUE(one.report.passed());
  const BoundResult c = bound_corollary_edges(3, 5);
  EXPECT_TRUE(c.bound.log2().contains(q(0)) == false);
  EXPECT_LT(c.bound.log2().lo_double(), 250 * std::sqrt(5.0) + 1e-9);
  EXPECT_GT(c.bound.log2().hi_double(), 250 * std::sqrt(5.0) - 1e-9);
  // The fallback covers m <= 3906 (16m <= 62500); above it the main branch carries the bound.
  const BoundResult at = bound_corollary_edges(3600, 3600);
  EXPECT_EQ(at.report.find("fallback")->verdict, Tri::True);
  const BoundResult past = bound_corollary_edges(3907, 10);
  EXPECT_EQ(past.report.find("fallback")->verdict, Tri::False);
  EXPECT_TRUE(past.report.passed());
}

TEST(Bounds, CorollaryVerticesAndBipartite) {
  EXPECT_TRUE(exact_is(bound_corollary_vertices(27).log2(), 750));
  const BoundResult b = bound_corollary_bipartite(162, 5);
  EXPECT_TRUE(exact_is(b.bound.log2(), 1500));
  EXPECT_TRUE(b.report.passed());
  // m = (p/27)^2 >= 27 needs p >= 141: p = 54 and p = 140 cannot instantiate the join corollary.
  EXPECT_FALSE(bound_corollary_bipartite(54, 3).report.passed());
  EXPECT_FALSE(bound_corollary_bipartite(140, 3).report.passed());
  EXPECT_TRUE(bound_corollary_bipartite(141, 3).report.passed());
  EXPECT_THROW(bound_corollary_bipartite(27, 3), std::domain_error);
}

TEST(AlphaSequence, FirstTerms) {
  const AlphaTrace t = alpha_sequence(3600);
  ASSERT_GE(t.stages.size(), 3u);
  EXPECT_TRUE(exact_is(t.stages[0].alpha, 27));
  EXPECT_TRUE(exact_is(t.stages[1].alpha, 64));
  EXPECT_TRUE(exact_is(t.stages[2].alpha, 256));
  EXPECT_TRUE(exact_is(t.stages[0].y_coefficient, 196));
  EXPECT_TRUE(t.stages[1].y_coefficient.contains(q(156)));
  EXPECT_FALSE(t.stages.back().amplified);
}

TEST(AlphaSequence, PropertiesOverRange) {
  for (long m = 27; m <= 100000000; m = m * 5 / 3) {
    const AlphaTrace t = alpha_sequence(m);
    for (std::size_t i = 1; i < t.stages.size(); ++i) {
      EXPECT_EQ(t.stages[i].growth, Tri::True);
      // (4/3)^3 alpha_i <= alpha_(i+1)
      EXPECT_EQ(less_equal(64L * t.stages[i - 1].alpha, 27L * t.stages[i].alpha), Tri::True);
    }
    EXPECT_EQ(less_equal(t.stages.back().partial_sum, Interval::from_rational(q(4, 3), 256)), Tri::True);
  }
}

TEST(MainArithmetic, Examples) {
  const HypothesisReport r = verify_main_arithmetic(3600, max_admissible_order(3600));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.find("chain.base.exponent_identity") != nullptr);
  // An order beyond the admissible cap fails the precondition.
  const HypothesisReport big = verify_main_arithmetic(3600, max_admissible_order(3600) * 4);
  EXPECT_FALSE(big.passed());
  EXPECT_EQ(big.first_failure()->id, "precondition.order");
  EXPECT_THROW(verify_main_arithmetic(1, 1), std::domain_error);
}

TEST(MainArithmetic, ExactIdentityAtSquares) {
  for (long r : {1L, 7L, 60L, 1000L}) {
    const auto [lhs, rhs] = base_pair_exponents(r * r, 128);
    EXPECT_TRUE(lhs.is_exact());
    EXPECT_EQ(equal(lhs, rhs), Tri::True);
  }
  const auto [four_m, sud] = fallback_exponents(3600, 128);
  EXPECT_TRUE(exact_is(four_m, 14400));
  EXPECT_TRUE(exact_is(sud, 15000));
}

TEST(Main2Arithmetic, BranchesAndErrors) {
  const long m = 10000;
  const long l = floor_scaled_sqrt(q(27), m).get_si();
  const HypothesisReport r0 = verify_main2_arithmetic(m, 100, l, 1000, 1, 0);
  EXPECT_TRUE(r0.passed());
  EXPECT_NE(r0.find("r0.direct"), nullptr);
  const HypothesisReport r1 = verify_main2_arithmetic(m, 100, l, 1000, 2, 2);
  EXPECT_TRUE(r1.passed());
  EXPECT_NE(r1.find("r1.total"), nullptr);
  const HypothesisReport too_big_l = verify_main2_arithmetic(m, 100, l + 1, 1000, 2, 2);
  EXPECT_FALSE(too_big_l.passed());
  EXPECT_EQ(too_big_l.first_failure()->id, "pre.l");
  // r must stay below log m / 4, about 3.3 here.
  EXPECT_FALSE(verify_main2_arithmetic(m, 100, l, 1000, 2, 4).passed());
}

TEST(Precision, PolicyEscalatesAndThrows) {
  int calls = 0;
  auto build = [&](mpfr_prec_t p) {
    ++calls;
    HypothesisReport r("t");
    r.add("c", "x", p >= 512 ? Tri::True : Tri::Indecisive);
    return r;
  };
  const HypothesisReport r = evaluate_with_precision(build, PrecisionPolicy{128, 1024});
  EXPECT_EQ(r.precision, 512);
  EXPECT_EQ(calls, 3);
  EXPECT_THROW(evaluate_with_precision(build, PrecisionPolicy{128, 256}), PrecisionError);
}
