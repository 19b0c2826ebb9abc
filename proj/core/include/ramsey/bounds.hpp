#pragma once

#include <vector>

#include <gmpxx.h>

#include "ramsey/interval.hpp"
#include "ramsey/report.hpp"

namespace ramsey {

/// A positive quantity represented by an enclosure of its base-2 logarithm.
class LogQty {
public:
  explicit LogQty(Interval log2_value) : log2_(std::move(log2_value)) {}
  static LogQty from_integer(const mpz_class& value, mpfr_prec_t precision);

  const Interval& log2() const { return log2_; }
  mpfr_prec_t precision() const { return log2_.precision(); }
  bool is_exact() const { return log2_.is_exact(); }
  /// {"lo","hi","precision"} decimal strings of the exponent.
  Json to_json() const { return interval_json(log2_); }

private:
  Interval log2_;
};

Tri at_most(const LogQty& a, const LogQty& b);

// Exact integer helpers for thresholds of the form c·sqrt(m).

/// Smallest k with k >= alpha·sqrt(m); alpha > 0.
mpz_class ceil_scaled_sqrt(const mpq_class& alpha, long m);
/// Largest k with k <= alpha·sqrt(m); alpha >= 0.
mpz_class floor_scaled_sqrt(const mpq_class& alpha, long m);
mpz_class binomial(unsigned long n, unsigned long k);

/// Interval building blocks shared with the decomposition checks. log = log2.
namespace terms {
Interval sqrt_m(long m, mpfr_prec_t p);
Interval log_m(long m, mpfr_prec_t p);
/// 106·sqrt(m)/log m, the exponent capping n(G) and n(H).
Interval order_exponent(long m, mpfr_prec_t p);
/// log^3 m / 8, the largest admissible alpha.
Interval alpha_max(long m, mpfr_prec_t p);
/// 16·sqrt(m)/log^3 m.
Interval low_degree_cap(long m, mpfr_prec_t p);
/// 27·sqrt(m) + 16·sqrt(m)/log^3 m.
Interval clique_order_cap(long m, mpfr_prec_t p);
}  // namespace terms

/// R(K_n) <= 2^(2n).
LogQty bound_erdos_szekeres(long n, mpfr_prec_t precision = 256);
/// R(K_n) >= 2^(n/2), n > 2.
LogQty bound_erdos_lower(long n, mpfr_prec_t precision = 256);
/// R(G) <= 2^(250 sqrt(m)).
LogQty bound_sudakov(long m, mpfr_prec_t precision = 256);
/// R(H, K_p) for a graph H on h vertices with a proper k-coloring whose
/// vertices outside the first class have degree <= r; 1 <= r < h, k >= 2, p >= 2.
LogQty bound_alon(const mpz_class& h, long p, long k, long r, mpfr_prec_t precision = 256);

struct AlphaStage {
  int index = 1;
  Interval alpha;
  Interval inv_cbrt;       // alpha^(-1/3)
  Interval partial_sum;    // sum over j <= index of alpha_j^(-1/3)
  Interval y_coefficient;  // log2|Y_index| / sqrt(m)
  Tri growth = Tri::True;  // 27·alpha_index >= 64·alpha_(index-1)
  bool amplified = false;  // alpha_index < log^3 m / 8, so another amplification follows
};

struct AlphaTrace {
  long m = 0;
  Interval threshold;  // log^3 m / 8
  std::vector<AlphaStage> stages;
  Json to_json() const;
};

/// alpha_1 = 27, alpha_(i+1) = 2^(2 alpha_i^(1/3)), stopping at the first alpha_i >= log^3 m / 8.
/// Y-exponents follow Y_1 = 196, Y_(i+1) = Y_i - 120 alpha_i^(-1/3) in units of sqrt(m).
AlphaTrace alpha_sequence(long m, mpfr_prec_t precision = 256);

/// Largest n (up to rounding toward 0) with 2^(106 sqrt(m)/log m) >= n - 27 sqrt(m).
mpz_class max_admissible_order(long m, mpfr_prec_t precision = 256);

/// Arithmetic of the main-theorem proof for given m and n = max(n1, n2).
HypothesisReport verify_main_arithmetic(long m, const mpz_class& n, const PrecisionPolicy& policy = {});

/// Inequality chain behind R(K_p, K_l + H) <= 2^(250 sqrt(m)); q = n(H-S), k = chi(H-S), r = Delta(H-S).
HypothesisReport verify_main2_arithmetic(long m, long p, long l, const mpz_class& q, long k, long r,
                                         const PrecisionPolicy& policy = {});

struct BoundResult {
  LogQty bound;
  HypothesisReport report;
};

/// Two graphs with at most m1, m2 edges and no isolated vertices.
BoundResult bound_corollary_edges(long m1, long m2, const PrecisionPolicy& policy = {});
/// 2^(250 n^(1/3)).
LogQty bound_corollary_vertices(long n, mpfr_prec_t precision = 256);
/// R(K_p, K_l + qK_1).
BoundResult bound_corollary_join(long m, long p, long l, const mpz_class& q, const PrecisionPolicy& policy = {});
/// R(K_p, K_{p,q}) <= R(K_p, K_p + qK_1) <= 2^(250p/27).
BoundResult bound_corollary_bipartite(long p, const mpz_class& q, const PrecisionPolicy& policy = {});

/// Exponents of 4^(-27 sqrt m) 2^(250 sqrt m) and 2^(196 sqrt m).
std::pair<Interval, Interval> base_pair_exponents(long m, mpfr_prec_t precision);
/// Exponents of 2^(4m) and 2^(250 sqrt m), the two sides of the small-m fallback.
std::pair<Interval, Interval> fallback_exponents(long m, mpfr_prec_t precision);

}  // namespace ramsey
