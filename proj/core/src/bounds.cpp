#include "ramsey/bounds.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

namespace {

Interval num(long v, mpfr_prec_t p) { return Interval::exact(v, p); }

Interval rat(long a, long b, mpfr_prec_t p) { return Interval::from_rational(mpq_class(a, b), p); }

Json ev(const Interval& x) { return interval_json(x); }

std::string str(const mpz_class& z) { return z.get_str(); }

/// x <= y for a nonnegative integer x against 2^e.
Tri integer_at_most_power(const mpz_class& x, const Interval& e) {
  if (x <= 1) return tri(mpfr_sgn(e.lo()) >= 0 || x <= 0);
  return less_equal(log2(Interval::from_integer(x, e.precision())), e);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

LogQty LogQty::from_integer(const mpz_class& value, mpfr_prec_t precision) {
  if (value <= 0) throw std::domain_error("LogQty needs a positive value");
  return LogQty(ramsey::log2(Interval::from_integer(value, precision)));
}

Tri at_most(const LogQty& a, const LogQty& b) { return less_equal(a.log2(), b.log2()); }

mpz_class ceil_scaled_sqrt(const mpq_class& alpha, long m) {
  require(alpha > 0 && m >= 0, "ceil_scaled_sqrt needs alpha > 0 and m >= 0");
  const mpz_class a = alpha.get_num();
  const mpz_class b = alpha.get_den();
  const mpz_class radicand = a * a * m;
  mpz_class s = sqrt(radicand);
  if (s * s < radicand) ++s;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), s.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class floor_scaled_sqrt(const mpq_class& alpha, long m) {
  require(alpha >= 0 && m >= 0, "floor_scaled_sqrt needs alpha >= 0 and m >= 0");
  const mpz_class a = alpha.get_num();
  const mpz_class b = alpha.get_den();
  mpz_class s = sqrt(mpz_class(a * a * m));
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), s.get_mpz_t(), b.get_mpz_t());
  return q;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace terms {

Interval sqrt_m(long m, mpfr_prec_t p) { return sqrt(num(m, p)); }
Interval log_m(long m, mpfr_prec_t p) { return log2(num(m, p)); }

Interval order_exponent(long m, mpfr_prec_t p) {
  require(m >= 2, "log m must be positive (m >= 2)");
  return 106L * sqrt_m(m, p) / log_m(m, p);
}

Interval alpha_max(long m, mpfr_prec_t p) { return ipow(log_m(m, p), 3) / num(8, p); }

Interval low_degree_cap(long m, mpfr_prec_t p) {
  require(m >= 2, "log m must be positive (m >= 2)");
  return 16L * sqrt_m(m, p) / ipow(log_m(m, p), 3);
}

Interval clique_order_cap(long m, mpfr_prec_t p) { return 27L * sqrt_m(m, p) + low_degree_cap(m, p); }

}  // namespace terms

LogQty bound_erdos_szekeres(long n, mpfr_prec_t precision) {
  require(n >= 1, "Erdos-Szekeres bound needs n >= 1");
  return LogQty(num(2 * n, precision));
}

LogQty bound_erdos_lower(long n, mpfr_prec_t precision) {
  require(n > 2, "Erdos lower bound needs n > 2");
  return LogQty(rat(n, 2, precision));
}

LogQty bound_sudakov(long m, mpfr_prec_t precision) {
  require(m >= 1, "edge bound needs m >= 1");
  return LogQty(250L * terms::sqrt_m(m, precision));
}

LogQty bound_alon(const mpz_class& h, long p, long k, long r, mpfr_prec_t precision) {
  require(r >= 1, "bound needs r >= 1 (use the edgeless branch for r = 0)");
  require(h > r, "bound needs r < h");
  require(p >= 2, "bound needs clique order p >= 2");
  require(k >= 2, "bound needs chromatic number k >= 2");
  const mpfr_prec_t pr = precision;
  const Interval pi = num(p, pr);
  const Interval lnp = ln(pi);
  const Interval exponent = rat((2 * r - k + 2) * (k - 1), 2, pr);
  Interval value = exponent * log2(100L * pi / lnp) + r * log2(Interval::from_integer(h, pr));
  if (k > r) value = value + log2(lnp);
  return LogQty(std::move(value));
}

Json AlphaTrace::to_json() const {
  Json stages_json = Json::array();
  for (const auto& s : stages) {
    stages_json.push_back({{"i", s.index},
                           {"alpha", ev(s.alpha)},
                           {"alpha_inv_cbrt", ev(s.inv_cbrt)},
                           {"partial_sum", ev(s.partial_sum)},
                           {"y_exponent_over_sqrt_m", ev(s.y_coefficient)},
                           {"growth", verdict_string(s.growth)},
                           {"amplified", s.amplified}});
  }
  return Json{{"m", m}, {"threshold", ev(threshold)}, {"stages", stages_json}};
}

AlphaTrace alpha_sequence(long m, mpfr_prec_t precision) {
  require(m >= 2, "alpha sequence needs m >= 2");
  const mpfr_prec_t p = precision;
  AlphaTrace trace;
  trace.m = m;
  trace.threshold = terms::alpha_max(m, p);

  AlphaStage stage;
  stage.index = 1;
  stage.alpha = num(27, p);
  stage.inv_cbrt = num(1, p) / cbrt(stage.alpha);
  stage.partial_sum = stage.inv_cbrt;
  stage.y_coefficient = num(196, p);
  stage.growth = Tri::True;

  // The sequence is doubly exponential; a handful of stages exceeds any threshold.
  for (int guard = 0; guard < 16; ++guard) {
    const Tri below = less(stage.alpha, trace.threshold);
    if (below == Tri::Indecisive) throw PrecisionError("alpha stage vs threshold indecisive");
    stage.amplified = below == Tri::True;
    trace.stages.push_back(stage);
    if (!stage.amplified) break;

    AlphaStage next;
    next.index = stage.index + 1;
    next.alpha = exp2(2L * cbrt(stage.alpha));
    next.inv_cbrt = num(1, p) / cbrt(next.alpha);
    next.partial_sum = stage.partial_sum + next.inv_cbrt;
    next.y_coefficient = stage.y_coefficient - 120L * stage.inv_cbrt;
    next.growth = greater_equal(27L * next.alpha, 64L * stage.alpha);
    stage = std::move(next);
  }
  return trace;
}

mpz_class max_admissible_order(long m, mpfr_prec_t precision) {
  const Interval bound = exp2(terms::order_exponent(m, precision)) + 27L * terms::sqrt_m(m, precision);
  return bound.floor_lo();
}

HypothesisReport verify_main_arithmetic(long m, const mpz_class& n, const PrecisionPolicy& policy) {
  require(m >= 2, "main-theorem arithmetic needs m >= 2 (log m > 0)");
  require(n >= 1, "main-theorem arithmetic needs n >= 1");

  return evaluate_with_precision(
      [&](mpfr_prec_t p) {
        HypothesisReport rep("t4");
        const Interval s = terms::sqrt_m(m, p);
        const Interval L = terms::log_m(m, p);
        const Interval E = terms::order_exponent(m, p);

        // 2^(106 sqrt m / log m) >= n - 27 sqrt m
        {
          const Interval gap = Interval::from_integer(n, p) - 27L * s;
          Tri t;
          if (mpfr_cmp_ui(gap.hi(), 1) <= 0)
            t = Tri::True;
          else if (mpfr_sgn(gap.lo()) > 0)
            t = less_equal(log2(gap), E);
          else
            t = Tri::Indecisive;
          rep.add("precondition.order", "2^(106 sqrt(m)/log m) >= n - 27 sqrt(m)", t,
                  {{"n", str(n)}, {"exponent", ev(E)}});
        }

        // n < 125 sqrt m  =>  R <= 2^(2n) <= 2^(250 sqrt m)
        const bool small_order = mpz_class(n * n) < mpz_class(15625) * m;
        rep.add(Clause{"reduction.small_order",
                       "n < 125 sqrt(m), so R(G1,G2) <= R(K_n) <= 2^(2n) <= 2^(250 sqrt(m))",
                       tri(small_order),
                       {{"n", str(n)}},
                       small_order});
        const bool chain_gating = !small_order;
        auto chain = [&](std::string id, std::string text, Tri t, Json e = Json::object()) {
          rep.add(Clause{"chain." + std::move(id), std::move(text), t, std::move(e), chain_gating});
        };

        chain("base.exponent_identity", "250 - 2*27 = 196, i.e. 4^(-27 sqrt m) 2^(250 sqrt m) = 2^(196 sqrt m)",
              tri(250 - 2 * 27 == 196));

        // |Y_1| >= C(2k,k)^(-1) N - 2k >= 2^(196 sqrt m) with k = ceil(27 sqrt m), N = 2^(250 sqrt m)
        {
          const mpz_class k = ceil_scaled_sqrt(mpq_class(27), m);
          const unsigned long ku = k.get_ui();
          const Interval log_binom = log2(Interval::from_integer(binomial(2 * ku, ku), p));
          const Interval a = 250L * s - log_binom;
          const Interval tail = Interval::from_integer(mpz_class(2 * k), p) * exp2(-a);
          Tri t = Tri::Indecisive;
          if (mpfr_cmp_ui(tail.hi(), 1) < 0) {
            const Interval log_y = a + log2(num(1, p) - tail);
            t = greater_equal(log_y, 196L * s);
            rep.add(Clause{"chain.base.size",
                           "C(2k,k)^(-1) 2^(250 sqrt m) - 2k >= 2^(196 sqrt m), k = ceil(27 sqrt m)",
                           t,
                           {{"k", str(k)}, {"log2_Y1", ev(log_y)}, {"target", ev(196L * s)}},
                           chain_gating});
          } else {
            chain("base.size", "C(2k,k)^(-1) 2^(250 sqrt m) - 2k >= 2^(196 sqrt m), k = ceil(27 sqrt m)",
                  Tri::False, {{"k", str(k)}});
          }
        }

        const AlphaTrace trace = alpha_sequence(m, p);
        for (const auto& st : trace.stages) {
          const std::string tag = "alpha[" + std::to_string(st.index) + "]";
          chain(tag + ".growth", "alpha_(i+1) >= (4/3)^3 alpha_i", st.growth, {{"alpha", ev(st.alpha)}});
          chain(tag + ".y_floor", "|Y_i| >= 2^(36 sqrt m)", greater_equal(st.y_coefficient, num(36, p)),
                {{"y_exponent_over_sqrt_m", ev(st.y_coefficient)}});
          if (st.amplified)
            chain(tag + ".lemma4_y", "|Y_i| >= 2^(125 alpha_i^(-1/3) sqrt m) before amplifying",
                  greater_equal(st.y_coefficient, 125L * st.inv_cbrt));
        }
        const AlphaStage& last = trace.stages.back();
        chain("alpha.sum", "sum_j alpha_j^(-1/3) <= 4/3",
              less_equal(3L * last.partial_sum, num(4, p)), {{"sum", ev(last.partial_sum)}});

        // final amplification at alpha = log^3 m / 8 brings |X| to m^(3/2)
        const bool base_suffices = m <= 27;
        rep.add(Clause{"chain.final.base_suffices", "27 sqrt(m) >= m^(3/2), no final amplification needed",
                       tri(base_suffices), Json::object(), false});
        const bool final_gating = chain_gating && !base_suffices;
        auto fin = [&](std::string id, std::string text, Tri t, Json e = Json::object()) {
          rep.add(Clause{"chain.final." + std::move(id), std::move(text), t, std::move(e), final_gating});
        };
        fin("alpha_in_range", "log^3 m / 8 >= 27 (amplification admissible at the final alpha)", tri(m >= 64),
            {{"threshold", ev(trace.threshold)}});
        // The written form uses only the floor 2^(36 sqrt m) for |Y|, which needs m >= 2^(250/36).
        rep.add(Clause{"chain.final.y_floor_form",
                       "36 sqrt(m) >= 125 alpha^(-1/3) sqrt(m) at alpha = log^3 m / 8, i.e. 36 log m >= 250",
                       greater_equal(36L * L, num(250, p)), {{"log_m", ev(L)}}, false});
        fin("y_hypothesis", "|Y| >= 2^(125 alpha^(-1/3) sqrt m) at alpha = log^3 m / 8, with the tracked |Y| exponent",
            greater_equal(last.y_coefficient, num(250, p) / L),
            {{"y_exponent_over_sqrt_m", ev(last.y_coefficient)}, {"needed", ev(num(250, p) / L)}});
        {
          const Interval twice_cbrt = 2L * cbrt(trace.threshold);
          const Tri overlap = equal(twice_cbrt, L) == Tri::False ? Tri::False : Tri::True;
          fin("x_identity", "2 (log^3 m / 8)^(1/3) = log m, so 2^(2 alpha^(1/3)) sqrt(m) = m^(3/2)", overlap,
              {{"two_cbrt_alpha", ev(twice_cbrt)}, {"log_m", ev(L)}});
        }
        {
          const Interval y_final = last.y_coefficient - 240L * (num(1, p) / L);
          fin("y_result", "|Y'| >= 2^(36 sqrt m) after the final amplification",
              greater_equal(y_final, num(36, p)), {{"y_exponent_over_sqrt_m", ev(y_final)}});
        }
        return rep;
      },
      policy);
}

HypothesisReport verify_main2_arithmetic(long m, long p, long l, const mpz_class& q, long k, long r,
                                         const PrecisionPolicy& policy) {
  require(m >= 27, "join-theorem arithmetic needs m >= 27");
  require(p >= 1 && l >= 0 && q >= 0 && r >= 0 && k >= 0, "negative parameter");

  return evaluate_with_precision(
      [&](mpfr_prec_t pr) {
        HypothesisReport rep("t5");
        const Interval s = terms::sqrt_m(m, pr);
        const Interval L = terms::log_m(m, pr);
        const Interval L3 = ipow(L, 3);
        const Interval E = terms::order_exponent(m, pr);
        const Interval target = 36L * s;

        rep.add("pre.p", "p <= 27 sqrt(m) + 16 sqrt(m)/log^3 m",
                less_equal(num(p, pr), terms::clique_order_cap(m, pr)), {{"p", p}});
        rep.add("pre.l", "l <= 27 sqrt(m)", tri(mpz_class(l) * l <= mpz_class(729) * m), {{"l", l}});
        rep.add("pre.q", "q <= 2^(106 sqrt(m)/log m)", integer_at_most_power(q, E), {{"q_bits", mpz_sizeinbase(q.get_mpz_t(), 2)}});
        // r < log m / 4  <=>  2^(4r) < m
        const bool r_ok = (mpz_class(1) << static_cast<mp_bitcnt_t>(4 * r)) < m;
        rep.add("pre.r", "r < log m / 4", tri(r_ok), {{"r", r}});
        if (!r_ok) {
          rep.note("r violates the degree precondition; inequality chain not evaluated");
          return rep;
        }
        rep.add("chain.p_linear", "27 sqrt(m) + 16 sqrt(m)/log^3 m <= 40 sqrt(m)",
                less_equal(num(27, pr) + num(16, pr) / L3, num(40, pr)));

        if (r == 0) {
          rep.add("r0.coefficient", "100 (27 sqrt(m) + 16 sqrt(m)/log^3 m) < 4000 sqrt(m)",
                  less(100L * (num(27, pr) + num(16, pr) / L3), num(4000, pr)));
          rep.add("r0.log4000", "log 4000 <= 13", less_equal(log2(num(4000, pr)), num(13, pr)));
          const Interval chain_exp = num(13, pr) + L / num(2, pr) + E;
          rep.add("r0.exponent", "13 + log(m)/2 + 106 sqrt(m)/log m < 36 sqrt(m)", less(chain_exp, target),
                  {{"lhs", ev(chain_exp)}, {"rhs", ev(target)}});
          const mpz_class prod = mpz_class(100) * p * (q > 0 ? q : mpz_class(1));
          const Interval lhs = log2(Interval::from_integer(prod, pr));
          rep.add("r0.direct", "100 p q < 2^(36 sqrt(m))", less(lhs, target), {{"log2_100pq", ev(lhs)}});
          return rep;
        }

        rep.add("pre.k", "2 <= k <= r + 1", tri(k >= 2 && k <= r + 1), {{"k", k}});
        rep.add("r1.exponent_bound", "(2r-k+2)(k-1)/2 <= (r^2+r)/2", tri((2 * r - k + 2) * (k - 1) <= r * r + r));
        {
          // y = (ln p)^(-(r^2+r-2)/2)
          const long y_exp2 = r * r + r - 2;
          Json e = {{"exponent_times_2", -y_exp2}};
          if (p >= 2) e["log2_y"] = ev(rat(-y_exp2, 2, pr) * log2(ln(num(p, pr))));
          rep.add("r1.y_factor", "y = 1/(ln p)^((r^2+r-2)/2) <= 1", tri(y_exp2 == 0 || p >= 3), e);
        }
        if (q > r && p >= 2 && k >= 2) {
          const LogQty alon = bound_alon(q, p, k, r, pr);
          rep.add("r1.alon", "R(H-S, K_p) <= bound(q, p, k, r) < 2^(36 sqrt(m))", less(alon.log2(), target),
                  {{"log2_bound", alon.to_json()}});
        } else {
          rep.add("r1.alon", "R(H-S, K_p) <= bound(q, p, k, r) < 2^(36 sqrt(m))", Tri::False,
                  {{"reason", "bound needs q > r, p >= 2, k >= 2"}});
        }
        rep.add("r1.step_log4000", "log 4000 < 12", less(log2(num(4000, pr)), num(12, pr)));
        const Interval quarter = L / num(4, pr);
        rep.add("r1.step_r_square", "6(r^2+r) <= 12 log^2(m^(1/4))",
                less_equal(num(r * r + r, pr), 2L * ipow(quarter, 2)));
        rep.add("r1.step_r_linear", "106 r sqrt(m)/log m <= 26.5 sqrt(m)", less_equal(num(4 * r, pr), L));
        {
          const Interval lhs = rat(12, 16, pr) * ipow(L, 2) + L3 / num(32, pr);
          rep.add("r1.step_final", "(12/16) log^2 m + (1/32) log^3 m < 9.5 sqrt(m)", less(lhs, rat(19, 2, pr) * s),
                  {{"lhs", ev(lhs)}});
        }
        {
          const Interval lhs = rat(r * r + r, 2, pr) * log2(4000L * s) + r * E;
          rep.add("r1.total", "(r^2+r)/2 log(4000 sqrt m) + 106 r sqrt(m)/log m < 36 sqrt(m)", less(lhs, target),
                  {{"lhs", ev(lhs)}, {"rhs", ev(target)}});
        }
        {
          // The written substitution (27 sqrt m + 2^(106 sqrt m/log m) - m^(3/2))^r for q.
          const Interval written = 27L * s + exp2(E) - num(m, pr) * s;
          const Tri fits = less_equal(Interval::from_integer(q, pr), written);
          rep.add(Clause{"r1.written_q_substitution", "q <= 27 sqrt(m) + 2^(106 sqrt(m)/log m) - m^(3/2)", fits,
                         {{"q_bits", mpz_sizeinbase(q.get_mpz_t(), 2)}}, false});
          if (fits != Tri::True)
            rep.note("q exceeds the written substitution 27 sqrt(m) + 2^(106 sqrt(m)/log m) - m^(3/2); "
                     "the chain is evaluated with q itself");
        }
        rep.note("the last step is written as 2^(36^(sqrt m)); it is checked as 2^(36 sqrt(m))");
        return rep;
      },
      policy);
}

BoundResult bound_corollary_edges(long m1, long m2, const PrecisionPolicy& policy) {
  require(m1 >= 1 && m2 >= 1, "edge counts must be positive");
  const long m = std::max(m1, m2);
  HypothesisReport rep = evaluate_with_precision(
      [&](mpfr_prec_t p) {
        HypothesisReport r("c1");
        const auto [four_m, main_exp] = fallback_exponents(m, p);
        // 4m <= 250 sqrt(m)  <=>  16 m <= 62500
        const bool fallback = 16 * m <= 62500;
        r.add(Clause{"fallback", "4m <= 250 sqrt(m), so R <= R(K_2m) <= 2^(4m) <= 2^(250 sqrt m)", tri(fallback),
                     {{"m", m}, {"lhs", ev(four_m)}, {"rhs", ev(main_exp)}}, fallback});
        const bool main_gating = !fallback;
        if (m >= 2) {
          const Interval E = terms::order_exponent(m, p);
          const Interval gap = num(2 * m, p) - 27L * terms::sqrt_m(m, p);
          Tri t = mpfr_cmp_ui(gap.hi(), 1) <= 0 ? Tri::True
                  : mpfr_sgn(gap.lo()) > 0      ? less_equal(log2(gap), E)
                                                : Tri::Indecisive;
          r.add(Clause{"main.order", "2^(106 sqrt(m)/log m) >= 2m - 27 sqrt(m)", t, {{"exponent", ev(E)}},
                       main_gating});
        } else {
          r.add(Clause{"main.order", "2^(106 sqrt(m)/log m) >= 2m - 27 sqrt(m)", Tri::False,
                       {{"reason", "log m = 0"}}, main_gating});
        }
        r.add(Clause{"main.vertex_cap", "n <= 2m <= m^(3/2), so V_i = V(G_i) satisfies condition II", tri(m >= 4),
                     Json::object(), main_gating});
        r.add(Clause{"main.degree_counting",
                     "deleting alpha sqrt(m) highest-degree vertices leaves max degree <= 2 sqrt(m)/alpha",
                     Tri::True, Json::object(), main_gating});
        if (main_gating) {
          const HypothesisReport arith = verify_main_arithmetic(m, mpz_class(2 * m), policy);
          r.add(Clause{"main.arithmetic", "main-theorem arithmetic with n = 2m", arith.overall(),
                       {{"first_failure", arith.first_failure() ? arith.first_failure()->id : ""}}, true});
        }
        return r;
      },
      policy);
  return {bound_sudakov(m, rep.precision), std::move(rep)};
}

LogQty bound_corollary_vertices(long n, mpfr_prec_t precision) {
  require(n >= 1, "vertex bound needs n >= 1");
  return LogQty(250L * cbrt(num(n, precision)));
}

BoundResult bound_corollary_join(long m, long p, long l, const mpz_class& q, const PrecisionPolicy& policy) {
  require(m >= 27, "join corollary needs m >= 27");
  HypothesisReport rep = evaluate_with_precision(
      [&](mpfr_prec_t pr) {
        HypothesisReport r("c3");
        r.add("pre.p", "p <= 27 sqrt(m) + 16 sqrt(m)/log^3 m", less_equal(num(p, pr), terms::clique_order_cap(m, pr)),
              {{"p", p}});
        r.add("pre.l", "l <= 27 sqrt(m)", tri(mpz_class(l) * l <= mpz_class(729) * m), {{"l", l}});
        r.add("pre.q", "q <= 2^(106 sqrt(m)/log m)", integer_at_most_power(q, terms::order_exponent(m, pr)),
              {{"q_bits", mpz_sizeinbase(q.get_mpz_t(), 2)}});
        return r;
      },
      policy);
  if (rep.passed()) {
    // H = qK_1 has max degree 0 and S = {}, so only the r = 0 chain applies.
    const HypothesisReport chain = verify_main2_arithmetic(m, p, l, q, 1, 0, policy);
    rep.add("main2.arithmetic", "join-theorem chain with H = qK_1, S = {}", chain.overall(),
            {{"first_failure", chain.first_failure() ? chain.first_failure()->id : ""}});
  }
  return {bound_sudakov(m, rep.precision), std::move(rep)};
}

BoundResult bound_corollary_bipartite(long p, const mpz_class& q, const PrecisionPolicy& policy) {
  require(p > 27, "bipartite corollary needs p > 27 (log(p/27) > 0)");
  HypothesisReport rep = evaluate_with_precision(
      [&](mpfr_prec_t pr) {
        HypothesisReport r("c4");
        const Interval threshold = rat(53 * p, 27, pr) / log2(rat(p, 27, pr));
        r.add("pre.q", "q <= 2^(53p / (27 log(p/27)))", integer_at_most_power(q, threshold),
              {{"threshold_exponent", ev(threshold)}, {"q_bits", mpz_sizeinbase(q.get_mpz_t(), 2)}});
        // m = (p/27)^2 makes 27 sqrt(m) = p and 106 sqrt(m)/log m the threshold above.
        r.add("instantiation.m", "m = (p/27)^2 >= 27", tri(mpz_class(p) * p >= mpz_class(19683)), {{"p", p}});
        r.add("instantiation.l", "l = p <= 27 sqrt(m) = p", Tri::True);
        return r;
      },
      policy);
  return {LogQty(rat(250 * p, 27, rep.precision)), std::move(rep)};
}

std::pair<Interval, Interval> base_pair_exponents(long m, mpfr_prec_t precision) {
  const Interval s = terms::sqrt_m(m, precision);
  return {250L * s - 54L * s, 196L * s};
}

std::pair<Interval, Interval> fallback_exponents(long m, mpfr_prec_t precision) {
  return {num(4 * m, precision), 250L * terms::sqrt_m(m, precision)};
}

}  // namespace ramsey
