#include "ramsey/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ramsey/named_graphs.hpp"

namespace ramsey {

namespace {

std::string decimal(const Rational& q) { return Interval::from_rational(q, 128).lo_string(15); }

Rational rational_lower(const Interval& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.lo());
  return q;
}

/// Δ <= 2 sqrt(m)/alpha  <=>  (Δ alpha)^2 <= 4m.
bool degree_within(int delta, const Rational& alpha, long m) {
  const Rational d = alpha * delta;
  return d * d <= 4 * m;
}

Json vertex_list(const VertexSet& s) { return s.to_vector(); }

}  // namespace

PeelResult peel_high_degree(const Graph& g, long budget) {
  if (budget < 0) throw std::invalid_argument("peeling budget must be non-negative");
  const int n = g.order();
  const long steps = std::min<long>(budget, n);
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  VertexSet alive = Bitset::full(n);
  VertexSet u(n);
  for (long i = 0; i < steps; ++i) {
    Vertex best = -1;
    alive.for_each([&](int v) {
      if (best < 0 || deg[v] > deg[best]) best = v;
    });
    alive.reset(best);
    u.set(best);
    (g.neighbors(best) & alive).for_each([&](int w) { --deg[w]; });
  }
  return {u, delete_vertices(g, u)};
}

std::vector<Rational> default_alpha_samples(long m) {
  if (m < 2) return {};
  const Rational top = rational_lower(terms::alpha_max(m, 128));
  if (top < 27) return {};
  std::vector<Rational> out{Rational(27)};
  const double ratio = top.get_d() / 27.0;
  for (int i = 1; i <= 8; ++i) {
    Rational a(27.0 * std::pow(ratio, i / 9.0));
    a = std::clamp(a, Rational(27), top);
    if (a > out.back()) out.push_back(a);
  }
  if (top > out.back()) out.push_back(top);
  return out;
}

HypothesisReport check_condition_I(const Graph& g1, const Graph& g2, long m, const ConditionIOptions& options) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  HypothesisReport rep("I");
  const Graph* graphs[2] = {&g1, &g2};
  const std::optional<VertexSet>* fixed[2] = {&options.u1, &options.u2};
  for (int i = 0; i < 2; ++i) {
    const std::string tag = "G" + std::to_string(i + 1);
    if (fixed[i]->has_value() && (*fixed[i])->size() != graphs[i]->order())
      throw std::out_of_range("fixed U does not match the order of " + tag);
    rep.add("pre.no_isolated." + tag, tag + " has no isolated vertices",
            tri(graphs[i]->order() >= 1 && !graphs[i]->has_isolated_vertex()), {{"order", graphs[i]->order()}});
  }

  const std::vector<Rational> samples =
      options.alpha_samples ? *options.alpha_samples : default_alpha_samples(m);
  if (samples.empty()) {
    rep.add("range", "alpha range [27, log^3 m / 8] is empty, condition holds vacuously", Tri::True, {{"m", m}});
  }
  for (std::size_t j = 0; j < samples.size(); ++j) {
    const Rational& alpha = samples[j];
    if (alpha <= 0) throw std::invalid_argument("alpha samples must be positive");
    const mpz_class budget = floor_scaled_sqrt(alpha, m);
    for (int i = 0; i < 2; ++i) {
      const std::string tag = "G" + std::to_string(i + 1);
      const Graph& g = *graphs[i];
      VertexSet u = fixed[i]->has_value() ? **fixed[i] : peel_high_degree(g, budget.get_si()).u;
      const int delta = delete_vertices(g, u).graph.max_degree();
      const int size = u.count();
      const bool size_ok = Rational(size) * size <= alpha * alpha * m;
      const bool deg_ok = degree_within(delta, alpha, m);
      rep.add("alpha[" + std::to_string(j) + "]." + tag,
              "|U_" + std::to_string(i + 1) + "| <= alpha sqrt(m) and max degree of " + tag + " - U <= 2 sqrt(m)/alpha",
              tri(size_ok && deg_ok),
              {{"alpha", decimal(alpha)},
               {"budget", budget.get_str()},
               {"u_size", size},
               {"core_max_degree", delta},
               {"u", vertex_list(u)}});
    }
  }
  for (int i = 0; i < 2; ++i) {
    const std::string tag = "G" + std::to_string(i + 1);
    const bool few_edges = graphs[i]->edge_count() <= static_cast<std::size_t>(m);
    rep.add(Clause{"counting." + tag,
                   "e(" + tag + ") <= m, so peeling floor(alpha sqrt m) vertices meets the degree bound for every alpha",
                   tri(few_edges),
                   {{"edges", graphs[i]->edge_count()}},
                   false});
  }
  return rep;
}

HypothesisReport check_condition_II(const Graph& g1, const Graph& g2, const VertexSet& v1, const VertexSet& v2,
                                    long m, const LogQty& r_g1_minus_v1, const LogQty& r_g2_minus_v2,
                                    const PrecisionPolicy& policy) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (v1.size() != g1.order() || v2.size() != g2.order()) throw std::out_of_range("V_i does not match G_i");
  const mpz_class m3 = mpz_class(m) * m * m;
  return evaluate_with_precision(
      [&](mpfr_prec_t p) {
        HypothesisReport rep("II");
        const Interval cap = 36L * terms::sqrt_m(m, p);
        const VertexSet* vs[2] = {&v1, &v2};
        for (int i = 0; i < 2; ++i) {
          const int size = vs[i]->count();
          rep.add("size.V" + std::to_string(i + 1), "|V_" + std::to_string(i + 1) + "| <= m^(3/2)",
                  tri(mpz_class(size) * size <= m3), {{"size", size}, {"v", vertex_list(*vs[i])}});
        }
        rep.add("ramsey.G1-V1", "R(G1 - V1, G2) <= 2^(36 sqrt(m))", less_equal(r_g1_minus_v1.log2(), cap),
                {{"log2_bound", r_g1_minus_v1.to_json()}, {"log2_cap", interval_json(cap)}});
        rep.add("ramsey.G2-V2", "R(G1, G2 - V2) <= 2^(36 sqrt(m))", less_equal(r_g2_minus_v2.log2(), cap),
                {{"log2_bound", r_g2_minus_v2.to_json()}, {"log2_cap", interval_json(cap)}});
        return rep;
      },
      policy);
}

LowDegreeCore find_low_degree_core(const Graph& h, long m) {
  if (m < 27) throw std::invalid_argument("low-degree core needs m >= 27");
  const int n = h.order();
  // Δ < log(m)/4  <=>  2^(4Δ) < m
  auto small = [m](int delta) { return (mpz_class(1) << static_cast<mp_bitcnt_t>(4 * delta)) < m; };
  std::vector<int> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = h.degree(v);
  VertexSet alive = Bitset::full(n);
  VertexSet s(n);
  auto current_max = [&] {
    int d = 0;
    alive.for_each([&](int v) { d = std::max(d, deg[v]); });
    return d;
  };
  int delta = current_max();
  while (!small(delta)) {
    Vertex best = -1;
    alive.for_each([&](int v) {
      if (best < 0 || deg[v] > deg[best]) best = v;
    });
    alive.reset(best);
    s.set(best);
    (h.neighbors(best) & alive).for_each([&](int w) { --deg[w]; });
    delta = current_max();
  }

  LowDegreeCore out{s, delta, HypothesisReport("low_degree_core")};
  out.report.add("core.delta", "max degree of H - S < log(m)/4", tri(small(delta)), {{"max_degree", delta}});
  // |S| <= m^(3/2) - 27 sqrt(m) = sqrt(m)(m - 27)  <=>  |S|^2 <= m (m-27)^2
  const long size = s.count();
  out.report.add("core.size", "|S| <= m^(3/2) - 27 sqrt(m)",
                 tri(mpz_class(size) * size <= mpz_class(m) * (m - 27) * (m - 27)),
                 {{"size", size}, {"s", vertex_list(s)}});
  return out;
}

namespace {

std::vector<int> greedy_largest_first(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<int> col(n, -1);
  for (Vertex v : order) {
    std::vector<char> taken(n + 1, 0);
    g.neighbors(v).for_each([&](int w) {
      if (col[w] >= 0) taken[col[w]] = 1;
    });
    int c = 0;
    while (taken[c]) ++c;
    col[v] = c;
  }
  return col;
}

/// DSATUR backtracking for a proper colouring with at most k colours.
class ExactColoring {
public:
  ExactColoring(const Graph& g, int k) : g_(g), k_(k), col_(g.order(), -1) {}

  std::optional<std::vector<int>> solve() {
    if (extend(0, 0)) return col_;
    return std::nullopt;
  }

private:
  bool extend(int colored, int used) {
    const int n = g_.order();
    if (colored == n) return true;
    Vertex pick = -1;
    int best_sat = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (col_[v] >= 0) continue;
      unsigned mask = 0;
      g_.neighbors(v).for_each([&](int w) {
        if (col_[w] >= 0) mask |= 1U << col_[w];
      });
      const int sat = std::popcount(mask);
      if (sat > best_sat || (sat == best_sat && g_.degree(v) > g_.degree(pick))) {
        pick = v;
        best_sat = sat;
      }
    }
    const int limit = std::min(used + 1, k_);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      g_.neighbors(pick).for_each([&](int w) { ok = ok && col_[w] != c; });
      if (!ok) continue;
      col_[pick] = c;
      if (extend(colored + 1, std::max(used, c + 1))) return true;
      col_[pick] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> col_;
};

}  // namespace

DegreeProfile degree_profile_coloring(const Graph& g) {
  const int n = g.order();
  DegreeProfile prof;
  if (n == 0) {
    prof.exact = true;
    return prof;
  }
  std::vector<int> col = greedy_largest_first(g);
  int k = *std::max_element(col.begin(), col.end()) + 1;
  prof.exact = n <= 20;
  if (prof.exact) {
    for (int trial = g.edge_count() ? 2 : 1; trial < k; ++trial) {
      if (auto found = ExactColoring(g, trial).solve()) {
        col = *found;
        k = trial;
        break;
      }
    }
  }

  // Class of the lowest-index max-degree vertex first, the rest by smallest member.
  Vertex top = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(top)) top = v;
  std::vector<int> rename(k, -1);
  int next = 0;
  rename[col[top]] = next++;
  for (Vertex v = 0; v < n; ++v)
    if (rename[col[v]] < 0) rename[col[v]] = next++;
  prof.k = k;
  prof.color_of.resize(n);
  prof.classes.assign(k, {});
  for (Vertex v = 0; v < n; ++v) {
    prof.color_of[v] = rename[col[v]];
    prof.classes[prof.color_of[v]].push_back(v);
  }
  for (Vertex v = 0; v < n; ++v)
    if (prof.color_of[v] != 0) prof.r = std::max(prof.r, g.degree(v));
  for (const Edge& e : g.edges())
    if (prof.color_of[e.u] == prof.color_of[e.v]) throw std::logic_error("degree_profile_coloring: improper colouring");
  return prof;
}

Json Main2Certificates::to_json() const {
  return Json{{"g1_order", g1.order()},
              {"g2_order", g2.order()},
              {"g2_edges", g2.edge_count()},
              {"u2", vertex_list(u2)},
              {"v1", vertex_list(v1)},
              {"v2", vertex_list(v2)},
              {"log2_R_G1_minus_V1", r_g1_minus_v1.to_json()},
              {"log2_R_G2_minus_V2", r_g2_minus_v2.to_json()}};
}

Main2Check check_main2_hypotheses(long p, long l, const Graph& h, long m, const PrecisionPolicy& policy) {
  if (m < 27) throw std::invalid_argument("join theorem needs m >= 27");
  if (p < 1 || l < 0) throw std::invalid_argument("need p >= 1 and l >= 0");

  const LowDegreeCore core = find_low_degree_core(h, m);
  const Subgraph rest = delete_vertices(h, core.s);
  const long q = rest.graph.order();
  const int r = rest.graph.max_degree();
  const DegreeProfile prof = degree_profile_coloring(rest.graph);
  const long k = r == 0 ? 1 : std::min<long>(prof.k, r + 1);

  Main2Check out;
  out.report = evaluate_with_precision(
      [&](mpfr_prec_t pr) {
        HypothesisReport rep("t5");
        rep.add("pre.p", "p <= 27 sqrt(m) + 16 sqrt(m)/log^3 m",
                less_equal(Interval::exact(p, pr), terms::clique_order_cap(m, pr)), {{"p", p}});
        rep.add("pre.l", "l <= 27 sqrt(m)", tri(mpz_class(l) * l <= mpz_class(729) * m), {{"l", l}});
        rep.add("pre.delta_h", "max degree of H <= 16 sqrt(m)/log^3 m",
                less_equal(Interval::exact(h.max_degree(), pr), terms::low_degree_cap(m, pr)),
                {{"max_degree", h.max_degree()}});
        const Interval E = terms::order_exponent(m, pr);
        rep.add("pre.order_h", "n(H) <= 2^(106 sqrt(m)/log m)",
                h.order() <= 1 ? Tri::True : less_equal(log2(Interval::exact(h.order(), pr)), E),
                {{"order", h.order()}});
        rep.append(core.report, "");
        return rep;
      },
      policy);
  out.report.note("H - S: q = " + std::to_string(q) + ", max degree r = " + std::to_string(r) +
                  ", colouring k = " + std::to_string(prof.k) + (prof.exact ? " (exact)" : " (upper bound)") +
                  ", degree outside the first class = " + std::to_string(prof.r));
  if (!out.report.passed()) return out;

  const HypothesisReport chain = verify_main2_arithmetic(m, p, l, mpz_class(q), k, r, policy);
  out.report.append(chain, "arith.");
  out.report.precision = std::max(out.report.precision, chain.precision);
  if (!out.report.passed()) return out;

  const mpfr_prec_t pr = out.report.precision;
  const Graph g1 = complete_graph(static_cast<int>(p));
  const Graph g2 = join(complete_graph(static_cast<int>(l)), h);
  VertexSet u2(g2.order());
  for (Vertex v = 0; v < l; ++v) u2.set(v);
  VertexSet v2 = u2;
  core.s.for_each([&](int v) { v2.set(v + static_cast<int>(l)); });
  LogQty r2(Interval::exact(0, pr));
  if (p >= 2) {
    if (r == 0)
      r2 = LogQty(log2(Interval::from_integer(mpz_class(100) * p * std::max<long>(q, 1), pr)));
    else
      r2 = bound_alon(mpz_class(q), p, k, r, pr);
  }
  out.certificates = Main2Certificates{g1, g2, u2, Bitset::full(g1.order()), v2, LogQty(Interval::exact(0, pr)), r2};
  return out;
}

CoreProvider peeled_core_provider(const Graph& g1, const Graph& g2, long m) {
  return [g1, g2, m](const Rational& alpha) {
    const long budget = floor_scaled_sqrt(alpha, m).get_si();
    return std::pair<Graph, Graph>{peel_high_degree(g1, budget).core.graph, peel_high_degree(g2, budget).core.graph};
  };
}

}  // namespace ramsey
