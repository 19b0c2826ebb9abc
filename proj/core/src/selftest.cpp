#include "ramsey/selftest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <thread>

#include "ramsey/bounds.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph_io.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/named_graphs.hpp"
#include "ramsey/oracle.hpp"

namespace ramsey {

namespace {

/// Runs body(i) for i in [0, count) on up to `threads` workers; results go to per-index slots.
void parallel_for(int count, int threads, const std::function<void(int)>& body) {
  threads = std::clamp(threads, 1, std::max(1, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) body(i);
    });
}

PrecisionPolicy policy_for(const SelftestOptions& o) { return {128, o.max_precision}; }

TwoColoring coloring_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> blue;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((mask >> bit) & 1U) blue.emplace_back(i, j);
  return TwoColoring(Graph(n, blue));
}

// ---------------------------------------------------------------- base pair

SuiteResult suite_base_pair(const SelftestOptions& o) {
  const std::vector<PairBudget> budgets = {{1, 1}, {1, 2}, {2, 1}, {1, 3}, {2, 2}, {3, 1}};
  constexpr int kChunks = 64;
  Json per_n = Json::array();
  Json failures = Json::array();
  long total_checks = 0;
  long total_failures = 0;

  for (int n = 2; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    const std::uint64_t colorings = std::uint64_t{1} << pairs;
    std::vector<long> checks(kChunks, 0);
    std::vector<long> bad(kChunks, 0);
    std::vector<Json> first_bad(kChunks);
    parallel_for(kChunks, o.threads, [&](int chunk) {
      const std::uint64_t lo = colorings * chunk / kChunks;
      const std::uint64_t hi = colorings * (chunk + 1) / kChunks;
      for (std::uint64_t mask = lo; mask < hi; ++mask) {
        const TwoColoring c = coloring_from_mask(n, mask);
        for (const PairBudget& b : budgets) {
          ++checks[chunk];
          const BasePairResult r = find_base_pair(c, b);
          const PairCheck pc = validate_mono_pair(c, r.pair.x, r.pair.y);
          const bool color_ok = pc.status != PairCheck::Status::Violated &&
                                (pc.status == PairCheck::Status::Vacuous || pc.color == r.pair.color);
          const long x = r.pair.x.count();
          const bool size_ok = r.partial || (r.pair.color == Color::Red ? x == b.k : x == b.l);
          // |Y| >= N / C(k+l,k) - k - l  <=>  (|Y| + k + l) C(k+l,k) >= N
          long binom = 1;
          for (long i = 1; i <= b.k; ++i) binom = binom * (b.l + i) / i;
          const bool bound_ok = (r.pair.y.count() + b.k + b.l) * binom >= n;
          const bool partial_ok = !r.partial || n - (b.k + b.l) * binom <= 0;
          if (!(color_ok && size_ok && bound_ok && partial_ok)) {
            if (bad[chunk]++ == 0)
              first_bad[chunk] = {{"n", n}, {"mask", mask}, {"k", b.k}, {"l", b.l}};
          }
        }
      }
    });
    long nc = 0;
    long nb = 0;
    for (int i = 0; i < kChunks; ++i) {
      nc += checks[i];
      nb += bad[i];
      if (bad[i] && failures.size() < 10) failures.push_back(first_bad[i]);
    }
    per_n.push_back({{"n", n}, {"colorings", colorings}, {"checks", nc}, {"failures", nb}});
    total_checks += nc;
    total_failures += nb;
  }

  // Worked examples.
  Json examples = Json::array();
  bool examples_ok = true;
  {
    const BasePairResult r = find_base_pair(TwoColoring::uniform(6, Color::Red), {2, 2});
    const bool ok = r.pair.color == Color::Red && r.pair.x.count() == 2 && r.pair.y.count() == 4;
    examples.push_back({{"case", "all-red K6, k = l = 2"}, {"x", r.pair.x.count()}, {"y", r.pair.y.count()}, {"ok", ok}});
    examples_ok = examples_ok && ok;
  }
  {
    const BasePairResult r = find_base_pair(pentagon_coloring(), {1, 1});
    const bool ok = r.pair.x.count() == 1 && r.pair.y.count() == 2 && is_valid_mono_pair(pentagon_coloring(), r.pair);
    examples.push_back({{"case", "pentagon, k = l = 1"}, {"x", r.pair.x.count()}, {"y", r.pair.y.count()}, {"ok", ok}});
    examples_ok = examples_ok && ok;
  }

  SuiteResult s;
  s.name = "base-pair";
  s.passed = total_failures == 0 && examples_ok;
  s.summary = std::to_string(total_checks) + " pair checks over all colourings of K_2..K_7, " +
              std::to_string(total_failures) + " failures";
  s.report = {{"per_n", per_n}, {"failures", failures}, {"examples", examples}, {"checks", total_checks}};
  return s;
}

// ---------------------------------------------------------------- oracle

bool is_five_cycle(const Graph& g) {
  if (g.order() != 5 || g.edge_count() != 5) return false;
  for (Vertex v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  // 2-regular on 5 vertices is connected unless it splits into a triangle and an edge, which is not 2-regular.
  return true;
}

bool witness_avoids(const TwoColoring& w, const Graph& g1, const Graph& g2) {
  return greedy_embed(w, g1, Color::Blue).status == SearchStatus::Failure &&
         greedy_embed(w, g2, Color::Red).status == SearchStatus::Failure;
}

struct OraclePair {
  std::string name;
  Graph g1;
  Graph g2;
  int n_max;
};

std::vector<OraclePair> oracle_pairs() {
  return {{"K3,K3", complete_graph(3), complete_graph(3), 7}, {"P3,P3", path_graph(3), path_graph(3), 5}};
}

SuiteResult suite_oracle(const SelftestOptions& o) {
  OracleOptions oo;
  oo.threads = o.threads;
  Json cases = Json::array();
  bool ok = true;

  const ExactResult k3 = exact_ramsey(complete_graph(3), complete_graph(3), 7, oo);
  {
    const bool witness_ok = k3.witness && witness_avoids(*k3.witness, complete_graph(3), complete_graph(3)) &&
                            is_five_cycle(k3.witness->graph(Color::Blue)) &&
                            is_five_cycle(k3.witness->graph(Color::Red));
    const ArrowsResult at6 = arrows(6, complete_graph(3), complete_graph(3), oo);
    const ArrowsResult at5 = arrows(5, complete_graph(3), complete_graph(3), oo);
    const ArrowsResult at7 = arrows(7, complete_graph(3), complete_graph(3), oo);
    const bool pass = k3.status == ExactResult::Status::Exact && k3.value == 6 && witness_ok &&
                      at6.verdict == Arrow::True && at6.stats.exhaustive && at5.verdict == Arrow::False &&
                      at7.verdict == Arrow::True;
    ok = ok && pass;
    cases.push_back({{"case", "K3,K3"}, {"result", k3.to_json()}, {"witness_five_cycles", witness_ok},
                     {"arrows_5", std::string(to_string(at5.verdict))}, {"arrows_6", std::string(to_string(at6.verdict))},
                     {"arrows_7", std::string(to_string(at7.verdict))}, {"ok", pass}});
  }
  {
    const ExactResult p3 = exact_ramsey(path_graph(3), path_graph(3), 5, oo);
    const bool witness_ok = p3.witness && witness_avoids(*p3.witness, path_graph(3), path_graph(3));
    const ArrowsResult at4 = arrows(4, path_graph(3), path_graph(3), oo);
    const bool pass =
        p3.status == ExactResult::Status::Exact && p3.value == 3 && witness_ok && at4.verdict == Arrow::True;
    ok = ok && pass;
    cases.push_back({{"case", "P3,P3"}, {"result", p3.to_json()}, {"arrows_4", std::string(to_string(at4.verdict))},
                     {"ok", pass}});
  }
  {
    const ArrowsResult k2 = arrows(1, complete_graph(2), complete_graph(2), oo);
    const ExactResult e = exact_ramsey(complete_graph(2), complete_graph(2), 3, oo);
    const bool pass = k2.verdict == Arrow::False && e.value == 2 && e.status == ExactResult::Status::Exact;
    ok = ok && pass;
    cases.push_back({{"case", "K2,K2"}, {"arrows_1", std::string(to_string(k2.verdict))}, {"value", e.value}, {"ok", pass}});
  }

  SuiteResult s;
  s.name = "oracle";
  s.passed = ok;
  s.summary = "R(K3,K3) = " + std::to_string(k3.value) + " with a two-pentagon witness; R(P3,P3) = 3; R(K2,K2) = 2";
  s.report = {{"cases", cases}};
  return s;
}

// ---------------------------------------------------------------- peeling

Graph random_graph(int n, long edges, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
  for (long i = 0; i < edges; ++i) {
    std::uniform_int_distribution<std::size_t> d(i, all.size() - 1);
    std::swap(all[i], all[d(rng)]);
  }
  all.resize(edges);
  return Graph(n, all);
}

SuiteResult suite_peeling(const SelftestOptions& o) {
  constexpr int kGraphs = 1000;
  const std::vector<long> alphas = {1, 2, 4, 8, 27};
  std::vector<Json> rows(kGraphs);
  std::vector<int> bad(kGraphs, 0);
  parallel_for(kGraphs, o.threads, [&](int i) {
    std::mt19937_64 rng(o.seed * 1000003ULL + static_cast<std::uint64_t>(i));
    const int n = std::uniform_int_distribution<int>(2, 60)(rng);
    const long max_edges = std::min<long>(400, static_cast<long>(n) * (n - 1) / 2);
    const long m = std::uniform_int_distribution<long>(1, max_edges)(rng);
    const Graph g = random_graph(n, m, rng);
    Json per_alpha = Json::array();
    for (long a : alphas) {
      const long budget = ceil_scaled_sqrt(Rational(a), m).get_si();
      const int delta = peel_high_degree(g, budget).core.graph.max_degree();
      // Δ <= 2 sqrt(m)/alpha  <=>  (alpha Δ)^2 <= 4m
      const bool ok = a * delta * a * delta <= 4 * m;
      if (!ok) ++bad[i];
      per_alpha.push_back({a, budget, delta});
    }
    rows[i] = {{"n", n}, {"m", m}, {"alpha_budget_delta", per_alpha}};
  });
  int failures = 0;
  Json failing = Json::array();
  for (int i = 0; i < kGraphs; ++i)
    if (bad[i]) {
      failures += bad[i];
      if (failing.size() < 10) failing.push_back(rows[i]);
    }
  // The three worked examples.
  const bool star_ok = peel_high_degree(star_graph(9), 1).core.graph.max_degree() == 0 &&
                       peel_high_degree(star_graph(9), 1).u.test(0);
  const bool edgeless_ok = peel_high_degree(edgeless_graph(5), 3).core.graph.max_degree() == 0;

  SuiteResult s;
  s.name = "peeling";
  s.passed = failures == 0 && star_ok && edgeless_ok;
  s.summary = std::to_string(kGraphs) + " random graphs x 5 alphas, " + std::to_string(failures) + " degree-bound failures";
  Json sample = Json::array();
  for (int i = 0; i < 5; ++i) sample.push_back(rows[i]);
  s.report = {{"graphs", kGraphs}, {"failures", failures}, {"failing", failing}, {"sample", sample},
              {"star_example", star_ok}, {"edgeless_example", edgeless_ok}};
  return s;
}

// ---------------------------------------------------------------- alpha recursion

std::vector<long> alpha_grid() {
  std::vector<long> grid;
  for (int i = 0;; ++i) {
    const long m = std::lround(27.0 * std::pow(10.0, i / 4.0));
    if (m > 1000000000L) break;
    grid.push_back(m);
  }
  if (grid.back() != 1000000000L) grid.push_back(1000000000L);
  return grid;
}

SuiteResult suite_alpha(const SelftestOptions& o) {
  const PrecisionPolicy policy = policy_for(o);
  bool ok = true;

  // alpha_1, alpha_2, alpha_3 from a trace long enough to contain them.
  const AlphaTrace big = alpha_sequence(1000000000L, 256);
  Json firsts = Json::array();
  const long expect[3] = {27, 64, 256};
  for (int i = 0; i < 3; ++i) {
    const bool exact = i < static_cast<int>(big.stages.size()) && big.stages[i].alpha.is_exact() &&
                       equal(big.stages[i].alpha, Interval::exact(expect[i], 256)) == Tri::True;
    ok = ok && exact;
    firsts.push_back({{"i", i + 1}, {"expected", expect[i]}, {"exact", exact}});
  }

  const std::vector<long> grid = alpha_grid();
  std::vector<Json> rows(grid.size());
  std::vector<char> row_ok(grid.size(), 0);
  parallel_for(static_cast<int>(grid.size()), o.threads, [&](int i) {
    const long m = grid[i];
    Json row = {{"m", m}};
    try {
      const AlphaTrace tr = alpha_sequence(m, policy.cap);
      Tri growth = Tri::True;
      Tri y_floor = Tri::True;
      for (std::size_t j = 0; j < tr.stages.size(); ++j) {
        if (j > 0) growth = tri_and(growth, tr.stages[j].growth);
        y_floor = tri_and(y_floor, greater_equal(tr.stages[j].y_coefficient, Interval::exact(36, policy.cap)));
      }
      const Tri sum = less_equal(3L * tr.stages.back().partial_sum, Interval::exact(4, policy.cap));
      const HypothesisReport rep = verify_main_arithmetic(m, max_admissible_order(m, policy.cap), policy);
      const bool pass = growth == Tri::True && y_floor == Tri::True && sum == Tri::True && rep.passed();
      row["stages"] = tr.stages.size();
      row["growth"] = verdict_string(growth);
      row["sum"] = verdict_string(sum);
      row["y_floor"] = verdict_string(y_floor);
      row["arithmetic"] = verdict_string(rep.overall());
      row["precision"] = rep.precision;
      if (const Clause* f = rep.first_failure()) row["first_failure"] = f->id;
      row_ok[i] = pass;
    } catch (const PrecisionError& e) {
      row["error"] = e.what();
    }
    rows[i] = row;
  });
  Json failing = Json::array();
  std::string why;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (!row_ok[i]) {
      ok = false;
      failing.push_back(grid[i]);
      why += (why.empty() ? "" : ", ") + std::to_string(grid[i]) + ": " +
             rows[i].value("first_failure", rows[i].value("error", std::string("recursion check")));
    }

  SuiteResult s;
  s.name = "alpha-recursion";
  s.passed = ok;
  s.summary = std::to_string(grid.size()) + " grid points from 27 to 1e9, " + std::to_string(failing.size()) +
              " failing" + (failing.empty() ? "" : " (" + why + ")");
  s.report = {{"first_alphas", firsts}, {"grid", rows}, {"failing", failing}};
  return s;
}

// ---------------------------------------------------------------- exact identities

SuiteResult suite_identities(const SelftestOptions&) {
  bool ok = true;
  // 4 * 60^2 against 250 * 60, both sides exact integers.
  const auto [four_m, sudakov] = fallback_exponents(3600, 256);
  const bool both_exact = four_m.is_exact() && sudakov.is_exact();
  const Tri boundary = equal(four_m, sudakov);
  ok = ok && both_exact && boundary == Tri::True;
  Json fallback = {{"m", 3600},
                   {"four_m", interval_json(four_m)},
                   {"exponent_250_sqrt_m", interval_json(sudakov)},
                   {"lo_eq_hi", both_exact},
                   {"equal", verdict_string(boundary)}};
  // Where 4m = 250 sqrt(m) actually holds: 16 m = 62500.
  fallback["true_boundary_m"] = "3906.25";

  Json squares = Json::array();
  for (long r : {1L, 2L, 3L, 10L, 60L, 100L, 1000L, 31623L}) {
    const long m = r * r;
    const auto [lhs, rhs] = base_pair_exponents(m, 256);
    const bool pass = lhs.is_exact() && rhs.is_exact() && equal(lhs, rhs) == Tri::True;
    ok = ok && pass;
    squares.push_back({{"m", m}, {"lhs", interval_json(lhs)}, {"rhs", interval_json(rhs)}, {"ok", pass}});
  }

  SuiteResult s;
  s.name = "identities";
  s.passed = ok;
  s.summary = std::string("4*60^2 = 250*60: ") + (boundary == Tri::True ? "holds" : "does not hold (14400 vs 15000)") +
              "; base-pair exponent identity at perfect squares: " +
              (std::all_of(squares.begin(), squares.end(), [](const Json& j) { return j["ok"].get<bool>(); })
                   ? "exact"
                   : "failed");
  s.report = {{"fallback_boundary", fallback}, {"base_pair_identity", squares}};
  return s;
}

// ---------------------------------------------------------------- join chain

SuiteResult suite_join_chain(const SelftestOptions& o) {
  const PrecisionPolicy policy = policy_for(o);
  const std::vector<long> grid = {27, 100, 10000, 1000000};
  bool ok = true;
  Json rows = Json::array();
  for (long m : grid) {
    const mpfr_prec_t p = policy.cap;
    const long p_max = terms::clique_order_cap(m, p).floor_lo().get_si();
    const long l = floor_scaled_sqrt(Rational(27), m).get_si();
    const mpz_class q_max = exp2(terms::order_exponent(m, p)).floor_lo();
    int r_max = 0;
    while ((mpz_class(1) << static_cast<mp_bitcnt_t>(4 * (r_max + 1))) < m) ++r_max;
    Json cases = Json::array();
    for (int r = 0; r <= r_max; ++r) {
      const int k_lo = r == 0 ? 1 : 2;
      const int k_hi = r == 0 ? 1 : r + 1;
      for (int k = k_lo; k <= k_hi; ++k) {
        Json c = {{"r", r}, {"k", k}};
        try {
          const HypothesisReport rep = verify_main2_arithmetic(m, p_max, l, q_max, k, r, policy);
          c["verdict"] = verdict_string(rep.overall());
          c["precision"] = rep.precision;
          if (const Clause* f = rep.first_failure()) c["first_failure"] = f->id;
          ok = ok && rep.passed();
        } catch (const PrecisionError& e) {
          c["error"] = e.what();
          ok = false;
        }
        cases.push_back(c);
      }
    }
    rows.push_back({{"m", m}, {"p_max", p_max}, {"l", l}, {"q_max_bits", mpz_sizeinbase(q_max.get_mpz_t(), 2)},
                    {"r_max", r_max}, {"cases", cases}});
  }
  SuiteResult s;
  s.name = "join-chain";
  s.passed = ok;
  s.summary = std::string("join-theorem chain at m in {27, 100, 1e4, 1e6}, extreme p and q: ") +
              (ok ? "all decisive passes" : "failures present");
  s.report = {{"grid", rows}};
  return s;
}

// ---------------------------------------------------------------- dominance

SuiteResult suite_dominance(const SelftestOptions& o) {
  OracleOptions oo;
  oo.threads = o.threads;
  bool ok = true;
  Json rows = Json::array();
  for (const OraclePair& pr : oracle_pairs()) {
    const ExactResult e = exact_ramsey(pr.g1, pr.g2, pr.n_max, oo);
    if (e.status != ExactResult::Status::Exact) {
      ok = false;
      rows.push_back({{"case", pr.name}, {"error", "no exact value"}});
      continue;
    }
    const HypothesisReport rep = dominance_check(pr.g1, pr.g2, e, policy_for(o));
    ok = ok && rep.passed();
    rows.push_back({{"case", pr.name}, {"value", e.value}, {"report", rep.to_json()}});
  }
  SuiteResult s;
  s.name = "dominance";
  s.passed = ok;
  s.summary = std::string("exact oracle values against every applicable bound: ") + (ok ? "dominated" : "VIOLATED");
  s.report = {{"cases", rows}};
  return s;
}

// ---------------------------------------------------------------- pipeline soak

SuiteResult suite_pipeline(const SelftestOptions& o) {
  constexpr int kRuns = 10000;
  const Graph k3 = complete_graph(3);
  std::vector<char> good(kRuns, 0);
  std::vector<int> stage_count(kRuns, 0);
  std::vector<char> by_direct(kRuns, 0);
  parallel_for(kRuns, o.threads, [&](int i) {
    const TwoColoring c = random_coloring(6, 0.5, o.seed * 1000003ULL + static_cast<std::uint64_t>(i));
    const ExtractResult r = extract_ramsey_witness(c, k3, k3, 3);
    stage_count[i] = static_cast<int>(r.trace.stages.size());
    by_direct[i] = !r.trace.stages.empty() && r.trace.stages.back().stage == "direct";
    good[i] = r.embedding && r.embedding->pattern.order() == 3 && r.embedding->pattern.edge_count() == 3 &&
              check_embedding(c, *r.embedding);
  });
  int failures = 0;
  int direct = 0;
  Json failing = Json::array();
  for (int i = 0; i < kRuns; ++i) {
    if (!good[i]) {
      ++failures;
      if (failing.size() < 10) failing.push_back(i);
    }
    direct += by_direct[i];
  }
  // The pentagon has no monochromatic triangle: the pipeline must report failure.
  const ExtractResult pent = extract_ramsey_witness(pentagon_coloring(), k3, k3, 3);
  const bool pent_ok = !pent.embedding && pent.proven_absent;

  SuiteResult s;
  s.name = "pipeline";
  s.passed = failures == 0 && pent_ok;
  s.summary = std::to_string(kRuns) + " random colourings of K6, " + std::to_string(failures) +
              " without a validated monochromatic triangle; pentagon " + (pent_ok ? "fails as expected" : "WRONG");
  s.report = {{"runs", kRuns},
              {"failures", failures},
              {"failing_indices", failing},
              {"resolved_by_direct_search", direct},
              {"resolved_by_lemma_stages", kRuns - direct - failures},
              {"pentagon_trace", pent.trace.to_json()}};
  return s;
}

// ---------------------------------------------------------------- determinism

SuiteResult run_named(const std::string& name, const SelftestOptions& o);

SuiteResult suite_determinism(const SelftestOptions& o) {
  const std::vector<std::string> targets = {"base-pair", "oracle",    "peeling",  "alpha-recursion",
                                            "identities", "join-chain", "dominance", "pipeline"};
  bool ok = true;
  Json rows = Json::array();
  const int many = std::max(2, o.threads == 1 ? 4 : o.threads);
  for (const auto& t : targets) {
    SelftestOptions a = o;
    a.threads = 1;
    SelftestOptions b = o;
    b.threads = many;
    const std::string ja = run_named(t, a).report.dump();
    const std::string jb = run_named(t, b).report.dump();
    const std::string jc = run_named(t, a).report.dump();
    const bool same = ja == jb && ja == jc;
    ok = ok && same;
    rows.push_back({{"suite", t}, {"identical", same}, {"bytes", ja.size()}});
  }
  SuiteResult s;
  s.name = "determinism";
  s.passed = ok;
  s.summary = std::string("suites 1-8 rerun serially and with several threads: ") +
              (ok ? "byte-identical JSON" : "MISMATCH");
  s.report = {{"suites", rows}};
  return s;
}

SuiteResult run_named(const std::string& name, const SelftestOptions& o) {
  if (name == "base-pair") return suite_base_pair(o);
  if (name == "oracle") return suite_oracle(o);
  if (name == "peeling") return suite_peeling(o);
  if (name == "alpha-recursion") return suite_alpha(o);
  if (name == "identities") return suite_identities(o);
  if (name == "join-chain") return suite_join_chain(o);
  if (name == "dominance") return suite_dominance(o);
  if (name == "pipeline") return suite_pipeline(o);
  if (name == "determinism") return suite_determinism(o);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"base-pair",  "oracle",     "peeling",   "alpha-recursion",
                                                 "identities", "join-chain", "dominance", "pipeline",
                                                 "determinism"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SelftestOptions& options) { return run_named(name, options); }

}  // namespace ramsey
