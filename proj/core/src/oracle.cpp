#include "ramsey/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "ramsey/bounds.hpp"
#include "ramsey/decomposition.hpp"
#include "ramsey/embed.hpp"
#include "ramsey/graph_io.hpp"

namespace ramsey {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  prunes += o.prunes;
  exhaustive = exhaustive && o.exhaustive;
  return *this;
}

Json SearchStats::to_json() const { return Json{{"nodes", nodes}, {"prunes", prunes}, {"exhaustive", exhaustive}}; }

std::string_view to_string(Arrow a) {
  switch (a) {
    case Arrow::True:
      return "true";
    case Arrow::False:
      return "false";
    case Arrow::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Json ArrowsResult::to_json() const {
  Json j = {{"verdict", std::string(to_string(verdict))}, {"stats", stats.to_json()}};
  if (witness) j["witness"] = write_coloring(*witness);
  return j;
}

namespace {

/// Edges of K_n in the order (0,1), (0,2), (1,2), (0,3), ...
std::vector<Edge> edge_order(int n) {
  std::vector<Edge> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) e.emplace_back(i, j);
  return e;
}

class ColoringSearch {
public:
  ColoringSearch(int n, const Graph& blue_pattern, const Graph& red_pattern, const std::vector<Edge>& edges,
                 std::uint64_t cap, const std::atomic<int>* winner, int index)
      : blue_pattern_(blue_pattern),
        red_pattern_(red_pattern),
        edges_(edges),
        rows_{std::vector<Bitset>(n, Bitset(n)), std::vector<Bitset>(n, Bitset(n))},
        cap_(cap),
        winner_(winner),
        index_(index) {}

  /// Colours edge i; false if that completes a forbidden copy.
  bool apply(std::size_t i, Color c) {
    set(i, c, true);
    const Graph& pattern = c == Color::Blue ? blue_pattern_ : red_pattern_;
    const Edge& e = edges_[i];
    if (find_mapping_through(rows_[slot(c)], pattern, e.u, e.v).status == SearchStatus::Found) {
      set(i, c, false);
      ++stats_.prunes;
      return false;
    }
    return true;
  }

  /// True when a colouring avoiding both patterns extends the current prefix.
  bool search(std::size_t i) {
    if (i == edges_.size()) return true;
    for (Color c : {Color::Blue, Color::Red}) {
      if (stopped()) return false;
      ++stats_.nodes;
      if (!apply(i, c)) continue;
      if (search(i + 1)) return true;
      set(i, c, false);
    }
    return false;
  }

  TwoColoring coloring() const { return TwoColoring(Graph::from_rows(rows_[0])); }
  bool aborted() const { return aborted_; }
  const SearchStats& stats() const { return stats_; }

private:
  static int slot(Color c) { return c == Color::Blue ? 0 : 1; }

  void set(std::size_t i, Color c, bool on) {
    const Edge& e = edges_[i];
    auto& rows = rows_[slot(c)];
    rows[e.u].assign(e.v, on);
    rows[e.v].assign(e.u, on);
  }

  bool stopped() {
    if (aborted_) return true;
    if ((cap_ && stats_.nodes >= cap_) || (winner_ && winner_->load(std::memory_order_relaxed) < index_)) {
      aborted_ = true;
      stats_.exhaustive = false;
    }
    return aborted_;
  }

  const Graph& blue_pattern_;
  const Graph& red_pattern_;
  const std::vector<Edge>& edges_;
  std::vector<Bitset> rows_[2];
  std::uint64_t cap_;
  const std::atomic<int>* winner_;
  int index_;
  SearchStats stats_;
  bool aborted_ = false;
};

struct PartitionResult {
  Arrow verdict = Arrow::Inconclusive;
  std::optional<TwoColoring> witness;
  SearchStats stats;
};

/// Colourings with edge (0,1) blue and no blue `bp`, no red `rp`. Both patterns have edges.
ArrowsResult search_fixed_first_edge(int n, const Graph& bp, const Graph& rp, const OracleOptions& options) {
  const std::vector<Edge> edges = edge_order(n);
  const int free_edges = static_cast<int>(edges.size()) - 1;
  const int w = std::clamp(options.split_depth, 0, std::min(free_edges, 20));
  const int parts = 1 << w;
  const std::uint64_t cap = options.budget ? std::max<std::uint64_t>(1, options.budget / parts) : 0;

  std::vector<PartitionResult> results(parts);
  std::atomic<int> winner{parts};
  std::atomic<int> next{0};

  auto run = [&](int idx) {
    PartitionResult& out = results[idx];
    ColoringSearch s(n, bp, rp, edges, cap, &winner, idx);
    bool alive = s.apply(0, Color::Blue);
    for (int b = 0; alive && b < w; ++b) {
      const Color c = (idx >> (w - 1 - b)) & 1 ? Color::Red : Color::Blue;
      alive = s.apply(1 + b, c);
    }
    if (!alive) {
      out.verdict = Arrow::True;
      out.stats = s.stats();
      return;
    }
    const bool found = s.search(1 + w);
    out.stats = s.stats();
    if (found) {
      out.verdict = Arrow::False;
      out.witness = s.coloring();
      int cur = winner.load();
      while (idx < cur && !winner.compare_exchange_weak(cur, idx)) {
      }
    } else {
      out.verdict = s.aborted() ? Arrow::Inconclusive : Arrow::True;
    }
  };
  auto worker = [&] {
    for (int idx = next++; idx < parts; idx = next++) {
      if (idx > winner.load()) continue;
      run(idx);
    }
  };

  const int threads = std::clamp(options.threads, 1, parts);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  ArrowsResult r;
  bool inconclusive = false;
  for (int idx = 0; idx < parts; ++idx) {
    PartitionResult& p = results[idx];
    r.stats += p.stats;
    if (p.verdict == Arrow::False) {
      r.verdict = Arrow::False;
      r.witness = std::move(p.witness);
      return r;
    }
    if (p.verdict == Arrow::Inconclusive) inconclusive = true;
  }
  r.verdict = inconclusive ? Arrow::Inconclusive : Arrow::True;
  r.stats.exhaustive = !inconclusive;
  return r;
}

TwoColoring swap_colors(const TwoColoring& c) { return TwoColoring(c.graph(Color::Red)); }

void check_witness(const TwoColoring& w, const Graph& g1, const Graph& g2) {
  if (greedy_embed(w, g1, Color::Blue).status != SearchStatus::Failure ||
      greedy_embed(w, g2, Color::Red).status != SearchStatus::Failure)
    throw std::logic_error("oracle witness contains a forbidden copy");
}

}  // namespace

ArrowsResult arrows(int n, const Graph& g1, const Graph& g2, const OracleOptions& options) {
  if (n < 1) throw std::invalid_argument("arrows needs n >= 1");
  ArrowsResult r;
  const bool e1 = g1.edge_count() == 0;
  const bool e2 = g2.edge_count() == 0;
  if ((e1 && n >= g1.order()) || (e2 && n >= g2.order())) {
    r.verdict = Arrow::True;
    return r;
  }
  if (e1 || e2 || n < 2) {
    // An edgeless pattern that does not fit can never appear, so colour everything
    // in its colour; with n = 1 there are no edges at all.
    r.verdict = Arrow::False;
    r.witness = TwoColoring::uniform(n, e1 ? Color::Blue : Color::Red);
    check_witness(*r.witness, g1, g2);
    return r;
  }

  r = search_fixed_first_edge(n, g1, g2, options);
  if (r.verdict != Arrow::False && !(g1 == g2)) {
    // Colourings with (0,1) red are the colour-swapped colourings of the swapped problem.
    ArrowsResult s = search_fixed_first_edge(n, g2, g1, options);
    r.stats += s.stats;
    if (s.verdict == Arrow::False) {
      r.verdict = Arrow::False;
      r.witness = swap_colors(*s.witness);
    } else if (s.verdict == Arrow::Inconclusive) {
      r.verdict = Arrow::Inconclusive;
    }
  }
  if (r.verdict == Arrow::False) check_witness(*r.witness, g1, g2);
  r.stats.exhaustive = r.verdict != Arrow::Inconclusive;
  return r;
}

Json ExactResult::to_json() const {
  Json j = {{"status", status == Status::Exact ? "exact" : "lower_bound_only"},
            {"value", value},
            {"certificate", certificate.to_json()},
            {"steps", steps}};
  j["witness"] = witness ? Json(write_coloring(*witness)) : Json(nullptr);
  return j;
}

ExactResult exact_ramsey(const Graph& g1, const Graph& g2, int n_max, const OracleOptions& options) {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  ExactResult out;
  std::optional<TwoColoring> last_witness;
  bool prev_false = true;  // vacuous below n = 1
  for (int n = 1; n <= n_max; ++n) {
    ArrowsResult r = arrows(n, g1, g2, options);
    out.certificate += r.stats;
    out.steps.push_back({{"n", n}, {"verdict", std::string(to_string(r.verdict))}, {"stats", r.stats.to_json()}});
    if (r.verdict == Arrow::True) {
      out.value = n;
      out.status = prev_false ? ExactResult::Status::Exact : ExactResult::Status::LowerBoundOnly;
      out.witness = std::move(last_witness);
      out.certificate.exhaustive = out.status == ExactResult::Status::Exact;
      return out;
    }
    if (r.verdict == Arrow::Inconclusive) {
      out.value = n;
      out.status = ExactResult::Status::LowerBoundOnly;
      out.witness = std::move(last_witness);
      out.certificate.exhaustive = false;
      return out;
    }
    last_witness = std::move(r.witness);
  }
  out.value = n_max + 1;
  out.status = ExactResult::Status::LowerBoundOnly;
  out.witness = std::move(last_witness);
  out.certificate.exhaustive = false;
  return out;
}

namespace {

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace

HypothesisReport dominance_check(const Graph& g1, const Graph& g2, const ExactResult& exact,
                                 const PrecisionPolicy& policy) {
  if (exact.status != ExactResult::Status::Exact) throw std::invalid_argument("dominance needs an exact value");
  const long v = exact.value;
  const long n = std::max(g1.order(), g2.order());
  const bool no_isolated = !g1.has_isolated_vertex() && !g2.has_isolated_vertex() && g1.order() > 0 && g2.order() > 0;

  return evaluate_with_precision(
      [&](mpfr_prec_t p) {
        HypothesisReport rep("dominance");
        const Interval lv = log2(Interval::exact(v, p));
        const Json base = {{"value", v}};

        rep.add("t1", "R(G1,G2) <= R(K_n) <= 2^(2n), n = max order",
                less_equal(lv, bound_erdos_szekeres(n, p).log2()), {{"value", v}, {"n", n}});

        if (g1 == g2 && is_complete(g1) && g1.order() > 2)
          rep.add("t2", "R(K_n) >= 2^(n/2)", greater_equal(lv, bound_erdos_lower(g1.order(), p).log2()),
                  {{"value", v}, {"n", g1.order()}});
        else
          rep.note("t2 not applicable: needs G1 = G2 = K_n with n > 2");

        if (g1 == g2 && no_isolated)
          rep.add("t3", "R(G) <= 2^(250 sqrt(m))",
                  less_equal(lv, bound_sudakov(static_cast<long>(g1.edge_count()), p).log2()),
                  {{"value", v}, {"m", g1.edge_count()}});
        else
          rep.note("t3 not applicable: needs G1 = G2 without isolated vertices");

        if (no_isolated) {
          const long m = static_cast<long>(std::max(g1.edge_count(), g2.edge_count()));
          rep.add("c1", "R(G1,G2) <= 2^(250 sqrt(max(m1,m2)))", less_equal(lv, bound_sudakov(m, p).log2()),
                  {{"value", v}, {"m", m}});
        } else {
          rep.note("c1 not applicable: isolated vertices present");
        }

        if (n >= 2) {
          const Interval cr = cbrt(Interval::exact(n, p));
          const long budget = (27L * cr).floor_lo().get_si();
          const Interval cap = 54L * cr / ipow(log2(Interval::exact(n, p)), 3);
          Tri fits = Tri::True;
          Json peel = Json::array();
          for (const Graph* g : {&g1, &g2}) {
            const int d = peel_high_degree(*g, budget).core.graph.max_degree();
            fits = tri_and(fits, less_equal(Interval::exact(d, p), cap));
            peel.push_back({{"budget", budget}, {"core_max_degree", d}});
          }
          if (fits == Tri::True)
            rep.add("c2", "R(G1,G2) <= 2^(250 n^(1/3)) (peeling by 27 n^(1/3) checked)",
                    less_equal(lv, bound_corollary_vertices(n, p).log2()), {{"value", v}, {"n", n}, {"peel", peel}});
          else
            rep.note("c2 not applicable: peeled cores exceed the degree cap");
        }

        if (is_complete(g1) && is_complete(g2)) {
          // K_p versus K_l + 0 K_1 at m = 27, where p, l <= 27 sqrt(27) = 140.2...
          const long pp = g1.order();
          const long l = g2.order();
          if (pp * pp <= 729L * 27 && l * l <= 729L * 27)
            rep.add("c3", "R(K_p, K_l) <= 2^(250 sqrt(27))", less_equal(lv, bound_sudakov(27, p).log2()),
                    {{"value", v}, {"p", pp}, {"l", l}, {"m", 27}});
        } else {
          rep.note("c3 not applicable: needs complete graphs");
        }
        return rep;
      },
      policy);
}

}  // namespace ramsey
