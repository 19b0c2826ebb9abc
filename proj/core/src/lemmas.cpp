#include "ramsey/lemmas.hpp"

#include <random>
#include <sstream>

#include "ramsey/bounds.hpp"

namespace ramsey {

namespace {

constexpr mpfr_prec_t kPrec = 128;

/// 2·e(S) <= eps·|S|(|S|-1).
bool density_at_most(std::size_t edges, int size, const Rational& eps) {
  if (size <= 1) return true;
  return Rational(2 * static_cast<long>(edges)) <= eps * size * (size - 1);
}

Interval log2_of(long v) { return log2(Interval::exact(v, kPrec)); }

Interval log2_inv(const Rational& eps) { return -log2(Interval::from_rational(eps, kPrec)); }

void ensure_valid(const TwoColoring& c, const MonoPair& p, const char* where) {
  if (!is_valid_mono_pair(c, p)) throw std::logic_error(std::string(where) + " produced an invalid pair");
}

std::vector<Vertex> compose(const std::vector<Vertex>& outer, const std::vector<Vertex>& inner) {
  std::vector<Vertex> r(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) r[i] = outer[inner[i]];
  return r;
}

std::string decimal(const Rational& q) { return Interval::from_rational(q, kPrec).lo_string(15); }

}  // namespace

Rational base_pair_bound(long n, PairBudget b) {
  const mpz_class c = binomial(static_cast<unsigned long>(b.k + b.l), static_cast<unsigned long>(b.k));
  return Rational(n, 1) / Rational(c) - b.k - b.l;
}

BasePairResult find_base_pair(const TwoColoring& c, PairBudget b) {
  if (b.k < 1 || b.l < 1) throw std::invalid_argument("pair budgets must be at least 1");
  const int n = c.order();
  if (n < 1) throw std::invalid_argument("coloring needs at least one vertex");

  VertexSet s = Bitset::full(n);
  VertexSet xr(n);
  VertexSet xb(n);
  long a = b.k;
  long bl = b.l;
  while (a > 0 && bl > 0 && !s.empty()) {
    const Vertex v = s.first();
    s.reset(v);
    const long rest = s.count();
    const long red = c.neighbors(v, Color::Red).intersection_count(s);
    if (red * (a + bl) >= a * rest) {
      xr.set(v);
      s &= c.neighbors(v, Color::Red);
      --a;
    } else {
      xb.set(v);
      s &= c.neighbors(v, Color::Blue);
      --bl;
    }
  }

  BasePairResult r;
  if (a == 0) {
    r.pair = {xr, s, Color::Red};
  } else if (bl == 0) {
    r.pair = {xb, s, Color::Blue};
  } else {
    r.partial = true;
    // Prefer the colour that got further towards its budget; red on ties.
    const bool red = xb.empty() || (!xr.empty() && (b.k - a) * b.l >= (b.l - bl) * b.k);
    r.pair = red ? MonoPair{xr, s, Color::Red} : MonoPair{xb, s, Color::Blue};
  }
  ensure_valid(c, r.pair, "find_base_pair");
  return r;
}

SparseSubsetResult find_sparse_subset(const TwoColoring& c, const Graph& pattern, const Rational& eps,
                                      Color dense_color, const EmbedOptions& options) {
  if (eps <= 0 || eps > Rational(1, 8)) throw std::invalid_argument("eps must lie in (0, 1/8]");
  const int n = c.order();
  const Graph& g = c.graph(dense_color);
  SparseSubsetResult r;
  const int delta = pattern.max_degree();

  // 2^(4Δ log^2(1/eps))
  const Interval exponent = 4L * Interval::exact(delta, kPrec) * ipow(log2_inv(eps), 2);
  if (n >= 1 && pattern.order() >= 1)
    r.size_clause_applies = greater_equal(log2_of(n), exponent + log2_of(pattern.order())) == Tri::True;
  r.diagnostics = {{"n", n}, {"pattern_order", pattern.order()}, {"pattern_max_degree", delta},
                   {"eps", decimal(eps)}, {"size_clause_applies", r.size_clause_applies}};

  VertexSet s = Bitset::full(n);
  if (pattern.order() == 0) {
    r.kind = SparseSubsetResult::Kind::Embedded;
    r.embedding = Embedding{pattern, {}, dense_color};
    return r;
  }

  std::size_t edges = g.edge_count();
  if (!density_at_most(edges, n, eps)) {
    const EmbedResult e = greedy_embed(c, pattern, dense_color, options);
    r.diagnostics["embed_nodes"] = e.nodes;
    r.diagnostics["embed_status"] = std::string(to_string(e.status));
    if (e.status == SearchStatus::Found) {
      r.kind = SparseSubsetResult::Kind::Embedded;
      r.embedding = e.embedding;
      return r;
    }
    std::vector<int> deg(n, 0);
    for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
    int size = n;
    while (!density_at_most(edges, size, eps)) {
      Vertex best = -1;
      s.for_each([&](int v) {
        if (best < 0 || deg[v] > deg[best]) best = v;
      });
      s.reset(best);
      --size;
      edges -= deg[best];
      (g.neighbors(best) & s).for_each([&](int w) { --deg[w]; });
    }
  }

  r.s = s;
  r.density = edge_density(g, s);
  if (r.density > eps) throw std::logic_error("find_sparse_subset: density check failed");
  r.diagnostics["subset_size"] = s.count();
  if (r.size_clause_applies) {
    const int size = s.count();
    r.size_clause = size == 0 ? Tri::False : greater_equal(log2_of(size), log2_of(n) - exponent);
    if (r.size_clause != Tri::True) {
      r.kind = SparseSubsetResult::Kind::Inconclusive;
      r.diagnostics["reason"] = "subset smaller than the guaranteed size";
      return r;
    }
  }
  r.kind = SparseSubsetResult::Kind::Sparse;
  return r;
}

SparsePairResult find_pair_in_sparse(const TwoColoring& c, const Rational& eps, long t, Color sparse_color,
                                     const PairSearchOptions& options) {
  if (eps <= 0 || eps > Rational(1, 7)) throw std::invalid_argument("eps must lie in (0, 1/7]");
  if (t < 1) throw std::invalid_argument("t must be at least 1");
  const int n = c.order();
  const Graph& sparse = c.graph(sparse_color);
  const Color dense = opposite(sparse_color);
  if (!density_at_most(sparse.edge_count(), n, eps))
    throw PreconditionError("colour " + std::string(to_string(sparse_color)) + " has density above eps");

  SparsePairResult r;
  r.hypotheses_hold = eps * t >= 1;
  const Interval shrink = Interval::from_rational(14 * eps * t, kPrec) * log2_inv(eps);
  if (n >= 1) r.size_clause_applies = greater_equal(log2_of(n), log2_of(t) + shrink) == Tri::True;
  const mpz_class budget_z = [&] {
    mpz_class q;
    const Rational et = eps * t;
    mpz_cdiv_q(q.get_mpz_t(), et.get_num_mpz_t(), et.get_den_mpz_t());
    return q;
  }();
  const long sparse_budget = budget_z.get_si();
  r.diagnostics = {{"n", n}, {"t", t}, {"eps", decimal(eps)}, {"sparse_budget", sparse_budget},
                   {"hypotheses_hold", r.hypotheses_hold}, {"size_clause_applies", r.size_clause_applies}};

  Json attempts = Json::array();
  const int restarts = std::max(1, options.restarts);
  for (int attempt = 0; attempt < restarts; ++attempt) {
    std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(attempt));
    VertexSet s = Bitset::full(n);
    VertexSet x(n);
    long xs = 0;
    long used = 0;
    while (xs < t && !s.empty()) {
      int best = -1;
      std::vector<Vertex> ties;
      s.for_each([&](int v) {
        const int d = sparse.neighbors(v).intersection_count(s);
        if (best < 0 || d < best) {
          best = d;
          ties.assign(1, v);
        } else if (d == best) {
          ties.push_back(v);
        }
      });
      const Vertex v = attempt == 0 ? ties.front()
                                    : ties[std::uniform_int_distribution<std::size_t>(0, ties.size() - 1)(rng)];
      s.reset(v);
      const int sd = sparse.neighbors(v).intersection_count(s);
      const int dd = c.neighbors(v, dense).intersection_count(s);
      if (used < sparse_budget && sd > dd) {
        s &= sparse.neighbors(v);
        ++used;
      } else {
        x.set(v);
        ++xs;
        s &= c.neighbors(v, dense);
      }
    }
    Json a = {{"restart", attempt}, {"x", xs}, {"y", s.count()}, {"sparse_steps", used}};
    if (xs < t) {
      a["status"] = "short";
      attempts.push_back(a);
      continue;
    }
    MonoPair p{x, s, dense};
    ensure_valid(c, p, "find_pair_in_sparse");
    Tri size = Tri::Indecisive;
    if (r.size_clause_applies) {
      const int y = s.count();
      size = y == 0 ? Tri::False : greater_equal(log2_of(y), log2_of(n) - shrink);
      if (size != Tri::True) {
        a["status"] = "size_clause_failed";
        attempts.push_back(a);
        continue;
      }
    }
    a["status"] = "found";
    attempts.push_back(a);
    r.found = true;
    r.pair = std::move(p);
    r.size_clause = size;
    r.restart = attempt;
    break;
  }
  r.diagnostics["attempts"] = attempts;
  return r;
}

std::pair<Rational, mpz_class> amplification_parameters(const Rational& alpha, long m) {
  const mpfr_prec_t p = 256;
  const Interval root = cbrt(Interval::from_rational(alpha, p));
  const Interval e = exp2(-3L * root);
  Rational eps;
  mpfr_get_q(eps.get_mpq_t(), e.lo());
  const mpz_class t = (exp2(2L * root) * sqrt(Interval::exact(m, p))).ceil_hi();
  return {eps, t};
}

AmplifyOutcome amplify_pair(const TwoColoring& c, const MonoPair& p, const Rational& alpha, long m,
                            const Graph& g1_core, const Graph& g2_core, const PairSearchOptions& options) {
  if (alpha < 27) throw std::invalid_argument("alpha must be at least 27");
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (!is_valid_mono_pair(c, p)) throw std::invalid_argument("input pair is not monochromatic");

  AmplifyOutcome out;
  auto [eps, t] = amplification_parameters(alpha, m);
  out.eps = eps;
  out.t = t;
  const int nx = p.x.count();
  const int ny = p.y.count();
  const Graph& core = p.color == Color::Blue ? g1_core : g2_core;

  const Interval a = Interval::from_rational(alpha, kPrec);
  const Interval s = sqrt(Interval::exact(m, kPrec));
  const bool alpha_ok = m >= 2 && less_equal(a, terms::alpha_max(m, kPrec)) == Tri::True;
  auto core_ok = [&](const Graph& g) {
    const Rational d = alpha * g.max_degree();
    return d * d <= 4 * m;
  };
  const bool x_ok = Rational(nx) * nx >= alpha * alpha * m;
  const Interval y_need = 125L * s / cbrt(a);
  const bool y_ok = ny >= 1 && greater_equal(log2_of(ny), y_need) == Tri::True;
  out.hypotheses_hold = alpha_ok && core_ok(g1_core) && core_ok(g2_core) && x_ok && y_ok;
  out.diagnostics = {{"alpha", decimal(alpha)},
                     {"eps", decimal(eps)},
                     {"t", t.get_str()},
                     {"x", nx},
                     {"y", ny},
                     {"color", std::string(to_string(p.color))},
                     {"hypotheses",
                      {{"alpha_range", alpha_ok},
                       {"core_degrees", core_ok(g1_core) && core_ok(g2_core)},
                       {"x_size", x_ok},
                       {"y_size", y_ok}}}};

  if (mpz_class(ny) < t) {
    out.x_clause = Tri::False;
    out.diagnostics["reason"] = "|Y| < t, so no X' inside Y can reach t";
    return out;
  }

  const SubColoring sub = induced_coloring(c, p.y);
  const long tl = t.get_si();
  std::optional<SparsePairResult> found;
  std::vector<Vertex> labels;

  for (Color sparse : {p.color, opposite(p.color)}) {
    const Graph& sg = sub.coloring.graph(sparse);
    if (density_at_most(sg.edge_count(), ny, eps)) {
      out.diagnostics["route"] = "Y already sparse in " + std::string(to_string(sparse));
      found = find_pair_in_sparse(sub.coloring, eps, tl, sparse, options);
      labels = sub.labels;
      break;
    }
  }
  if (!found) {
    const SparseSubsetResult ss = find_sparse_subset(sub.coloring, core, eps, p.color);
    out.diagnostics["sparse_subset"] = ss.diagnostics;
    if (ss.kind == SparseSubsetResult::Kind::Embedded) {
      Embedding e = *ss.embedding;
      e.host = compose(sub.labels, e.host);
      if (!check_embedding(c, e)) throw std::logic_error("amplify_pair: core embedding failed validation");
      out.kind = AmplifyOutcome::Kind::CoreEmbedding;
      out.core_embedding = std::move(e);
      return out;
    }
    if (ss.kind == SparseSubsetResult::Kind::Inconclusive) {
      out.diagnostics["reason"] = "sparse subset inconclusive";
      return out;
    }
    const SubColoring inner = induced_coloring(sub.coloring, ss.s);
    if (static_cast<long>(inner.coloring.order()) < tl) {
      out.x_clause = Tri::False;
      out.diagnostics["reason"] = "sparse subset smaller than t";
      return out;
    }
    out.diagnostics["route"] = "sparse subset";
    found = find_pair_in_sparse(inner.coloring, eps, tl, p.color, options);
    labels = compose(sub.labels, inner.labels);
  }
  out.diagnostics["pair_search"] = found->diagnostics;
  if (!found->found) {
    out.x_clause = Tri::False;
    out.diagnostics["reason"] = "pair search did not reach |X'| >= t";
    return out;
  }

  MonoPair np = lift_pair(*found->pair, labels, c.order());
  ensure_valid(c, np, "amplify_pair");
  out.x_clause = tri(mpz_class(np.x.count()) >= t);
  if (out.hypotheses_hold) {
    const int y2 = np.y.count();
    out.y_clause = y2 == 0 ? Tri::False : greater_equal(log2_of(y2), log2_of(ny) - 120L * s / cbrt(a));
    if (out.y_clause == Tri::False) {
      out.diagnostics["reason"] = "|Y'| below the guaranteed fraction of |Y|";
      return out;
    }
  }
  out.kind = AmplifyOutcome::Kind::Pair;
  out.pair = std::move(np);
  return out;
}

Json StageRecord::to_json() const {
  Json j = {{"stage", stage}, {"x", x}, {"y", y}, {"status", status}};
  j["alpha"] = alpha ? Json(*alpha) : Json(nullptr);
  j["color"] = color ? Json(std::string(ramsey::to_string(*color))) : Json(nullptr);
  if (!note.empty()) j["note"] = note;
  return j;
}

std::string PipelineTrace::to_json_lines() const {
  std::ostringstream os;
  for (const auto& s : stages) os << s.to_json().dump() << '\n';
  return os.str();
}

Json PipelineTrace::to_json() const {
  Json a = Json::array();
  for (const auto& s : stages) a.push_back(s.to_json());
  return a;
}

namespace {

class Pipeline {
public:
  Pipeline(const TwoColoring& c, const Graph& g1, const Graph& g2, const VertexSet& v1, const VertexSet& v2,
           const ExtractOptions& options, PipelineTrace& trace)
      : c_(c), g1_(g1), g2_(g2), v1_(v1), v2_(v2), options_(options), trace_(trace) {}

  void record(std::string stage, const std::optional<Rational>& alpha, const MonoPair* p, std::string status,
              std::string note = {}) {
    StageRecord r;
    r.stage = std::move(stage);
    if (alpha) r.alpha = decimal(*alpha);
    if (p) {
      r.x = p->x.count();
      r.y = p->y.count();
      r.color = p->color;
    }
    r.status = std::move(status);
    r.note = std::move(note);
    trace_.stages.push_back(std::move(r));
  }

  /// G - V embedded in Y, V placed on X; then the whole pattern anywhere in X ∪ Y.
  std::optional<Embedding> attach(const MonoPair& p, const std::string& after) {
    const bool blue = p.color == Color::Blue;
    const Graph& g = blue ? g1_ : g2_;
    const VertexSet& v = blue ? v1_ : v2_;
    const std::vector<Vertex> placed = v.to_vector();
    const std::vector<Vertex> free_x = p.x.to_vector();
    std::uint64_t nodes = 0;
    if (placed.size() <= free_x.size()) {
      const Subgraph rest = delete_vertices(g, v);
      const EmbedResult e = greedy_embed(c_, rest.graph, p.color, p.y, options_.attach);
      nodes += e.nodes;
      if (e.status == SearchStatus::Found) {
        std::vector<Vertex> host(g.order(), -1);
        for (std::size_t i = 0; i < rest.labels.size(); ++i) host[rest.labels[i]] = e.embedding->host[i];
        for (std::size_t i = 0; i < placed.size(); ++i) host[placed[i]] = free_x[i];
        Embedding full{g, std::move(host), p.color};
        if (!check_embedding(c_, full)) throw std::logic_error("attachment produced an invalid embedding");
        record("attach", std::nullopt, &p, "found", "after " + after + ": G - V in Y, V in X");
        return full;
      }
    }
    VertexSet xy = p.x | p.y;
    const EmbedResult e = greedy_embed(c_, g, p.color, xy, options_.attach);
    nodes += e.nodes;
    if (e.status == SearchStatus::Found) {
      record("attach", std::nullopt, &p, "found", "after " + after + ": pattern inside X ∪ Y");
      return e.embedding;
    }
    record("attach", std::nullopt, &p, std::string(to_string(e.status)),
           "after " + after + ", " + std::to_string(nodes) + " nodes");
    return std::nullopt;
  }

  std::optional<Embedding> direct(bool& proven_absent) {
    const EmbedResult blue = greedy_embed(c_, g1_, Color::Blue);
    if (blue.embedding) {
      record("direct", std::nullopt, nullptr, "found", "blue G1, " + std::to_string(blue.nodes) + " nodes");
      return blue.embedding;
    }
    const EmbedResult red = greedy_embed(c_, g2_, Color::Red);
    if (red.embedding) {
      record("direct", std::nullopt, nullptr, "found", "red G2, " + std::to_string(red.nodes) + " nodes");
      return red.embedding;
    }
    proven_absent = true;
    record("direct", std::nullopt, nullptr, "failure", "no blue G1 and no red G2 (exhaustive)");
    return std::nullopt;
  }

private:
  const TwoColoring& c_;
  const Graph& g1_;
  const Graph& g2_;
  const VertexSet& v1_;
  const VertexSet& v2_;
  const ExtractOptions& options_;
  PipelineTrace& trace_;
};

Rational rational_lower(const Interval& x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x.lo());
  return q;
}

}  // namespace

ExtractResult extract_ramsey_witness(const TwoColoring& c, const Graph& g1, const Graph& g2, long m,
                                     const CoreProvider& cores, const VertexSet& v1, const VertexSet& v2,
                                     const ExtractOptions& options) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  if (v1.size() != g1.order() || v2.size() != g2.order())
    throw std::out_of_range("deletion sets do not match pattern orders");
  if (c.order() < 1) throw std::invalid_argument("coloring needs at least one vertex");

  ExtractResult result;
  Pipeline pl(c, g1, g2, v1, v2, options, result.trace);

  const long k = ceil_scaled_sqrt(Rational(27), m).get_si();
  const BasePairResult base = find_base_pair(c, {k, k});
  pl.record("base", Rational(27), &base.pair, base.partial ? "partial" : "pair",
            "k = l = " + std::to_string(k));
  MonoPair pair = base.pair;
  if ((result.embedding = pl.attach(pair, "base"))) return result;

  if (m >= 64) {
    const AlphaTrace seq = alpha_sequence(m);
    std::vector<Rational> alphas;
    for (const auto& st : seq.stages)
      if (st.amplified) alphas.push_back(rational_lower(st.alpha));
    alphas.push_back(std::max(Rational(27), rational_lower(seq.threshold)));

    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const Rational& alpha = alphas[i];
      const std::string name = i + 1 == alphas.size() ? "final" : "amplify[" + std::to_string(i + 1) + "]";
      const auto [c1, c2] = cores ? cores(alpha) : std::pair<Graph, Graph>{g1, g2};
      const AmplifyOutcome out = amplify_pair(c, pair, alpha, m, c1, c2, options.search);
      if (out.kind == AmplifyOutcome::Kind::Failure) {
        pl.record(name, alpha, &pair, "failure", out.diagnostics.value("reason", std::string("failure")));
        break;
      }
      if (out.kind == AmplifyOutcome::Kind::CoreEmbedding) {
        pl.record(name, alpha, &pair, "core_embedding", "core of the pair's colour found inside Y");
        if ((result.embedding = pl.attach(pair, name))) return result;
        break;
      }
      pair = *out.pair;
      pl.record(name, alpha, &pair, "pair");
      if ((result.embedding = pl.attach(pair, name))) return result;
    }
  }

  if (options.direct_fallback) result.embedding = pl.direct(result.proven_absent);
  return result;
}

ExtractResult extract_ramsey_witness(const TwoColoring& c, const Graph& g1, const Graph& g2, long m,
                                     const ExtractOptions& options) {
  return extract_ramsey_witness(c, g1, g2, m, CoreProvider{}, Bitset::full(g1.order()), Bitset::full(g2.order()),
                                options);
}

}  // namespace ramsey
