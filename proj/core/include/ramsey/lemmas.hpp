#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/embed.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/report.hpp"

namespace ramsey {

/// An input coloring that violates a procedure's stated precondition.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Red budget k and blue budget l of the stepping argument.
struct PairBudget {
  long k = 1;
  long l = 1;
};

struct BasePairResult {
  MonoPair pair;
  /// The residual set emptied before either budget was met.
  bool partial = false;
};

/// C(k+l,k)^(-1)·N - k - l.
Rational base_pair_bound(long n, PairBudget b);

/// Stepping argument: lowest-index vertex each step, red when its red degree in the
/// residual set is at least a/(a+b)·(|S|-1) for remaining budgets (a, b).
BasePairResult find_base_pair(const TwoColoring& c, PairBudget b);

struct SparseSubsetResult {
  enum class Kind { Sparse, Embedded, Inconclusive };
  Kind kind = Kind::Inconclusive;
  VertexSet s;
  Rational density;
  std::optional<Embedding> embedding;
  /// N >= 2^(4Δ log^2(1/eps))·n(pattern), so |S| >= 2^(-4Δ log^2(1/eps))·N is checked.
  bool size_clause_applies = false;
  Tri size_clause = Tri::Indecisive;
  Json diagnostics = Json::object();
};

/// Either a set with dense-colour density <= eps, a copy of `pattern` in the dense
/// colour, or Inconclusive. eps must lie in (0, 1/8].
SparseSubsetResult find_sparse_subset(const TwoColoring& c, const Graph& pattern, const Rational& eps,
                                      Color dense_color, const EmbedOptions& options = {.node_cap = 200000});

struct PairSearchOptions {
  int restarts = 4;
  std::uint64_t seed = 0;
};

struct SparsePairResult {
  bool found = false;
  std::optional<MonoPair> pair;
  bool hypotheses_hold = false;  // t >= 1/eps
  bool size_clause_applies = false;
  Tri size_clause = Tri::Indecisive;
  int restart = -1;  // winning restart index
  Json diagnostics = Json::object();
};

/// Pair with |X| >= t in a colouring whose `sparse_color` density is at most eps.
/// Throws PreconditionError when the density bound fails and std::invalid_argument
/// when eps is outside (0, 1/7] or t < 1.
SparsePairResult find_pair_in_sparse(const TwoColoring& c, const Rational& eps, long t, Color sparse_color,
                                     const PairSearchOptions& options = {});

struct AmplifyOutcome {
  enum class Kind { Pair, CoreEmbedding, Failure };
  Kind kind = Kind::Failure;
  std::optional<MonoPair> pair;
  /// A copy of the core matching the pair's colour inside Y, in host labels.
  std::optional<Embedding> core_embedding;
  bool hypotheses_hold = false;
  Tri x_clause = Tri::Indecisive;
  Tri y_clause = Tri::Indecisive;
  Rational eps;
  mpz_class t;
  Json diagnostics = Json::object();
};

/// eps = 2^(-3 alpha^(1/3)) rounded down to a rational; t = ceil(2^(2 alpha^(1/3)) sqrt(m)).
std::pair<Rational, mpz_class> amplification_parameters(const Rational& alpha, long m);

/// Grows a monochromatic pair from |X| >= alpha·sqrt(m) to |X'| >= 2^(2 alpha^(1/3)) sqrt(m).
/// alpha < 27 is an argument error; alpha above log^3 m / 8 runs with hypotheses flagged.
AmplifyOutcome amplify_pair(const TwoColoring& c, const MonoPair& p, const Rational& alpha, long m,
                            const Graph& g1_core, const Graph& g2_core, const PairSearchOptions& options = {});

struct StageRecord {
  std::string stage;
  std::optional<std::string> alpha;
  int x = 0;
  int y = 0;
  std::optional<Color> color;
  std::string status;
  std::string note;
  Json to_json() const;
};

struct PipelineTrace {
  std::vector<StageRecord> stages;
  /// One JSON object per line.
  std::string to_json_lines() const;
  Json to_json() const;
};

/// Cores G1 - U1, G2 - U2 for a given alpha.
using CoreProvider = std::function<std::pair<Graph, Graph>(const Rational& alpha)>;

struct ExtractOptions {
  PairSearchOptions search;
  EmbedOptions attach{.node_cap = 200000};
  /// Exhaustive search for blue G1 / red G2 after the lemma stages.
  bool direct_fallback = true;
};

struct ExtractResult {
  std::optional<Embedding> embedding;
  PipelineTrace trace;
  /// No blue G1 and no red G2 exist (exhaustive fallback search).
  bool proven_absent = false;
};

/// Base pair with k = l = ceil(27 sqrt m), amplification along the alpha sequence while
/// log^3 m / 8 >= 27, then attachment of G_i - V_i inside Y and V_i inside X.
ExtractResult extract_ramsey_witness(const TwoColoring& c, const Graph& g1, const Graph& g2, long m,
                                     const CoreProvider& cores, const VertexSet& v1, const VertexSet& v2,
                                     const ExtractOptions& options = {});

/// V_i = V(G_i), cores = the full graphs.
ExtractResult extract_ramsey_witness(const TwoColoring& c, const Graph& g1, const Graph& g2, long m,
                                     const ExtractOptions& options = {});

}  // namespace ramsey
