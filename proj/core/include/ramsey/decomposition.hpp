#pragma once

#include <optional>
#include <vector>

#include "ramsey/bounds.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/lemmas.hpp"
#include "ramsey/report.hpp"

namespace ramsey {

struct PeelResult {
  VertexSet u;
  Subgraph core;  // g - u with host labels
};

/// Removes `budget` vertices one at a time, each of maximum current degree
/// (lowest index on ties). Budgets above n(g) clamp to n(g).
PeelResult peel_high_degree(const Graph& g, long budget);

/// 27, log^3 m / 8 (rounded down) and 8 geometric intermediates; empty when log^3 m / 8 < 27.
std::vector<Rational> default_alpha_samples(long m);

struct ConditionIOptions {
  std::optional<std::vector<Rational>> alpha_samples;
  /// Fixed U_i used for every alpha instead of peeling.
  std::optional<VertexSet> u1;
  std::optional<VertexSet> u2;
};

/// Peeling with budget floor(alpha sqrt m) and Δ(G_i - U_i) <= 2 sqrt(m)/alpha at each sample.
HypothesisReport check_condition_I(const Graph& g1, const Graph& g2, long m, const ConditionIOptions& options = {});

/// |V_i| <= m^(3/2) and both Ramsey exponents <= 36 sqrt(m).
HypothesisReport check_condition_II(const Graph& g1, const Graph& g2, const VertexSet& v1, const VertexSet& v2,
                                    long m, const LogQty& r_g1_minus_v1, const LogQty& r_g2_minus_v2,
                                    const PrecisionPolicy& policy = {});

struct LowDegreeCore {
  VertexSet s;
  int max_degree = 0;  // Δ(h - s)
  HypothesisReport report;
};

/// Peels maximum-degree vertices until Δ(h - S) < log(m)/4; m >= 27.
LowDegreeCore find_low_degree_core(const Graph& h, long m);

struct DegreeProfile {
  int k = 0;
  std::vector<int> color_of;                 // class index per vertex, class 0 holds a max-degree vertex
  std::vector<std::vector<Vertex>> classes;  // classes[0] is the first colour class
  int r = 0;                                 // max degree outside the first class
  bool exact = false;                        // k is the chromatic number
};

/// Exact chromatic number for up to 20 vertices, largest-degree-first greedy beyond.
DegreeProfile degree_profile_coloring(const Graph& g);

struct Main2Certificates {
  Graph g1;  // K_p
  Graph g2;  // K_l + h, K_l on vertices 0..l-1
  VertexSet u2;
  VertexSet v1;
  VertexSet v2;
  LogQty r_g1_minus_v1;
  LogQty r_g2_minus_v2;
  Json to_json() const;
};

struct Main2Check {
  HypothesisReport report;
  std::optional<Main2Certificates> certificates;
};

/// Hypotheses of the join theorem for K_p versus K_l + h; m >= 27.
Main2Check check_main2_hypotheses(long p, long l, const Graph& h, long m, const PrecisionPolicy& policy = {});

/// alpha -> (G1 - U1, G2 - U2) with U_i from peel_high_degree(G_i, floor(alpha sqrt m)).
CoreProvider peeled_core_provider(const Graph& g1, const Graph& g2, long m);

}  // namespace ramsey
