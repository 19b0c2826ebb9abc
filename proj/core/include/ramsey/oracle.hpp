#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/report.hpp"

namespace ramsey {

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
  bool exhaustive = true;
  SearchStats& operator+=(const SearchStats& o);
  Json to_json() const;
};

enum class Arrow { True, False, Inconclusive };
std::string_view to_string(Arrow a);

struct ArrowsResult {
  Arrow verdict = Arrow::Inconclusive;
  std::optional<TwoColoring> witness;  // when False
  SearchStats stats;
  Json to_json() const;
};

struct OracleOptions {
  /// Total colouring-node budget, split evenly over the partitions; 0 = unlimited.
  std::uint64_t budget = 0;
  int threads = 1;
  /// Number of leading free edges enumerated to form independent partitions.
  int split_depth = 6;
};

/// Does every 2-colouring of K_n contain a blue g1 or a red g2?
ArrowsResult arrows(int n, const Graph& g1, const Graph& g2, const OracleOptions& options = {});

struct ExactResult {
  enum class Status { Exact, LowerBoundOnly };
  Status status = Status::LowerBoundOnly;
  int value = 0;
  std::optional<TwoColoring> witness;  // on K_(value-1)
  SearchStats certificate;
  std::vector<Json> steps;
  Json to_json() const;
};

/// Smallest n <= n_max with arrows(n); LowerBoundOnly when n_max is reached or a step is inconclusive.
ExactResult exact_ramsey(const Graph& g1, const Graph& g2, int n_max, const OracleOptions& options = {});

/// Compares an exact value against every bound whose hypotheses hold for (g1, g2).
HypothesisReport dominance_check(const Graph& g1, const Graph& g2, const ExactResult& exact,
                                 const PrecisionPolicy& policy = {});

}  // namespace ramsey
