#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

enum class SearchStatus { Found, Failure, Inconclusive };
std::string_view to_string(SearchStatus s);

struct EmbedOptions {
  std::uint64_t node_cap = 0;  // 0 = unlimited
};

/// Injective map of pattern vertices into host vertices preserving adjacency.
struct MappingResult {
  SearchStatus status = SearchStatus::Failure;
  std::vector<Vertex> mapping;  // filled when Found
  std::uint64_t nodes = 0;
};

/// Backtracking subgraph search in the graph given by `rows`, restricted to `within`.
MappingResult find_mapping(const std::vector<Bitset>& rows, const Graph& pattern, const VertexSet& within,
                           const EmbedOptions& options = {});

/// Same, but only mappings that use the host edge {a, b} as the image of a pattern edge.
MappingResult find_mapping_through(const std::vector<Bitset>& rows, const Graph& pattern, Vertex a, Vertex b,
                                   const EmbedOptions& options = {});

struct EmbedResult {
  SearchStatus status = SearchStatus::Failure;
  std::optional<Embedding> embedding;
  std::uint64_t nodes = 0;
};

/// Monochromatic copy of `pattern` in `color` using only vertices of `within`.
EmbedResult greedy_embed(const TwoColoring& c, const Graph& pattern, Color color, const VertexSet& within,
                         const EmbedOptions& options = {});
EmbedResult greedy_embed(const TwoColoring& c, const Graph& pattern, Color color, const EmbedOptions& options = {});

}  // namespace ramsey
