#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ramsey/bitset.hpp"

namespace ramsey {

using Rational = mpq_class;
using Vertex = int;
using VertexSet = Bitset;

enum class Color : unsigned char { Blue, Red };

constexpr Color opposite(Color c) { return c == Color::Blue ? Color::Red : Color::Blue; }
std::string_view to_string(Color c);

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

VertexSet make_vertex_set(int n, std::initializer_list<Vertex> members);
VertexSet make_vertex_set(int n, std::span<const Vertex> members);

/// Simple undirected graph on vertices 0..order()-1 with bitset adjacency rows.
/// Immutable once constructed.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicate edges are merged; self-loops and out-of-range endpoints throw.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  /// Rows must be symmetric and irreflexive.
  static Graph from_rows(std::vector<Bitset> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  bool adjacent(Vertex a, Vertex b) const { return rows_[a].test(b); }
  const Bitset& neighbors(Vertex v) const { return rows_[v]; }
  const std::vector<Bitset>& rows() const { return rows_; }
  int degree(Vertex v) const { return rows_[v].count(); }
  int max_degree() const;
  bool has_isolated_vertex() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  std::vector<Bitset> rows_;
  std::size_t edge_count_ = 0;
};

int max_degree(const Graph& g);

/// A graph obtained from a host, with labels[i] = host label of vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> labels;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Subgraph delete_vertices(const Graph& g, const VertexSet& removed);

/// G+H: vertices of g keep their labels, vertices of h are shifted by order(g).
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

std::size_t induced_edge_count(const Graph& g, const VertexSet& u);

/// e(U) / C(|U|,2); defined as 0 when |U| <= 1.
Rational edge_density(const Graph& g, const VertexSet& u);

/// Blue/red coloring of every edge of K_n, stored as the blue graph and its complement.
class TwoColoring {
public:
  TwoColoring() = default;
  explicit TwoColoring(Graph blue);

  static TwoColoring uniform(int n, Color c);

  int order() const { return blue_.order(); }
  Color color(Vertex a, Vertex b) const { return blue_.adjacent(a, b) ? Color::Blue : Color::Red; }
  const Graph& graph(Color c) const { return c == Color::Blue ? blue_ : red_; }
  const Bitset& neighbors(Vertex v, Color c) const { return graph(c).neighbors(v); }

  friend bool operator==(const TwoColoring& a, const TwoColoring& b) { return a.blue_ == b.blue_; }

private:
  Graph blue_;
  Graph red_;
};

Graph monochromatic_subgraph(const TwoColoring& c, Color color);

struct SubColoring {
  TwoColoring coloring;
  std::vector<Vertex> labels;
};

/// Restriction to u, relabelled to 0..|u|-1 in increasing order.
SubColoring induced_coloring(const TwoColoring& c, const VertexSet& u);

/// Ordered pair (X, Y) of disjoint sets; every edge inside X∪Y touching X has `color`.
struct MonoPair {
  VertexSet x;
  VertexSet y;
  Color color = Color::Red;
};

struct PairViolation {
  Edge edge;
  Color edge_color;
  Edge reference;
  Color reference_color;
};

struct PairCheck {
  enum class Status { Monochromatic, Vacuous, Violated };
  Status status = Status::Vacuous;
  Color color = Color::Red;  // meaningful only when Monochromatic
  std::optional<PairViolation> violation;
};

/// Throws std::invalid_argument if X is empty or X∩Y≠∅, std::out_of_range on size mismatch.
PairCheck validate_mono_pair(const TwoColoring& c, const VertexSet& x, const VertexSet& y);

/// True if the pair is monochromatic in its claimed color (or has no edges to check).
bool is_valid_mono_pair(const TwoColoring& c, const MonoPair& p);

/// Map a pair through a label back-map into the host's vertex range.
MonoPair lift_pair(const MonoPair& p, std::span<const Vertex> labels, int host_order);

struct Embedding {
  Graph pattern;
  std::vector<Vertex> host;  // host[pattern vertex]
  Color color = Color::Blue;
};

bool check_embedding(const TwoColoring& c, const Embedding& e);

}  // namespace ramsey
