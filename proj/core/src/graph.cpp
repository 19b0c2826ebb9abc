#include "ramsey/graph.hpp"

#include <stdexcept>
#include <string>

namespace ramsey {

std::string_view to_string(Color c) { return c == Color::Blue ? "blue" : "red"; }

VertexSet make_vertex_set(int n, std::span<const Vertex> members) {
  VertexSet s(n);
  for (Vertex v : members) {
    if (v < 0 || v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
    s.set(v);
  }
  return s;
}

VertexSet make_vertex_set(int n, std::initializer_list<Vertex> members) {
  return make_vertex_set(n, std::span<const Vertex>(members.begin(), members.size()));
}

Graph::Graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  rows_.assign(n, Bitset(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n) throw std::out_of_range("edge endpoint outside vertex range");
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!rows_[e.u].test(e.v)) {
      rows_[e.u].set(e.v);
      rows_[e.v].set(e.u);
      ++edge_count_;
    }
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::from_rows(std::vector<Bitset> rows) {
  Graph g;
  const int n = static_cast<int>(rows.size());
  std::size_t degree_sum = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v].size() != n) throw std::invalid_argument("adjacency row has wrong width");
    if (rows[v].test(v)) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    rows[v].for_each([&](int w) {
      if (!rows[w].test(v)) throw std::invalid_argument("adjacency is not symmetric");
    });
    degree_sum += rows[v].count();
  }
  g.rows_ = std::move(rows);
  g.edge_count_ = degree_sum / 2;
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& r : rows_) best = std::max(best, r.count());
  return best;
}

bool Graph::has_isolated_vertex() const {
  for (const auto& r : rows_)
    if (r.empty()) return true;
  return false;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

int max_degree(const Graph& g) { return g.max_degree(); }

namespace {

void check_range(const Graph& g, const VertexSet& s) {
  if (s.size() != g.order()) throw std::out_of_range("vertex set sized for a different host");
}

}  // namespace

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_range(g, keep);
  Subgraph out;
  out.labels = keep.to_vector();
  const int k = static_cast<int>(out.labels.size());
  std::vector<Bitset> rows(k, Bitset(k));
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(out.labels[i], out.labels[j])) {
        rows[i].set(j);
        rows[j].set(i);
      }
  out.graph = Graph::from_rows(std::move(rows));
  return out;
}

Subgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  check_range(g, removed);
  VertexSet keep = VertexSet::full(g.order());
  keep.subtract(removed);
  return induced_subgraph(g, keep);
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
  const int a = g.order();
  const int n = a + h.order();
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < a; ++u) {
    g.neighbors(u).for_each([&](int v) { rows[u].set(v); });
    if (cross)
      for (int v = a; v < n; ++v) rows[u].set(v);
  }
  for (int u = 0; u < h.order(); ++u) {
    h.neighbors(u).for_each([&](int v) { rows[a + u].set(a + v); });
    if (cross)
      for (int v = 0; v < a; ++v) rows[a + u].set(v);
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }
Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<Bitset> rows(n, Bitset(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !g.adjacent(u, v)) rows[u].set(v);
  return Graph::from_rows(std::move(rows));
}

std::size_t induced_edge_count(const Graph& g, const VertexSet& u) {
  check_range(g, u);
  std::size_t twice = 0;
  u.for_each([&](int v) { twice += g.neighbors(v).intersection_count(u); });
  return twice / 2;
}

Rational edge_density(const Graph& g, const VertexSet& u) {
  const long k = u.count();
  const std::size_t e = induced_edge_count(g, u);
  if (k <= 1) return Rational(0);
  Rational d(static_cast<unsigned long>(e), static_cast<unsigned long>(k * (k - 1) / 2));
  d.canonicalize();
  return d;
}

TwoColoring::TwoColoring(Graph blue) : blue_(std::move(blue)), red_(complement(blue_)) {}

TwoColoring TwoColoring::uniform(int n, Color c) {
  Graph empty(n);
  return c == Color::Red ? TwoColoring(empty) : TwoColoring(complement(empty));
}

Graph monochromatic_subgraph(const TwoColoring& c, Color color) { return c.graph(color); }

SubColoring induced_coloring(const TwoColoring& c, const VertexSet& u) {
  Subgraph blue = induced_subgraph(c.graph(Color::Blue), u);
  return {TwoColoring(std::move(blue.graph)), std::move(blue.labels)};
}

PairCheck validate_mono_pair(const TwoColoring& c, const VertexSet& x, const VertexSet& y) {
  if (x.size() != c.order() || y.size() != c.order())
    throw std::out_of_range("vertex set sized for a different coloring");
  if (x.empty()) throw std::invalid_argument("monochromatic pair needs a nonempty X");
  if (x.intersects(y)) throw std::invalid_argument("X and Y overlap");

  const VertexSet both = x | y;
  PairCheck out;
  std::optional<std::pair<Edge, Color>> first;
  for (int a = x.first(); a >= 0; a = x.next(a + 1)) {
    for (int b = both.first(); b >= 0; b = both.next(b + 1)) {
      if (b == a) continue;
      // edges within X are visited twice; keep the first visit only
      if (x.test(b) && b < a) continue;
      const Color col = c.color(a, b);
      if (!first) {
        first = {Edge(a, b), col};
      } else if (col != first->second) {
        out.status = PairCheck::Status::Violated;
        out.violation = PairViolation{Edge(a, b), col, first->first, first->second};
        return out;
      }
    }
  }
  if (first) {
    out.status = PairCheck::Status::Monochromatic;
    out.color = first->second;
  }
  return out;
}

bool is_valid_mono_pair(const TwoColoring& c, const MonoPair& p) {
  const PairCheck check = validate_mono_pair(c, p.x, p.y);
  switch (check.status) {
    case PairCheck::Status::Vacuous:
      return true;
    case PairCheck::Status::Monochromatic:
      return check.color == p.color;
    case PairCheck::Status::Violated:
      return false;
  }
  return false;
}

MonoPair lift_pair(const MonoPair& p, std::span<const Vertex> labels, int host_order) {
  MonoPair out{VertexSet(host_order), VertexSet(host_order), p.color};
  p.x.for_each([&](int v) { out.x.set(labels[v]); });
  p.y.for_each([&](int v) { out.y.set(labels[v]); });
  return out;
}

bool check_embedding(const TwoColoring& c, const Embedding& e) {
  const int k = e.pattern.order();
  if (static_cast<int>(e.host.size()) != k) return false;
  VertexSet used(c.order());
  for (Vertex h : e.host) {
    if (h < 0 || h >= c.order() || used.test(h)) return false;
    used.set(h);
  }
  for (const Edge& ed : e.pattern.edges())
    if (c.color(e.host[ed.u], e.host[ed.v]) != e.color) return false;
  return true;
}

}  // namespace ramsey
