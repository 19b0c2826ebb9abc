#include "ramsey/embed.hpp"

#include <stdexcept>

namespace ramsey {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Failure:
      return "failure";
    case SearchStatus::Inconclusive:
      return "inconclusive";
  }
  return "failure";
}

namespace {

/// Pattern vertex order where each vertex has as many earlier neighbours as possible.
std::vector<Vertex> search_order(const Graph& pattern, std::vector<Vertex> seed) {
  const int n = pattern.order();
  std::vector<char> placed(n, 0);
  std::vector<int> back(n, 0);
  auto place = [&](Vertex v) {
    placed[v] = 1;
    pattern.neighbors(v).for_each([&](int w) { ++back[w]; });
  };
  for (Vertex v : seed) place(v);
  std::vector<Vertex> order = std::move(seed);
  while (static_cast<int>(order.size()) < n) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 || back[v] > back[best] || (back[v] == back[best] && pattern.degree(v) > pattern.degree(best)))
        best = v;
    }
    order.push_back(best);
    place(best);
  }
  return order;
}

class Matcher {
public:
  Matcher(const std::vector<Bitset>& rows, const Graph& pattern, const EmbedOptions& options)
      : rows_(rows), pattern_(pattern), cap_(options.node_cap), map_(pattern.order(), -1) {}

  MappingResult run(const std::vector<Vertex>& order, const VertexSet& within, std::size_t fixed) {
    order_ = order;
    within_ = within;
    used_ = Bitset(within.size());
    for (std::size_t i = 0; i < fixed; ++i) used_.set(map_[order_[i]]);
    MappingResult r;
    const bool found = extend(fixed);
    r.nodes = nodes_;
    if (found) {
      r.status = SearchStatus::Found;
      r.mapping = map_;
    } else {
      r.status = aborted_ ? SearchStatus::Inconclusive : SearchStatus::Failure;
    }
    return r;
  }

  void fix(Vertex pattern_vertex, Vertex host_vertex) { map_[pattern_vertex] = host_vertex; }

private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex pv = order_[depth];
    Bitset cand = within_;
    cand.subtract(used_);
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex w = order_[i];
      if (pattern_.adjacent(pv, w)) cand &= rows_[map_[w]];
    }
    for (int h = cand.first(); h >= 0; h = cand.next(h + 1)) {
      if (cap_ && nodes_ >= cap_) {
        aborted_ = true;
        return false;
      }
      ++nodes_;
      map_[pv] = h;
      used_.set(h);
      if (extend(depth + 1)) return true;
      used_.reset(h);
      map_[pv] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  const std::vector<Bitset>& rows_;
  const Graph& pattern_;
  std::uint64_t cap_;
  std::vector<Vertex> map_;
  std::vector<Vertex> order_;
  VertexSet within_;
  VertexSet used_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

MappingResult find_mapping(const std::vector<Bitset>& rows, const Graph& pattern, const VertexSet& within,
                           const EmbedOptions& options) {
  if (within.size() != static_cast<int>(rows.size())) throw std::out_of_range("within set does not match host order");
  if (pattern.order() == 0) return {SearchStatus::Found, {}, 0};
  if (pattern.order() > within.count()) return {SearchStatus::Failure, {}, 0};
  Matcher m(rows, pattern, options);
  return m.run(search_order(pattern, {}), within, 0);
}

MappingResult find_mapping_through(const std::vector<Bitset>& rows, const Graph& pattern, Vertex a, Vertex b,
                                   const EmbedOptions& options) {
  const int n = static_cast<int>(rows.size());
  if (a < 0 || b < 0 || a >= n || b >= n) throw std::out_of_range("host edge out of range");
  MappingResult total;
  if (!rows[a].test(b) || pattern.order() > n) return total;
  const VertexSet all = Bitset::full(n);
  EmbedOptions remaining = options;
  for (const Edge& e : pattern.edges()) {
    for (int flip = 0; flip < 2; ++flip) {
      const Vertex pu = flip ? e.v : e.u;
      const Vertex pv = flip ? e.u : e.v;
      Matcher m(rows, pattern, remaining);
      m.fix(pu, a);
      m.fix(pv, b);
      MappingResult r = m.run(search_order(pattern, {pu, pv}), all, 2);
      total.nodes += r.nodes;
      if (r.status != SearchStatus::Failure) {
        r.nodes = total.nodes;
        return r;
      }
      if (remaining.node_cap) remaining.node_cap = remaining.node_cap > r.nodes ? remaining.node_cap - r.nodes : 1;
    }
  }
  return total;
}

EmbedResult greedy_embed(const TwoColoring& c, const Graph& pattern, Color color, const VertexSet& within,
                         const EmbedOptions& options) {
  const MappingResult r = find_mapping(c.graph(color).rows(), pattern, within, options);
  EmbedResult out{r.status, std::nullopt, r.nodes};
  if (r.status == SearchStatus::Found) {
    Embedding e{pattern, r.mapping, color};
    if (!check_embedding(c, e)) throw std::logic_error("embedder produced an invalid embedding");
    out.embedding = std::move(e);
  }
  return out;
}

EmbedResult greedy_embed(const TwoColoring& c, const Graph& pattern, Color color, const EmbedOptions& options) {
  return greedy_embed(c, pattern, color, Bitset::full(c.order()), options);
}

}  // namespace ramsey
