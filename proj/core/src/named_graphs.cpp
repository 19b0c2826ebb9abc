#include "ramsey/named_graphs.hpp"

#include <charconv>
#include <random>
#include <stdexcept>
#include <vector>

namespace ramsey {

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int q) {
  std::vector<Edge> edges;
  for (int i = 1; i <= q; ++i) edges.emplace_back(0, i);
  return Graph(q + 1, edges);
}

namespace {

int parse_count(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < 0)
    throw std::invalid_argument("bad size in graph name '" + std::string(whole) + "'");
  return value;
}

Graph single_named(std::string_view name) {
  if (name.starts_with("star-")) return star_graph(parse_count(name.substr(5), name));
  if (name.size() >= 2) {
    const int n = parse_count(name.substr(1), name);
    switch (name[0]) {
      case 'k':
      case 'K':
        return complete_graph(n);
      case 'e':
      case 'E':
        return edgeless_graph(n);
      case 'p':
      case 'P':
        return path_graph(n);
      case 'c':
      case 'C':
        return cycle_graph(n);
      default:
        break;
    }
  }
  throw std::invalid_argument("unknown graph name '" + std::string(name) + "'");
}

}  // namespace

Graph named_graph(std::string_view name) {
  const auto plus = name.find('+');
  if (plus == std::string_view::npos) return single_named(name);
  return join(single_named(name.substr(0, plus)), named_graph(name.substr(plus + 1)));
}

TwoColoring pentagon_coloring() {
  std::vector<Edge> blue;
  for (int i = 0; i < 5; ++i) blue.emplace_back(i, (i + 2) % 5);
  return TwoColoring(Graph(5, blue));
}

TwoColoring random_coloring(int n, double blue_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> blue;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < blue_probability) blue.emplace_back(i, j);
    }
  return TwoColoring(Graph(n, blue));
}

TwoColoring named_coloring(std::string_view name) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto colon = name.find(':', pos);
    parts.push_back(name.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts[0] == "pentagon" && parts.size() == 1) return pentagon_coloring();
  if ((parts[0] == "all-red" || parts[0] == "all-blue") && parts.size() == 2)
    return TwoColoring::uniform(parse_count(parts[1], name), parts[0] == "all-red" ? Color::Red : Color::Blue);
  if (parts[0] == "random" && parts.size() == 4) {
    const int n = parse_count(parts[1], name);
    const double p = std::stod(std::string(parts[2]));
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(parts[3].data(), parts[3].data() + parts[3].size(), seed);
    if (ec != std::errc() || ptr != parts[3].data() + parts[3].size())
      throw std::invalid_argument("bad seed in coloring name '" + std::string(name) + "'");
    return random_coloring(n, p, seed);
  }
  throw std::invalid_argument("unknown coloring name '" + std::string(name) + "'");
}

}  // namespace ramsey
