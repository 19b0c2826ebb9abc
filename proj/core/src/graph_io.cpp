#include "ramsey/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace ramsey {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, int line) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw ParseError("expected a nonnegative integer, got '" + std::string(tok) + "'", line);
  return value;
}

template <typename F>
void for_each_data_line(std::string_view text, F&& f) {
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) f(line, line_no);
    pos = end + 1;
  }
}

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_graph6_byte(char c) { return c >= 63 && c <= 126; }

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  long declared = -1;
  long max_label = -1;
  bool seen_data = false;
  for_each_data_line(text, [&](std::string_view line, int line_no) {
    auto toks = split_ws(line);
    if (toks.size() == 1 && !seen_data) {
      declared = parse_int(toks[0], line_no);
      seen_data = true;
      return;
    }
    seen_data = true;
    if (toks.size() != 2) throw ParseError("expected 'u v', got '" + std::string(line) + "'", line_no);
    const long u = parse_int(toks[0], line_no);
    const long v = parse_int(toks[1], line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (declared >= 0 && (u >= declared || v >= declared))
      throw ParseError("vertex label exceeds declared count " + std::to_string(declared), line_no);
    max_label = std::max({max_label, u, v});
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  });
  const long n = declared >= 0 ? declared : max_label + 1;
  return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kGraph6Header)) text.remove_prefix(kGraph6Header.size());
  if (auto nl = text.find('\n'); nl != std::string_view::npos) {
    if (!trim(text.substr(nl)).empty()) throw ParseError("graph6: expected a single graph", 0);
    text = trim(text.substr(0, nl));
  }
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  for (std::size_t i = 0; i < text.size(); ++i)
    if (!is_graph6_byte(text[i]))
      throw ParseError("graph6: byte " + std::to_string(i) + " outside 63..126", 1);

  std::size_t pos = 0;
  auto take = [&](int count) {
    long value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated vertex count", 1);
      value = (value << 6) | (text[pos++] - kGraph6Bias);
    }
    return value;
  };

  long n;
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  if (n > (1L << 20)) throw ParseError("graph6: vertex count too large", 1);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " adjacency bytes, found " +
                         std::to_string(text.size() - pos),
                     1);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  // padding bits must be zero
  for (; k < need * 6; ++k) {
    const int byte = text[pos + k / 6] - kGraph6Bias;
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("graph6: nonzero padding bits", 1);
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  std::string out;
  const long n = g.order();
  auto put = [&](long value, int count) {
    for (int i = count - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kGraph6Bias));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.push_back(126);
    out.push_back(126);
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (long j = 1; j < n; ++j)
    for (long i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<int>(i), static_cast<int>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  return out;
}

Graph parse_graph(std::string_view text) {
  std::string_view first;
  for_each_data_line(text, [&](std::string_view line, int) {
    if (first.empty()) first = line;
  });
  if (first.starts_with(kGraph6Header)) return parse_graph6(text);
  const bool g6 = !first.empty() && split_ws(first).size() == 1 &&
                  std::all_of(first.begin(), first.end(), is_graph6_byte);
  return g6 ? parse_graph6(text) : parse_edge_list(text);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  if (path.extension() == ".g6") return parse_graph6(text);
  return parse_graph(text);
}

TwoColoring parse_coloring(std::string_view text) {
  std::string bits;
  long n = -1;
  for_each_data_line(text, [&](std::string_view line, int line_no) {
    if (n < 0) {
      auto toks = split_ws(line);
      n = parse_int(toks[0], line_no);
      if (n > 4096) throw ParseError("coloring: vertex count too large", line_no);
      for (std::size_t i = 1; i < toks.size(); ++i) bits.append(toks[i]);
    } else {
      for (auto tok : split_ws(line)) bits.append(tok);
    }
    for (char ch : bits)
      if (ch != '0' && ch != '1') throw ParseError(std::string("coloring: unexpected character '") + ch + "'", line_no);
  });
  if (n < 0) throw ParseError("coloring: missing vertex count", 0);
  const std::size_t need = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (bits.size() != need)
    throw ParseError("coloring: expected " + std::to_string(need) + " pair bits, found " + std::to_string(bits.size()), 0);
  std::vector<Edge> blue;
  std::size_t k = 0;
  for (long i = 0; i < n; ++i)
    for (long j = i + 1; j < n; ++j, ++k)
      if (bits[k] == '1') blue.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return TwoColoring(Graph(static_cast<int>(n), blue));
}

std::string write_coloring(const TwoColoring& c) {
  std::string out = std::to_string(c.order()) + "\n";
  for (int i = 0; i < c.order(); ++i)
    for (int j = i + 1; j < c.order(); ++j) out.push_back(c.color(i, j) == Color::Blue ? '1' : '0');
  out.push_back('\n');
  return out;
}

TwoColoring read_coloring_file(const std::filesystem::path& path) { return parse_coloring(read_text_file(path)); }

}  // namespace ramsey
