#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Malformed graph or coloring text. line() is 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line) : std::runtime_error(format(what, line)), line_(line) {}
  int line() const { return line_; }

private:
  static std::string format(const std::string& what, int line) {
    return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
  }
  int line_;
};

// Edge list: one "u v" pair per line, 0-based labels. '#' starts a comment.
// An optional first data line holding a single integer fixes the vertex count;
// otherwise the count is one more than the largest label.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// graph6, including the optional ">>graph6<<" header.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// graph6 if the first data line is a single token of printable graph6 bytes, else edge list.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

// Coloring: the vertex count n, then C(n,2) characters over pairs (i<j) in
// row-major order, '1' = blue and '0' = red. Whitespace between them is ignored.
TwoColoring parse_coloring(std::string_view text);
std::string write_coloring(const TwoColoring& c);
TwoColoring read_coloring_file(const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace ramsey
